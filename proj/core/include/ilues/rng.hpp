#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace ilues {

/// splitmix64 finalizer; used to derive substream keys from integer tags.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Keyed RNG stream. Child streams are derived from integer tags, never from
/// draw order, so results do not depend on evaluation schedule or worker
/// count. Copying is cheap; the engine is materialized on demand.
class RngStream {
 public:
  RngStream() : key_(mix64(0)) {}
  explicit RngStream(std::uint64_t seed) : key_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  RngStream fork(std::uint64_t tag) const {
    RngStream child;
    child.key_ = mix64(key_ ^ mix64(tag));
    return child;
  }
  RngStream fork(std::uint64_t a, std::uint64_t b) const { return fork(a).fork(b); }
  RngStream fork(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return fork(a).fork(b).fork(c);
  }

  std::uint64_t key() const { return key_; }
  std::mt19937_64 engine() const { return std::mt19937_64(key_); }

 private:
  std::uint64_t key_;
};

// Purpose tags for substream derivation. Keeping them distinct prevents
// accidental stream reuse between unrelated draw sites.
namespace rng_tag {
inline constexpr std::uint64_t perturb = 0x11;   // measurement perturbations, then member index
inline constexpr std::uint64_t prior = 0x22;     // prior sampling, then member index
inline constexpr std::uint64_t pick = 0x33;      // updated-sample choice, then anchor index
inline constexpr std::uint64_t iteration = 0x44; // outer smoother/ILUES iteration
inline constexpr std::uint64_t chain = 0x55;     // MCMC chain index
inline constexpr std::uint64_t noise = 0x66;     // measurement generation noise
inline constexpr std::uint64_t forcing = 0x77;   // synthetic forcing generation
inline constexpr std::uint64_t sweep = 0x88;     // sweep cell/replicate seeds
}  // namespace rng_tag

/// n iid standard normal draws from a fresh engine on `stream`.
inline Eigen::VectorXd standard_normal(const RngStream& stream, Eigen::Index n) {
  auto gen = stream.engine();
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z[i] = dist(gen);
  return z;
}

}  // namespace ilues
