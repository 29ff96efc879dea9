#include "ilues/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilues {

namespace {

Eigen::MatrixXd centered(const Eigen::MatrixXd& a) {
  return a.colwise() - a.rowwise().mean();
}

}  // namespace

Eigen::MatrixXd cross_covariance(const Ensemble& m, const PredictionSet& p) {
  if (m.n_members() != p.n_members())
    throw std::invalid_argument("cross_covariance: ensemble/prediction member counts differ");
  const Eigen::Index ne = m.n_members();
  if (ne < 2) throw std::invalid_argument("cross_covariance: need at least 2 members");
  return centered(m.params) * centered(p.outputs).transpose() / double(ne - 1);
}

Eigen::MatrixXd auto_covariance(const PredictionSet& p) {
  const Eigen::Index ne = p.n_members();
  if (ne < 2) throw std::invalid_argument("auto_covariance: need at least 2 members");
  Eigen::MatrixXd c = centered(p.outputs);
  Eigen::MatrixXd cov = c * c.transpose() / double(ne - 1);
  // symmetrize away rounding asymmetry from the product
  return (cov + cov.transpose()) / 2.0;
}

SpdSolveResult spd_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs, double jitter) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spd_solve: matrix not square");
  if (a.rows() != rhs.rows()) throw std::invalid_argument("spd_solve: rhs row count mismatch");
  if (!a.allFinite() || !rhs.allFinite())
    throw std::invalid_argument("spd_solve: non-finite input");
  if (jitter < 0.0) throw std::invalid_argument("spd_solve: negative jitter");

  const double diag_scale = a.diagonal().mean();
  const double rhs_norm = rhs.norm();

  double levels[] = {jitter, 1e-10, 1e-8, 1e-6};
  for (double level : levels) {
    if (level < jitter) continue;
    Eigen::MatrixXd regularized = a;
    if (level > 0.0) regularized.diagonal().array() += level * diag_scale;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(regularized);
    if (ldlt.info() != Eigen::Success) continue;
    Eigen::MatrixXd x = ldlt.solve(rhs);
    if (!x.allFinite()) continue;
    const double residual = (regularized * x - rhs).norm();
    if (residual <= 1e-8 * rhs_norm + 1e-300) return {std::move(x), level};
  }
  throw std::runtime_error("spd_solve: factorization failed at maximum jitter 1e-6");
}

Eigen::VectorXd log_rmse(const PredictionSet& p, const Eigen::VectorXd& d) {
  if (p.n_outputs() != d.size())
    throw std::invalid_argument("log_rmse: prediction/data dimension mismatch");
  const Eigen::Index nd = p.n_outputs();
  Eigen::VectorXd out(p.n_members());
  for (Eigen::Index j = 0; j < p.n_members(); ++j) {
    const double mse = (p.outputs.col(j) - d).squaredNorm() / double(nd);
    const double rmse = std::sqrt(mse);
    out[j] = rmse > 0.0 ? std::max(std::log10(rmse), kLogRmseFloor) : kLogRmseFloor;
  }
  return out;
}

double median(Eigen::VectorXd v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw std::invalid_argument("median: empty vector");
  double* begin = v.data();
  double* mid = begin + n / 2;
  std::nth_element(begin, mid, begin + n);
  if (n % 2 == 1) return *mid;
  double hi = *mid;
  double lo = *std::max_element(begin, mid);
  return (lo + hi) / 2.0;
}

}  // namespace ilues
