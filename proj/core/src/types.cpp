#include "ilues/types.hpp"

#include <stdexcept>

namespace ilues {

void check_ensemble(const Ensemble& m) {
  if (m.n_params() < 1) throw std::invalid_argument("ensemble: need at least 1 parameter");
  if (m.n_members() < 2) throw std::invalid_argument("ensemble: need at least 2 members");
  if (!m.params.allFinite()) throw std::invalid_argument("ensemble: non-finite entries");
  if (!m.param_names.empty() &&
      m.param_names.size() != static_cast<std::size_t>(m.n_params()))
    throw std::invalid_argument("ensemble: param_names length mismatch");
}

void check_predictions(const PredictionSet& p) {
  if (!p.outputs.allFinite()) throw std::invalid_argument("predictions: non-finite entries");
}

void check_measurement(const Measurement& meas) {
  if (meas.d.size() < 1) throw std::invalid_argument("measurement: empty data vector");
  if (meas.c_d.rows() != meas.d.size() || meas.c_d.cols() != meas.d.size())
    throw std::invalid_argument("measurement: C_D shape mismatch");
  if (!meas.d.allFinite() || !meas.c_d.allFinite())
    throw std::invalid_argument("measurement: non-finite entries");
  const double scale = meas.c_d.cwiseAbs().maxCoeff();
  if ((meas.c_d - meas.c_d.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("measurement: C_D not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(meas.c_d);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("measurement: C_D not positive definite");
}

std::vector<std::string> default_names(const std::string& prefix, Eigen::Index n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace ilues
