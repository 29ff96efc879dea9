#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ilues {

/// Ensemble of parameter samples. Columns are members m_j, rows are
/// parameters; param_names has one entry per row.
struct Ensemble {
  Eigen::MatrixXd params;  // N_m x N_e
  std::vector<std::string> param_names;

  Eigen::Index n_params() const { return params.rows(); }
  Eigen::Index n_members() const { return params.cols(); }
};

/// Model outputs for an ensemble; column j is f(m_j).
struct PredictionSet {
  Eigen::MatrixXd outputs;  // N_d x N_e

  Eigen::Index n_outputs() const { return outputs.rows(); }
  Eigen::Index n_members() const { return outputs.cols(); }
};

/// Observed data d with its error covariance C_D (symmetric positive
/// definite).
struct Measurement {
  Eigen::VectorXd d;
  Eigen::MatrixXd c_d;

  Eigen::Index n_obs() const { return d.size(); }
};

/// Per-member measurement realizations d_j = d + eps_j, one column each.
struct PerturbedMeasurements {
  Eigen::MatrixXd realizations;  // N_d x N_e
};

void check_ensemble(const Ensemble& m);
void check_predictions(const PredictionSet& p);

/// Throws unless c_d is symmetric (1e-12 relative) and positive definite.
void check_measurement(const Measurement& meas);

std::vector<std::string> default_names(const std::string& prefix, Eigen::Index n);

}  // namespace ilues
