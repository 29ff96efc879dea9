#pragma once

#include <Eigen/Dense>

#include "ilues/types.hpp"

namespace ilues {

/// Sample cross-covariance C_MD between parameter and prediction ensembles,
/// with the unbiased 1/(N_e - 1) normalization.
Eigen::MatrixXd cross_covariance(const Ensemble& m, const PredictionSet& p);

/// Sample auto-covariance C_DD of a prediction ensemble (symmetric PSD).
Eigen::MatrixXd auto_covariance(const PredictionSet& p);

struct SpdSolveResult {
  Eigen::MatrixXd x;
  double jitter_used = 0.0;  // relative diagonal level that produced x
};

/// Solves (a + jitter * mean(diag(a)) * I) x = rhs for symmetric a. Starts at
/// the requested relative jitter and escalates through {1e-10, 1e-8, 1e-6}
/// until the factorization succeeds and the residual is within
/// 1e-8 * ||rhs||_F. Throws on non-finite input or failure at the top level.
SpdSolveResult spd_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs,
                         double jitter = 0.0);

/// Per-member log10 RMSE between predictions and the data vector d. An exact
/// match (rmse == 0) is floored at -300.
Eigen::VectorXd log_rmse(const PredictionSet& p, const Eigen::VectorXd& d);

inline constexpr double kLogRmseFloor = -300.0;

double median(Eigen::VectorXd v);  // by value: partially sorts its copy

}  // namespace ilues
