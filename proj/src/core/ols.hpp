#pragma once

#include <Eigen/Dense>

namespace tendex {

struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    double residual_variance = 0.0; ///< unbiased: RSS / (rows - cols)
};

/// Least squares via a column-pivoted Householder QR. Requires
/// rows >= cols + 1. Throws RankDeficient when the smallest diagonal of the
/// triangular factor is below 1e-10 times the largest.
OlsFit ols_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

} // namespace tendex
