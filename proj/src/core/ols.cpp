#include "core/ols.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace tendex {

OlsFit ols_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    const auto rows = design.rows();
    const auto cols = design.cols();
    if (rows != response.size())
        throw Error(Status::InvalidArgument, "ShapeMismatch: design rows != response length");
    if (rows < cols + 1)
        throw Error(Status::SeriesTooShort,
                    "SeriesTooShort: need at least cols + 1 rows for a residual variance estimate");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    const Eigen::MatrixXd r =
        qr.matrixR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < cols; ++k) {
        const double d = std::fabs(r(k, k));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    if (dmin < 1e-10 * dmax)
        throw Error(Status::RankDeficient,
                    "RankDeficient: design matrix is rank deficient within tolerance");

    OlsFit fit;
    fit.coefficients = qr.solve(response);
    const Eigen::VectorXd resid = response - design * fit.coefficients;
    fit.residual_variance = resid.squaredNorm() / static_cast<double>(rows - cols);

    // X P = Q R, so (X'X)^-1 = P (R'R)^-1 P'. Diagonal entry j is entry
    // (q, q) of R^-1 R^-T, q being the pivoted slot original column j went to.
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(cols, cols));
    const Eigen::MatrixXd xtx_inv_pivoted = r_inv * r_inv.transpose();
    const auto& ind = qr.colsPermutation().indices();
    Eigen::VectorXi slot(cols);
    for (Eigen::Index q = 0; q < cols; ++q) slot(ind(q)) = static_cast<int>(q);
    fit.standard_errors.resize(cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Eigen::Index q = slot(j);
        fit.standard_errors(j) = std::sqrt(fit.residual_variance * xtx_inv_pivoted(q, q));
    }
    return fit;
}

} // namespace tendex
