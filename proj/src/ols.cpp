#include "loadcast/ols.hpp"

#include <cmath>
#include <string>

#include "loadcast/errors.hpp"

namespace loadcast {

OlsFit fit_ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double rank_tol) {
    const Eigen::Index n = y.size();
    const Eigen::Index m = x.cols() + 1; // leading intercept column
    if (x.cols() > 0 && x.rows() != n)
        throw InsufficientDataError("fit_ols: X has " + std::to_string(x.rows()) +
                                    " rows but y has " + std::to_string(n));
    if (n < m)
        throw InsufficientDataError("fit_ols: " + std::to_string(n) + " rows for " +
                                    std::to_string(m) + " columns (need rows >= columns + 1)");

    OlsFit fit;
    fit.n = static_cast<std::size_t>(n);
    fit.coefficients = Eigen::VectorXd::Zero(x.cols());

    Eigen::MatrixXd q(n, m);           // orthonormal basis of kept columns
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(m, m);
    std::vector<Eigen::Index> kept;    // input column index per basis vector

    Eigen::VectorXd v(n);
    for (Eigen::Index j = 0; j < m; ++j) {
        if (j == 0)
            v.setOnes();
        else
            v = x.col(j - 1);
        const double original_norm = v.norm();

        // Two orthogonalization passes keep Q orthonormal to near machine
        // precision even for nearly collinear inputs.
        const auto k = static_cast<Eigen::Index>(kept.size());
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < k; ++i) {
                const double proj = q.col(i).dot(v);
                r(i, j) += proj;
                v.noalias() -= proj * q.col(i);
            }
        }

        const double remaining = v.norm();
        if (remaining <= rank_tol * original_norm || original_norm == 0.0) {
            if (j > 0) fit.dropped.push_back(static_cast<int>(j - 1));
            continue;
        }
        q.col(k) = v / remaining;
        r(k, j) = remaining;
        kept.push_back(j);
    }

    const auto rank = static_cast<Eigen::Index>(kept.size());
    const Eigen::VectorXd qty = q.leftCols(rank).transpose() * y;

    // Back-substitution on the kept upper-triangular system.
    Eigen::VectorXd beta(rank);
    for (Eigen::Index i = rank - 1; i >= 0; --i) {
        double acc = qty(i);
        for (Eigen::Index l = i + 1; l < rank; ++l) acc -= r(i, kept[static_cast<std::size_t>(l)]) * beta(l);
        beta(i) = acc / r(i, kept[static_cast<std::size_t>(i)]);
    }

    for (Eigen::Index i = 0; i < rank; ++i) {
        const Eigen::Index col = kept[static_cast<std::size_t>(i)];
        if (col == 0)
            fit.intercept = beta(i);
        else
            fit.coefficients(col - 1) = beta(i);
    }

    const Eigen::VectorXd residual = y - q.leftCols(rank) * qty;
    fit.rss = residual.squaredNorm();
    return fit;
}

} // namespace loadcast
