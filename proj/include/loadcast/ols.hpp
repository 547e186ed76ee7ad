#pragma once

#include <Eigen/Dense>
#include <vector>

namespace loadcast {

struct OlsFit {
    double intercept = 0.0;
    Eigen::VectorXd coefficients;   // one per input column; 0 for dropped columns
    std::vector<int> dropped;       // input column indices removed as rank-deficient
    double rss = 0.0;
    std::size_t n = 0;

    Eigen::VectorXd predict(const Eigen::MatrixXd& x) const {
        return (x * coefficients).array() + intercept;
    }
};

// Least squares of y on [1 | X] via modified Gram-Schmidt QR with
// reorthogonalization.  Columns whose orthogonalized norm falls below
// `rank_tol` times their original norm are dropped; the first-listed of any
// collinear group is the one kept.  Throws InsufficientDataError when
// rows < cols + 1.
OlsFit fit_ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double rank_tol = 1e-8);

} // namespace loadcast
