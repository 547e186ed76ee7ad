#include "loadcast/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loadcast/errors.hpp"

namespace loadcast {

double SelectionConfig::resolve_penalty(std::size_t n) const {
    const double value = penalty ? *penalty : std::log(static_cast<double>(n));
    return value;
}

void SelectionConfig::validate() const {
    if (penalty && *penalty <= 0.0) throw ConfigError("selection: penalty must be > 0");
    if (max_features < 1) throw ConfigError("selection: max_features must be >= 1");
    if (min_improvement < 0.0) throw ConfigError("selection: min_improvement must be >= 0");
}

bool LinearModel::uses(const std::string& id) const {
    return std::find(selected.begin(), selected.end(), id) != selected.end();
}

int LinearModel::max_backfill_hours() const {
    int best = 0;
    for (const std::string& id : selected)
        best = std::max(best, FeatureSpec::parse(id).backfill_hours());
    return best;
}

namespace {

// Guards ln(rss/n) when a fit is numerically exact.
double safe_log_mean_rss(double rss, std::size_t n) {
    const double mean = std::max(rss, 1e-300) / static_cast<double>(n);
    return std::log(mean);
}

} // namespace

LinearModel select_subset(const FeatureCatalog& catalog, const DesignMatrix& x_full,
                          const Eigen::VectorXd& y, const SelectionConfig& config) {
    config.validate();
    if (x_full.cols() != catalog.size())
        throw ConfigError("select_subset: design matrix does not match catalog");
    const auto n_rows = static_cast<Eigen::Index>(x_full.rows());
    if (n_rows != y.size())
        throw InsufficientDataError("select_subset: y length does not match design rows");
    if (n_rows < 2) throw InsufficientDataError("select_subset: need at least 2 rows");

    const std::size_t n = static_cast<std::size_t>(n_rows);
    const double penalty = config.resolve_penalty(n);

    // Column bookkeeping: intercept is the base, forced ids enter first,
    // everything else competes in the greedy loop.
    Eigen::Index intercept_col = -1;
    std::vector<Eigen::Index> forced_cols;
    std::vector<Eigen::Index> candidate_cols;
    for (std::size_t j = 0; j < catalog.size(); ++j) {
        const std::string& id = x_full.column_ids[j];
        if (id == "intercept") {
            intercept_col = static_cast<Eigen::Index>(j);
        } else if (std::find(config.forced.begin(), config.forced.end(), id) !=
                   config.forced.end()) {
            forced_cols.push_back(static_cast<Eigen::Index>(j));
        } else {
            candidate_cols.push_back(static_cast<Eigen::Index>(j));
        }
    }
    if (intercept_col < 0) throw ConfigError("select_subset: catalog has no intercept");

    const double collinear_tol = 1e-8;

    // Orthonormal basis of the growing selected set.
    std::vector<Eigen::VectorXd> basis;
    Eigen::VectorXd residual = y;
    auto orthogonalize = [&](Eigen::VectorXd v) -> std::pair<Eigen::VectorXd, double> {
        const double original = v.norm();
        for (int pass = 0; pass < 2; ++pass)
            for (const Eigen::VectorXd& q : basis) v.noalias() -= q.dot(v) * q;
        const double remaining = v.norm();
        if (original == 0.0 || remaining <= collinear_tol * original)
            return {Eigen::VectorXd(), 0.0};
        return {v / remaining, remaining};
    };
    auto commit = [&](const Eigen::VectorXd& q) {
        residual.noalias() -= q.dot(residual) * q;
        basis.push_back(q);
    };

    std::vector<std::string> selected;
    commit(orthogonalize(Eigen::VectorXd::Ones(n_rows)).first); // never degenerate
    for (Eigen::Index col : forced_cols) {
        const auto [q, norm] = orthogonalize(x_full.values.col(col));
        if (norm == 0.0) continue; // forced feature collinear with base; skip
        commit(q);
        selected.push_back(x_full.column_ids[static_cast<std::size_t>(col)]);
    }

    // Candidates are residualized in place as the basis grows.
    Eigen::MatrixXd cand(n_rows, static_cast<Eigen::Index>(candidate_cols.size()));
    Eigen::VectorXd cand_orig_norm(static_cast<Eigen::Index>(candidate_cols.size()));
    for (std::size_t j = 0; j < candidate_cols.size(); ++j) {
        cand.col(static_cast<Eigen::Index>(j)) = x_full.values.col(candidate_cols[j]);
        cand_orig_norm(static_cast<Eigen::Index>(j)) = cand.col(static_cast<Eigen::Index>(j)).norm();
    }
    for (const Eigen::VectorXd& q : basis)
        cand.noalias() -= q * (q.transpose() * cand);
    std::vector<bool> active(candidate_cols.size(), true);

    const double total_ss = residual.squaredNorm();
    const double rss_floor =
        std::max(1e-12, total_ss * 1e-14) ; // below this the fit is numerically exact

    double rss = total_ss;
    double gic = static_cast<double>(n) * safe_log_mean_rss(rss, n) +
                 penalty * static_cast<double>(selected.size());

    while (static_cast<int>(selected.size()) < config.max_features && rss > rss_floor) {
        // Best candidate = largest projected RSS drop; first index wins ties.
        std::ptrdiff_t best = -1;
        double best_gain = 0.0;
        for (std::size_t j = 0; j < candidate_cols.size(); ++j) {
            if (!active[j]) continue;
            const auto col = static_cast<Eigen::Index>(j);
            const double norm = cand.col(col).norm();
            if (norm <= collinear_tol * cand_orig_norm(col) || cand_orig_norm(col) == 0.0) {
                active[j] = false;
                continue;
            }
            const double proj = cand.col(col).dot(residual) / norm;
            const double gain = proj * proj;
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<std::ptrdiff_t>(j);
            }
        }
        if (best < 0) break;

        const double candidate_rss = std::max(rss - best_gain, 0.0);
        const double candidate_gic =
            static_cast<double>(n) * safe_log_mean_rss(candidate_rss, n) +
            penalty * static_cast<double>(selected.size() + 1);
        if (gic - candidate_gic <= config.min_improvement) break;

        // Re-orthogonalize against the full basis before committing so the
        // accepted direction stays numerically orthonormal.
        auto [q, norm] = orthogonalize(cand.col(static_cast<Eigen::Index>(best)));
        if (norm == 0.0) {
            active[static_cast<std::size_t>(best)] = false;
            continue;
        }
        commit(q);
        selected.push_back(
            x_full.column_ids[static_cast<std::size_t>(candidate_cols[static_cast<std::size_t>(best)])]);
        active[static_cast<std::size_t>(best)] = false;
        cand.noalias() -= q * (q.transpose() * cand);

        rss = residual.squaredNorm();
        gic = static_cast<double>(n) * safe_log_mean_rss(rss, n) +
              penalty * static_cast<double>(selected.size());
    }

    // Final refit on the original selected columns for clean coefficients.
    LinearModel model;
    model.selected = selected;
    Eigen::MatrixXd x_sel(n_rows, static_cast<Eigen::Index>(selected.size()));
    for (std::size_t j = 0; j < selected.size(); ++j) {
        const auto it = std::find(x_full.column_ids.begin(), x_full.column_ids.end(), selected[j]);
        x_sel.col(static_cast<Eigen::Index>(j)) =
            x_full.values.col(static_cast<Eigen::Index>(it - x_full.column_ids.begin()));
    }
    const OlsFit fit = fit_ols(x_sel, y);
    model.intercept = fit.intercept;
    model.coefficients.assign(fit.coefficients.data(), fit.coefficients.data() + fit.coefficients.size());
    model.fit_stats.n = n;
    model.fit_stats.rss = fit.rss;
    model.fit_stats.criterion = static_cast<double>(n) * safe_log_mean_rss(fit.rss, n) +
                                penalty * static_cast<double>(selected.size());
    return model;
}

} // namespace loadcast
