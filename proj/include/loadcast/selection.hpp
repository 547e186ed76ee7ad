#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loadcast/features.hpp"
#include "loadcast/ols.hpp"

namespace loadcast {

// Knobs for the greedy forward search.  The criterion is
//   GIC(k) = n * ln(rss / n) + penalty * k
// with k counting selected features beyond the intercept.
struct SelectionConfig {
    // Per-feature penalty; unset resolves to ln(n) at fit time.
    std::optional<double> penalty;
    int max_features = 30;
    // A step is accepted only when it lowers GIC by more than this.  IC
    // differences below ~2 are conventionally noise, so that is the default.
    double min_improvement = 2.0;
    // Features seeded into the model before the greedy loop (trend forcing).
    std::vector<std::string> forced;

    double resolve_penalty(std::size_t n) const;
    void validate() const;
};

// One fitted per-hour model: the selected subset and its least-squares fit.
struct LinearModel {
    int hour = 0; // 1..24
    std::vector<std::string> selected; // feature ids in order of addition
    std::vector<double> coefficients;  // aligned with `selected`
    double intercept = 0.0;
    struct FitStats {
        std::size_t n = 0;
        double rss = 0.0;
        double criterion = 0.0;
    } fit_stats;

    bool uses(const std::string& id) const;
    // Largest moving-average backfill any selected feature needs.
    int max_backfill_hours() const;
};

// Greedy forward subset selection over a materialized catalog.  Starting
// from the intercept (plus any forced features), each step adds the
// candidate with the largest residual-sum-of-squares drop and keeps it only
// if the criterion improves by more than min_improvement; ties go to the
// earlier catalog position.  The returned model is refit with fit_ols on the
// selected columns.
LinearModel select_subset(const FeatureCatalog& catalog, const DesignMatrix& x_full,
                          const Eigen::VectorXd& y, const SelectionConfig& config);

} // namespace loadcast
