#include "loadcast/evaluation.hpp"

#include <cmath>

#include "loadcast/errors.hpp"

namespace loadcast {

double pinball(double y, double z, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw DomainError("pinball: tau must be in (0, 1)");
    return y >= z ? (y - z) * tau : (z - y) * (1.0 - tau);
}

PinballResult total_pinball(const HourlySeries& actuals, const QuantileForecast& forecast) {
    if (actuals.timestamps.size() != forecast.timestamps.size())
        throw AlignmentError("total_pinball: series lengths differ");
    for (std::size_t i = 0; i < actuals.timestamps.size(); ++i)
        if (actuals.timestamps[i] != forecast.timestamps[i])
            throw AlignmentError("total_pinball: timestamps differ at " +
                                 actuals.timestamps[i].iso());
    if (actuals.timestamps.empty()) throw DomainError("total_pinball: empty series");

    PinballResult result;
    const std::size_t n = actuals.timestamps.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < kDecileLevels.size(); ++q)
            result.per_level[q] += pinball(actuals.values[i], forecast.values[i][q], kDecileLevels[q]);

    double sum = 0.0;
    for (auto& level_sum : result.per_level) {
        sum += level_sum;
        level_sum /= static_cast<double>(n);
    }
    result.n_terms = n * kDecileLevels.size();
    result.total = sum / static_cast<double>(result.n_terms);
    result.per_timestamp_mean = sum / static_cast<double>(n);
    return result;
}

double relative_score(double model_loss, double bench_loss) {
    if (!(bench_loss > 0.0)) throw DomainError("relative_score: benchmark loss must be > 0");
    return 100.0 * (bench_loss - model_loss) / bench_loss;
}

double round_score(const std::vector<double>& zone_scores) {
    if (zone_scores.empty()) throw DomainError("round_score: no zone scores");
    double sum = 0.0;
    for (double s : zone_scores) sum += s;
    return sum / static_cast<double>(zone_scores.size());
}

double round_half_up_2dp(double value) {
    return std::floor(value * 100.0 + 0.5) / 100.0;
}

} // namespace loadcast
