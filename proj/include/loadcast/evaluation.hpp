#pragma once

#include <array>
#include <string>
#include <vector>

#include "loadcast/quantiles.hpp"
#include "loadcast/series.hpp"

namespace loadcast {

// L_tau(y, z) = (y - z) tau for y >= z, (z - y)(1 - tau) otherwise.
double pinball(double y, double z, double tau);

struct PinballResult {
    // Mean pinball loss over all (timestamp, level) terms.
    double total = 0.0;
    // Mean over timestamps, per decile level.
    std::array<double, 9> per_level{};
    // Mean over timestamps of the nine-level sum (= 9 * total).
    double per_timestamp_mean = 0.0;
    std::size_t n_terms = 0;
};

PinballResult total_pinball(const HourlySeries& actuals, const QuantileForecast& forecast);

// 100 * (bench - model) / bench, percent improvement over the benchmark.
double relative_score(double model_loss, double bench_loss);

// Arithmetic mean of per-zone scores.
double round_score(const std::vector<double>& zone_scores);

// Two-decimal half-up rounding used for report output.
double round_half_up_2dp(double value);

struct ScoreCard {
    std::string zone_id;
    int round_id = 0;
    double model_loss = 0.0;
    double bench_loss = 0.0;
    double score = 0.0; // percent
};

} // namespace loadcast
