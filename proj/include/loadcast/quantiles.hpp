#pragma once

#include <array>
#include <string>
#include <vector>

#include "loadcast/series.hpp"

namespace loadcast {

inline constexpr std::array<double, 9> kDecileLevels{0.1, 0.2, 0.3, 0.4, 0.5,
                                                     0.6, 0.7, 0.8, 0.9};

// Nine non-decreasing decile values per timestamp.
struct QuantileForecast {
    std::vector<Timestamp> timestamps;
    std::vector<std::array<double, 9>> values; // [timestamp][level]

    std::size_t size() const { return timestamps.size(); }
    bool monotone_levels() const;
};

// Type-7 empirical quantile: sort ascending into x[1..n], h = (n-1)p + 1,
// j = floor(h), gamma = h - j, result (1-gamma)x[j] + gamma x[j+1] with
// x[n+1] read as x[n] when gamma vanishes at the top.
double quantile_type7(std::vector<double> values, double p);

// Same formula on an already ascending-sorted range.
double quantile_type7_sorted(const std::vector<double>& sorted, double p);

// Per-timestamp deciles of K aligned load trajectories.
QuantileForecast reduce_to_deciles(const std::vector<HourlySeries>& trajectories);

// Elementwise mean per (timestamp, level).
QuantileForecast ensemble_average(const QuantileForecast& a, const QuantileForecast& b);

// "timestamp,q10,...,q90" with fixed-precision decimal rendering.
void write_quantile_csv(const QuantileForecast& forecast, const std::string& path, int precision = 6);
QuantileForecast read_quantile_csv(const std::string& path);

} // namespace loadcast
