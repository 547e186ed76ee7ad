#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loadcast/series.hpp"

namespace loadcast {

// Desk-scale test-data generator.  Produces `years` complete history years
// ending 2016 plus the full 2017 evaluation year, with a short buffer before
// the first year so day-shifted scenarios and moving-average backfill stay
// inside the record.  Load is a deterministic function of calendar and
// temperature (day-of-week and per-hour levels, yearly harmonics, a cubic
// temperature response, a trailing 24h temperature mean, holiday drops and
// an optional linear trend) plus Gaussian noise.  Years before 2016 carry
// the DST anomalies of raw competition files: the spring-forward hour is
// missing and the fall-back hour appears as two duplicate rows.
struct SynthConfig {
    std::uint64_t seed = 42;
    int years = 13; // complete history years ending 2016
    int zones = 2;
    double trend_per_year = 12.0; // MW per calendar-year index, 0 disables
    double noise_sigma = 10.0;    // MW, 0 makes load an exact function
    double holiday_effect = -150.0;
    double ma24_effect = 3.5; // MW per degree of 24h mean temperature
    int buffer_days = 14;

    int first_year() const { return 2017 - years; }
    void validate() const;
};

// Raw (pre-normalization) dataset for one zone; zone_index is 0-based.
ZoneDataset generate_synthetic_zone(const SynthConfig& config, int zone_index);

struct SynthOutput {
    std::vector<std::string> zone_ids;
    std::vector<std::string> paths;
};

// Writes zone_1.csv .. zone_Z.csv under out_dir.
SynthOutput generate_synthetic(const SynthConfig& config, const std::string& out_dir);

} // namespace loadcast
