#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loadcast/timestamp.hpp"

namespace loadcast {

// One named hourly value series.  Timestamps are strictly increasing and
// hourly-contiguous only after DST normalization; raw ingested data may
// contain the one gap / one duplicate the normalizer repairs.
struct HourlySeries {
    std::vector<Timestamp> timestamps;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    bool contiguous_hourly() const;
};

// Hourly load, temperature channels and holiday flags for one zone, all on
// a single shared timestamp grid.
struct ZoneDataset {
    std::string zone_id;
    std::vector<Timestamp> grid;
    std::vector<double> load;
    std::vector<std::vector<double>> temperatures; // [channel][row]
    std::vector<double> holiday;                   // 0 or 1
    bool dst_normalized = false;

    std::size_t size() const { return grid.size(); }
    std::size_t channels() const { return temperatures.size(); }

    // Row index of `ts` assuming a contiguous hourly grid (normalized data).
    std::optional<std::size_t> index_of(const Timestamp& ts) const;

    HourlySeries load_series() const { return {grid, load}; }
    HourlySeries temperature_series(std::size_t channel) const {
        return {grid, temperatures.at(channel)};
    }

    // Throws if field lengths disagree or holiday flags are not 0/1.
    void validate() const;
};

// Sum of child loads, concatenated temperature channels, elementwise max of
// holiday flags.  All children must share an identical timestamp grid.
ZoneDataset aggregate_zone(const std::vector<ZoneDataset>& children, const std::string& zone_id);

} // namespace loadcast
