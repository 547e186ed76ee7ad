#pragma once

#include <string>
#include <vector>

#include "loadcast/series.hpp"

namespace loadcast {

// Column mapping for zone CSV files.  Timestamps come either from a single
// ISO-8601 column (hour-beginning instant) or from a (date, hour) pair where
// the hour column is hour-ending 1..24 or hour-beginning 0..23.
struct CsvSchema {
    std::string timestamp_column = "timestamp";

    std::string date_column; // non-empty switches to (date, hour) mode
    std::string hour_column;
    enum class HourConvention { Ending1To24, Beginning0To23 };
    HourConvention hour_convention = HourConvention::Ending1To24;

    std::string load_column = "load";
    std::vector<std::string> temperature_columns = {"temp_1", "temp_2"};
    std::string holiday_column = "holiday";

    bool pair_mode() const { return !date_column.empty(); }
};

// Reads one zone file.  Rows come back stably sorted by timestamp with
// duplicate-timestamp rows preserved (the fall-back DST case); no gap or
// duplicate checking happens here — that is normalize_dst's job.
ZoneDataset ingest_csv(const std::string& path, const CsvSchema& schema,
                       const std::string& zone_id);

// Writes "timestamp,load,temp_1..temp_N,holiday" with shortest round-trip
// decimal rendering, so ingest(dump(ds)) reproduces every value bit-exactly.
void dump_csv(const ZoneDataset& dataset, const std::string& path);

} // namespace loadcast
