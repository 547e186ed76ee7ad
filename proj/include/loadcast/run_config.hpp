#pragma once

#include <string>
#include <vector>

#include "loadcast/csv.hpp"
#include "loadcast/dst.hpp"
#include "loadcast/features.hpp"
#include "loadcast/rounds.hpp"
#include "loadcast/scenario.hpp"
#include "loadcast/selection.hpp"

namespace loadcast {

// One zone: either a CSV file with a column mapping, or an aggregate summing
// previously listed zones.
struct ZoneConfig {
    std::string id;
    std::string path;
    CsvSchema schema;
    std::vector<std::string> aggregate_of;
};

struct RunConfig {
    std::vector<ZoneConfig> zones;
    int training_years = 3;
    std::int64_t min_window_hours = 365 * 24;
    ShiftConfig shifts; // history years default 2004..2016
    GridConfig grid;
    SelectionConfig selection;
    DstOptions dst;
    std::vector<RoundSpec> rounds;
    std::string output_dir = "out";
    int quantile_precision = 6;
    bool parallel = true;

    RunConfig();
    void validate() const;
};

// Reads the JSON config documented in the README; relative zone paths
// resolve against the config file's directory.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text, const std::string& base_dir);

// Convenience: a ready-to-run config for generated synthetic zones.
RunConfig synthetic_run_config(const std::vector<std::string>& zone_ids,
                               const std::vector<std::string>& paths, int history_years,
                               const std::string& output_dir);

} // namespace loadcast
