#pragma once

#include <string>
#include <vector>

#include "loadcast/hourly_model.hpp"
#include "loadcast/series.hpp"

namespace loadcast {

// Which historical years get reused and by how many days each profile is
// shifted.  K = |history_years| * |day_shifts| trajectories come out.
struct ShiftConfig {
    std::vector<int> history_years;
    std::vector<int> day_shifts = {-3, -2, -1, 0, 1, 2, 3};

    void validate() const;
    std::size_t trajectory_count() const { return history_years.size() * day_shifts.size(); }
};

struct ScenarioTrajectory {
    int source_year = 0;
    int shift_days = 0;
    std::vector<std::vector<double>> temperatures; // [channel][frame row]
};

// Shuffled temperature trajectories for a forecast window.  Every trajectory
// covers the window plus `backfill_hours` before it so moving-average
// features evaluate inside the scenario rather than from observed data.
struct ScenarioSet {
    std::vector<Timestamp> forecast_timestamps;
    Timestamp frame_start; // forecast start minus backfill
    std::size_t backfill_hours = 0;
    std::vector<ScenarioTrajectory> trajectories;

    std::size_t frame_size() const { return forecast_timestamps.size() + backfill_hours; }
};

// Maps each forecast day (m, d) onto the same calendar day of the source
// year, shifts it by the configured number of days within the historical
// record's own continuous timeline (crossing month/year boundaries as
// needed), and reads the temperatures recorded there.  Feb 29 falls back to
// Feb 28 in non-leap source years.  A (year, shift) pair that walks off the
// record raises CoverageError naming the trajectory.
ScenarioSet generate_scenarios(const ZoneDataset& history, const Timestamp& window_start,
                               const Timestamp& window_end, const ShiftConfig& config,
                               std::size_t backfill_hours);

// Runs every trajectory through the model set.  Calendar-driven features
// (day of week, month, holiday, trend) come from the real forecast
// timestamps; only temperature-derived features read the scenario.
// `frame_holiday` carries the real-calendar holiday flags over the full
// frame (backfill + window).
std::vector<HourlySeries> forecast_scenarios(const HourlyModelSet& modelset,
                                             const ScenarioSet& scenarios,
                                             const std::vector<double>& frame_holiday);

// Holiday flags for a contiguous hourly frame from the computed US federal
// calendar.
std::vector<double> federal_holiday_frame(const Timestamp& frame_start, std::size_t hours);

// Audit dump: [{"source_year": y, "shift_days": d}, ...].
std::string provenance_json(const ScenarioSet& scenarios);

} // namespace loadcast
