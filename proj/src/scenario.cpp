#include "loadcast/scenario.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "loadcast/errors.hpp"

namespace loadcast {

void ShiftConfig::validate() const {
    if (history_years.empty()) throw ConfigError("shift config: no history years");
    if (day_shifts.empty()) throw ConfigError("shift config: no day shifts");
    std::set<int> seen(day_shifts.begin(), day_shifts.end());
    if (seen.size() != day_shifts.size())
        throw ConfigError("shift config: duplicate day shifts");
}

ScenarioSet generate_scenarios(const ZoneDataset& history, const Timestamp& window_start,
                               const Timestamp& window_end, const ShiftConfig& config,
                               std::size_t backfill_hours) {
    config.validate();
    if (window_end < window_start)
        throw ConfigError("generate_scenarios: window end precedes start");
    if (!history.dst_normalized)
        throw DataQualityError("generate_scenarios: history '" + history.zone_id +
                               "' is not DST-normalized");

    ScenarioSet set;
    set.backfill_hours = backfill_hours;
    set.frame_start = window_start.add_hours(-static_cast<std::int64_t>(backfill_hours));
    const std::int64_t window_hours = hours_between(window_start, window_end) + 1;
    set.forecast_timestamps.reserve(static_cast<std::size_t>(window_hours));
    for (std::int64_t i = 0; i < window_hours; ++i)
        set.forecast_timestamps.push_back(window_start.add_hours(i));

    const std::size_t frame_hours = set.frame_size();
    const std::size_t channels = history.channels();

    for (int source_year : config.history_years) {
        for (int shift : config.day_shifts) {
            ScenarioTrajectory traj;
            traj.source_year = source_year;
            traj.shift_days = shift;
            traj.temperatures.assign(channels, std::vector<double>(frame_hours, 0.0));

            for (std::size_t i = 0; i < frame_hours; ++i) {
                const Timestamp t = set.frame_start.add_hours(static_cast<std::int64_t>(i));
                // Backfill days before a January window roll into the source
                // year's own December, so keep the year offset relative to
                // the window start.
                const int mapped_year = source_year + (t.year - window_start.year);
                const int day = std::min(t.day, last_day_of_month(mapped_year, t.month));
                Timestamp source{mapped_year, t.month, day, t.hour};
                source = source.add_days(shift);

                const auto row = history.index_of(source);
                if (!row)
                    throw CoverageError("scenario (year " + std::to_string(source_year) +
                                        ", shift " + std::to_string(shift) + "): " + source.iso() +
                                        " outside temperature history of '" + history.zone_id + "'");
                for (std::size_t c = 0; c < channels; ++c)
                    traj.temperatures[c][i] = history.temperatures[c][*row];
            }
            set.trajectories.push_back(std::move(traj));
        }
    }
    return set;
}

std::vector<HourlySeries> forecast_scenarios(const HourlyModelSet& modelset,
                                             const ScenarioSet& scenarios,
                                             const std::vector<double>& frame_holiday) {
    if (frame_holiday.size() != scenarios.frame_size())
        throw AlignmentError("forecast_scenarios: holiday frame has " +
                             std::to_string(frame_holiday.size()) + " rows, expected " +
                             std::to_string(scenarios.frame_size()));
    const int needed = modelset.max_backfill_hours();
    if (static_cast<std::size_t>(needed) > scenarios.backfill_hours)
        throw CoverageError("forecast_scenarios: model set needs " + std::to_string(needed) +
                            " backfill hours, scenarios carry " +
                            std::to_string(scenarios.backfill_hours));

    std::vector<HourlySeries> out;
    out.reserve(scenarios.trajectories.size());
    for (const ScenarioTrajectory& traj : scenarios.trajectories) {
        ExogFrame frame;
        frame.start = scenarios.frame_start;
        frame.temperatures = traj.temperatures;
        frame.holiday = frame_holiday;
        out.push_back(predict(modelset, scenarios.forecast_timestamps, frame));
    }
    return out;
}

std::vector<double> federal_holiday_frame(const Timestamp& frame_start, std::size_t hours) {
    std::vector<double> flags(hours, 0.0);
    for (std::size_t i = 0; i < hours; ++i) {
        const Timestamp t = frame_start.add_hours(static_cast<std::int64_t>(i));
        flags[i] = is_us_federal_holiday(t.year, t.month, t.day) ? 1.0 : 0.0;
    }
    return flags;
}

std::string provenance_json(const ScenarioSet& scenarios) {
    nlohmann::json j = nlohmann::json::array();
    for (const ScenarioTrajectory& traj : scenarios.trajectories)
        j.push_back({{"source_year", traj.source_year}, {"shift_days", traj.shift_days}});
    return j.dump(2);
}

} // namespace loadcast
