#pragma once

#include <string>
#include <vector>

#include "loadcast/features.hpp"
#include "loadcast/selection.hpp"
#include "loadcast/series.hpp"

namespace loadcast {

// One model per hour of day over a shared training window.  Hour of day is
// the partitioning key, never a regressor.
struct HourlyModelSet {
    std::string zone_id;
    std::vector<LinearModel> models; // exactly 24, models[h-1].hour == h
    Timestamp window_start;
    Timestamp window_end;
    TrendMode trend_mode = TrendMode::Off;
    GridConfig grid;

    const LinearModel& model_for_hour(int hour) const { return models.at(static_cast<std::size_t>(hour - 1)); }
    // Longest moving-average backfill any selected feature needs.
    int max_backfill_hours() const;
    bool any_uses(const std::string& id) const;
};

struct TrainOptions {
    std::int64_t min_window_hours = 365 * 24;
    bool parallel = true;
};

// Builds the catalog once, materializes it over the window, then runs one
// independent subset selection per hour of day.  TrendMode::On forces the
// trend feature into every hourly model; Auto leaves it to the selection;
// Off keeps it out of the catalog.
HourlyModelSet train_hourly(const ZoneDataset& dataset, const Timestamp& window_start,
                            const Timestamp& window_end, const GridConfig& grid,
                            TrendMode trend_mode, const SelectionConfig& selection,
                            const TrainOptions& options = {});

// Routes each timestamp to its hour's model and evaluates
// intercept + sum(coefficient * feature) with all exogenous values read
// from `exog`.
HourlySeries predict(const HourlyModelSet& modelset, const std::vector<Timestamp>& timestamps,
                     const ExogFrame& exog);

// JSON round trip; doubles are rendered shortest-round-trip so a reloaded
// model set re-predicts bit-identically.
std::string model_set_to_json(const HourlyModelSet& modelset);
HourlyModelSet model_set_from_json(const std::string& json_text);
void save_model_set(const HourlyModelSet& modelset, const std::string& path);
HourlyModelSet load_model_set(const std::string& path);

} // namespace loadcast
