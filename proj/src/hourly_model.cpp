#include "loadcast/hourly_model.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <future>
#include <nlohmann/json.hpp>
#include <sstream>

#include "loadcast/errors.hpp"

namespace loadcast {

int HourlyModelSet::max_backfill_hours() const {
    int best = 0;
    for (const LinearModel& m : models) best = std::max(best, m.max_backfill_hours());
    return best;
}

bool HourlyModelSet::any_uses(const std::string& id) const {
    return std::any_of(models.begin(), models.end(),
                       [&](const LinearModel& m) { return m.uses(id); });
}

HourlyModelSet train_hourly(const ZoneDataset& dataset, const Timestamp& window_start,
                            const Timestamp& window_end, const GridConfig& grid,
                            TrendMode trend_mode, const SelectionConfig& selection,
                            const TrainOptions& options) {
    if (!dataset.dst_normalized)
        throw TrainingError("train_hourly: dataset '" + dataset.zone_id + "' is not DST-normalized");
    if (window_end < window_start)
        throw TrainingError("train_hourly: window end precedes start");
    const std::int64_t window_hours = hours_between(window_start, window_end) + 1;
    if (window_hours < options.min_window_hours)
        throw TrainingError("train_hourly: window of " + std::to_string(window_hours) +
                            " hours is shorter than the minimum of " +
                            std::to_string(options.min_window_hours));
    if (!dataset.index_of(window_start) || !dataset.index_of(window_end))
        throw TrainingError("train_hourly: window [" + window_start.iso() + ", " +
                            window_end.iso() + "] not inside dataset '" + dataset.zone_id + "'");

    const FeatureCatalog catalog = build_catalog(dataset.channels(), grid, trend_mode);
    const int backfill = catalog.max_backfill_hours();
    const Timestamp exog_start = window_start.add_hours(-backfill);
    if (!dataset.index_of(exog_start))
        throw CoverageError("train_hourly: longest moving-average window needs " +
                            std::to_string(backfill) + " hours of history before " +
                            window_start.iso());
    const ExogFrame exog = ExogFrame::from_dataset(dataset, exog_start, window_end);

    // One materialization of the whole catalog over the window; hourly
    // selections slice rows out of it.
    std::vector<Timestamp> window_ts;
    window_ts.reserve(static_cast<std::size_t>(window_hours));
    const std::size_t first_row = *dataset.index_of(window_start);
    for (std::int64_t i = 0; i < window_hours; ++i)
        window_ts.push_back(dataset.grid[first_row + static_cast<std::size_t>(i)]);
    const DesignMatrix x_all = materialize(catalog.specs, window_ts, exog);

    std::array<std::vector<std::size_t>, 24> rows_by_hour;
    for (std::size_t i = 0; i < window_ts.size(); ++i)
        rows_by_hour[static_cast<std::size_t>(window_ts[i].hour - 1)].push_back(i);

    SelectionConfig hour_config = selection;
    if (trend_mode == TrendMode::On) hour_config.forced.push_back("trend");

    auto fit_hour = [&](int hour) -> LinearModel {
        const auto& rows = rows_by_hour[static_cast<std::size_t>(hour - 1)];
        if (rows.size() < 2)
            throw InsufficientDataError("train_hourly: hour " + std::to_string(hour) + " has " +
                                        std::to_string(rows.size()) + " training rows");
        DesignMatrix x_hour;
        x_hour.column_ids = x_all.column_ids;
        x_hour.row_timestamps.reserve(rows.size());
        x_hour.values.resize(static_cast<Eigen::Index>(rows.size()), x_all.values.cols());
        Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            x_hour.row_timestamps.push_back(window_ts[rows[i]]);
            x_hour.values.row(static_cast<Eigen::Index>(i)) =
                x_all.values.row(static_cast<Eigen::Index>(rows[i]));
            y(static_cast<Eigen::Index>(i)) = dataset.load[first_row + rows[i]];
        }
        LinearModel model = select_subset(catalog, x_hour, y, hour_config);
        model.hour = hour;
        return model;
    };

    HourlyModelSet set;
    set.zone_id = dataset.zone_id;
    set.window_start = window_start;
    set.window_end = window_end;
    set.trend_mode = trend_mode;
    set.grid = grid;
    set.models.resize(24);

    if (options.parallel) {
        std::vector<std::future<LinearModel>> futures;
        futures.reserve(24);
        for (int hour = 1; hour <= 24; ++hour)
            futures.push_back(std::async(std::launch::async, fit_hour, hour));
        for (int hour = 1; hour <= 24; ++hour)
            set.models[static_cast<std::size_t>(hour - 1)] = futures[static_cast<std::size_t>(hour - 1)].get();
    } else {
        for (int hour = 1; hour <= 24; ++hour)
            set.models[static_cast<std::size_t>(hour - 1)] = fit_hour(hour);
    }
    return set;
}

HourlySeries predict(const HourlyModelSet& modelset, const std::vector<Timestamp>& timestamps,
                     const ExogFrame& exog) {
    if (modelset.models.size() != 24) throw TrainingError("predict: model set is not 24 models");

    std::array<std::vector<std::size_t>, 24> rows_by_hour;
    for (std::size_t i = 0; i < timestamps.size(); ++i)
        rows_by_hour[static_cast<std::size_t>(timestamps[i].hour - 1)].push_back(i);

    HourlySeries out;
    out.timestamps = timestamps;
    out.values.assign(timestamps.size(), 0.0);

    for (int hour = 1; hour <= 24; ++hour) {
        const auto& rows = rows_by_hour[static_cast<std::size_t>(hour - 1)];
        if (rows.empty()) continue;
        const LinearModel& model = modelset.model_for_hour(hour);

        std::vector<FeatureSpec> specs;
        specs.reserve(model.selected.size());
        for (const std::string& id : model.selected) specs.push_back(FeatureSpec::parse(id));
        std::vector<Timestamp> ts;
        ts.reserve(rows.size());
        for (std::size_t r : rows) ts.push_back(timestamps[r]);

        const DesignMatrix x = materialize(specs, ts, exog);
        Eigen::Map<const Eigen::VectorXd> beta(model.coefficients.data(),
                                               static_cast<Eigen::Index>(model.coefficients.size()));
        const Eigen::VectorXd yhat = (x.values * beta).array() + model.intercept;
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.values[rows[i]] = yhat(static_cast<Eigen::Index>(i));
    }
    return out;
}

namespace {

nlohmann::json model_to_json(const LinearModel& m) {
    return nlohmann::json{{"hour", m.hour},
                          {"selected", m.selected},
                          {"coefficients", m.coefficients},
                          {"intercept", m.intercept},
                          {"fit_stats",
                           {{"n", m.fit_stats.n},
                            {"rss", m.fit_stats.rss},
                            {"criterion", m.fit_stats.criterion}}}};
}

LinearModel model_from_json(const nlohmann::json& j) {
    LinearModel m;
    m.hour = j.at("hour").get<int>();
    m.selected = j.at("selected").get<std::vector<std::string>>();
    m.coefficients = j.at("coefficients").get<std::vector<double>>();
    m.intercept = j.at("intercept").get<double>();
    const auto& fs = j.at("fit_stats");
    m.fit_stats.n = fs.at("n").get<std::size_t>();
    m.fit_stats.rss = fs.at("rss").get<double>();
    m.fit_stats.criterion = fs.at("criterion").get<double>();
    return m;
}

nlohmann::json grid_to_json(const GridConfig& g) {
    return nlohmann::json{{"yearly_harmonics", g.yearly_harmonics},
                          {"weekly_harmonics", g.weekly_harmonics},
                          {"ma_windows", g.ma_windows},
                          {"poly_degree_max", g.poly_degree_max},
                          {"month_interactions", g.month_interactions},
                          {"dow_interactions", g.dow_interactions}};
}

GridConfig grid_from_json(const nlohmann::json& j) {
    GridConfig g;
    g.yearly_harmonics = j.value("yearly_harmonics", g.yearly_harmonics);
    g.weekly_harmonics = j.value("weekly_harmonics", g.weekly_harmonics);
    g.ma_windows = j.value("ma_windows", g.ma_windows);
    g.poly_degree_max = j.value("poly_degree_max", g.poly_degree_max);
    g.month_interactions = j.value("month_interactions", g.month_interactions);
    g.dow_interactions = j.value("dow_interactions", g.dow_interactions);
    return g;
}

} // namespace

std::string model_set_to_json(const HourlyModelSet& modelset) {
    nlohmann::json j;
    j["zone"] = modelset.zone_id;
    j["trend_mode"] = to_string(modelset.trend_mode);
    j["window"] = {{"start", modelset.window_start.iso()}, {"end", modelset.window_end.iso()}};
    j["grid"] = grid_to_json(modelset.grid);
    j["models"] = nlohmann::json::array();
    for (const LinearModel& m : modelset.models) j["models"].push_back(model_to_json(m));
    return j.dump(2);
}

HourlyModelSet model_set_from_json(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    HourlyModelSet set;
    set.zone_id = j.at("zone").get<std::string>();
    set.trend_mode = trend_mode_from_string(j.at("trend_mode").get<std::string>());
    set.window_start = Timestamp::parse_iso(j.at("window").at("start").get<std::string>());
    set.window_end = Timestamp::parse_iso(j.at("window").at("end").get<std::string>());
    set.grid = grid_from_json(j.at("grid"));
    for (const auto& jm : j.at("models")) set.models.push_back(model_from_json(jm));
    if (set.models.size() != 24)
        throw ConfigError("model set JSON has " + std::to_string(set.models.size()) +
                          " models, expected 24");
    return set;
}

void save_model_set(const HourlyModelSet& modelset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot write " + path);
    out << model_set_to_json(modelset) << '\n';
}

HourlyModelSet load_model_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return model_set_from_json(buffer.str());
}

} // namespace loadcast
