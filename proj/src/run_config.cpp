#include "loadcast/run_config.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "loadcast/errors.hpp"

namespace loadcast {

RunConfig::RunConfig() : rounds(default_rounds()) {
    shifts.history_years.resize(13);
    std::iota(shifts.history_years.begin(), shifts.history_years.end(), 2004);
}

void RunConfig::validate() const {
    if (zones.empty()) throw ConfigError("config: no zones");
    std::set<std::string> ids;
    for (const ZoneConfig& z : zones) {
        if (z.id.empty()) throw ConfigError("config: zone with empty id");
        if (!ids.insert(z.id).second) throw ConfigError("config: duplicate zone id '" + z.id + "'");
        if (z.path.empty() == z.aggregate_of.empty())
            throw ConfigError("config: zone '" + z.id + "' needs exactly one of path/aggregate_of");
        for (const std::string& child : z.aggregate_of)
            if (!ids.contains(child))
                throw ConfigError("config: zone '" + z.id + "' aggregates unknown zone '" + child +
                                  "' (children must be listed first)");
        if (!z.path.empty() && !std::filesystem::exists(z.path))
            throw ConfigError("config: zone '" + z.id + "' file not found: " + z.path);
    }
    if (training_years < 1) throw ConfigError("config: training_years must be >= 1");
    if (rounds.empty()) throw ConfigError("config: no rounds");
    if (quantile_precision < 1 || quantile_precision > 17)
        throw ConfigError("config: quantile_precision must be in 1..17");
    shifts.validate();
    grid.validate();
    selection.validate();
    for (const RoundSpec& r : rounds)
        if (!(r.data_cutoff < r.window_start))
            throw ConfigError("config: round " + std::to_string(r.id) +
                              " forecast window must start after the data cutoff");
}

namespace {

CsvSchema schema_from_json(const nlohmann::json& j) {
    CsvSchema s;
    s.timestamp_column = j.value("timestamp", s.timestamp_column);
    s.date_column = j.value("date", s.date_column);
    s.hour_column = j.value("hour", s.hour_column);
    if (j.contains("hour_convention")) {
        const std::string conv = j.at("hour_convention").get<std::string>();
        if (conv == "ending_1_24")
            s.hour_convention = CsvSchema::HourConvention::Ending1To24;
        else if (conv == "beginning_0_23")
            s.hour_convention = CsvSchema::HourConvention::Beginning0To23;
        else
            throw ConfigError("config: unknown hour_convention '" + conv + "'");
    }
    s.load_column = j.value("load", s.load_column);
    if (j.contains("temperatures"))
        s.temperature_columns = j.at("temperatures").get<std::vector<std::string>>();
    s.holiday_column = j.value("holiday", s.holiday_column);
    return s;
}

} // namespace

RunConfig parse_run_config(const std::string& json_text, const std::string& base_dir) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }

    RunConfig cfg;
    try {
        for (const auto& jz : j.value("zones", nlohmann::json::array())) {
            ZoneConfig z;
            z.id = jz.at("id").get<std::string>();
            if (jz.contains("path")) {
                std::filesystem::path p = jz.at("path").get<std::string>();
                if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
                z.path = p.string();
            }
            if (jz.contains("schema")) z.schema = schema_from_json(jz.at("schema"));
            if (jz.contains("aggregate_of"))
                z.aggregate_of = jz.at("aggregate_of").get<std::vector<std::string>>();
            cfg.zones.push_back(std::move(z));
        }

        if (j.contains("training")) {
            const auto& jt = j.at("training");
            cfg.training_years = jt.value("years", cfg.training_years);
            cfg.min_window_hours = jt.value("min_window_hours", cfg.min_window_hours);
        }

        if (j.contains("history_years")) {
            const auto& jh = j.at("history_years");
            cfg.shifts.history_years.clear();
            if (jh.is_array()) {
                cfg.shifts.history_years = jh.get<std::vector<int>>();
            } else {
                const int first = jh.at("first").get<int>();
                const int last = jh.at("last").get<int>();
                for (int y = first; y <= last; ++y) cfg.shifts.history_years.push_back(y);
            }
        }
        if (j.contains("day_shifts")) cfg.shifts.day_shifts = j.at("day_shifts").get<std::vector<int>>();

        if (j.contains("grid")) {
            const auto& jg = j.at("grid");
            cfg.grid.yearly_harmonics = jg.value("yearly_harmonics", cfg.grid.yearly_harmonics);
            cfg.grid.weekly_harmonics = jg.value("weekly_harmonics", cfg.grid.weekly_harmonics);
            if (jg.contains("ma_windows")) cfg.grid.ma_windows = jg.at("ma_windows").get<std::vector<int>>();
            cfg.grid.poly_degree_max = jg.value("poly_degree_max", cfg.grid.poly_degree_max);
            cfg.grid.month_interactions = jg.value("month_interactions", cfg.grid.month_interactions);
            cfg.grid.dow_interactions = jg.value("dow_interactions", cfg.grid.dow_interactions);
        }

        if (j.contains("selection")) {
            const auto& js = j.at("selection");
            if (js.contains("penalty") && !js.at("penalty").is_string())
                cfg.selection.penalty = js.at("penalty").get<double>();
            cfg.selection.max_features = js.value("max_features", cfg.selection.max_features);
            cfg.selection.min_improvement = js.value("min_improvement", cfg.selection.min_improvement);
        }

        if (j.contains("dst")) {
            const auto& jd = j.at("dst");
            const std::string rules = jd.value("rules", std::string("us"));
            if (rules == "us")
                cfg.dst.calendar = DstCalendar::us();
            else if (rules == "none")
                cfg.dst.calendar = DstCalendar::none();
            else
                throw ConfigError("config: unknown dst rules '" + rules + "'");
            cfg.dst.assume_summed_fallback =
                jd.value("assume_summed_fallback", cfg.dst.assume_summed_fallback);
            cfg.dst.clean_from_year = jd.value("clean_from_year", cfg.dst.clean_from_year);
        }

        if (j.contains("rounds")) {
            for (const auto& [key, value] : j.at("rounds").items()) {
                const int id = std::stoi(key);
                bool found = false;
                for (RoundSpec& r : cfg.rounds)
                    if (r.id == id) {
                        r.strategy = strategy_from_string(value.get<std::string>());
                        found = true;
                    }
                if (!found) throw ConfigError("config: unknown round '" + key + "'");
            }
        }

        cfg.output_dir = j.value("output_dir", cfg.output_dir);
        cfg.quantile_precision = j.value("quantile_precision", cfg.quantile_precision);
        cfg.parallel = j.value("parallel", cfg.parallel);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str(), std::filesystem::path(path).parent_path().string());
}

RunConfig synthetic_run_config(const std::vector<std::string>& zone_ids,
                               const std::vector<std::string>& paths, int history_years,
                               const std::string& output_dir) {
    RunConfig cfg;
    for (std::size_t i = 0; i < zone_ids.size(); ++i)
        cfg.zones.push_back(ZoneConfig{zone_ids[i], paths[i], CsvSchema{}, {}});
    cfg.shifts.history_years.clear();
    for (int y = 2017 - history_years; y <= 2016; ++y) cfg.shifts.history_years.push_back(y);
    cfg.output_dir = output_dir;
    return cfg;
}

} // namespace loadcast
