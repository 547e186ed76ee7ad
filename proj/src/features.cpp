#include "loadcast/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "loadcast/errors.hpp"

namespace loadcast {

namespace {

constexpr std::array<const char*, 7> kDowNames{"mon", "tue", "wed", "thu", "fri", "sat", "sun"};
constexpr std::array<const char*, 12> kMonthNames{"jan", "feb", "mar", "apr", "may", "jun",
                                                  "jul", "aug", "sep", "oct", "nov", "dec"};

int name_index(const auto& names, const std::string& token, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (token == names[i]) return static_cast<int>(i);
    throw ConfigError(std::string("unknown ") + what + " '" + token + "' in feature id");
}

} // namespace

std::string FeatureSpec::id() const {
    switch (kind) {
    case FeatureKind::Intercept: return "intercept";
    case FeatureKind::DayOfWeek: return std::string("dow:") + kDowNames[static_cast<std::size_t>(arg)];
    case FeatureKind::Month: return std::string("month:") + kMonthNames[static_cast<std::size_t>(arg - 1)];
    case FeatureKind::Holiday: return "holiday";
    case FeatureKind::FourierYearly:
        return std::string("fourier:yearly:") + (cosine ? "cos" : "sin") + ":k=" + std::to_string(arg);
    case FeatureKind::FourierWeekly:
        return std::string("fourier:weekly:") + (cosine ? "cos" : "sin") + ":k=" + std::to_string(arg);
    case FeatureKind::Poly:
        return "poly:temp_" + std::to_string(channel) + ":d=" + std::to_string(arg);
    case FeatureKind::MovingAverage:
        return "ma:temp_" + std::to_string(channel) + ":w=" + std::to_string(arg);
    case FeatureKind::InteractionMonth:
        return "ix:poly:temp_" + std::to_string(channel) + ":d=1*month:" +
               kMonthNames[static_cast<std::size_t>(arg - 1)];
    case FeatureKind::InteractionDow:
        return "ix:poly:temp_" + std::to_string(channel) + ":d=1*dow:" +
               kDowNames[static_cast<std::size_t>(arg)];
    case FeatureKind::Trend: return "trend";
    }
    throw ConfigError("unreachable feature kind");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = s.find(sep, begin);
        parts.push_back(s.substr(begin, end - begin));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return parts;
}

int parse_suffix_int(const std::string& token, const std::string& prefix, const std::string& id) {
    if (token.rfind(prefix, 0) != 0)
        throw ConfigError("malformed feature id '" + id + "'");
    try {
        return std::stoi(token.substr(prefix.size()));
    } catch (const std::exception&) {
        throw ConfigError("malformed feature id '" + id + "'");
    }
}

} // namespace

FeatureSpec FeatureSpec::parse(const std::string& id) {
    FeatureSpec spec;
    if (id == "intercept") return spec;
    if (id == "holiday") {
        spec.kind = FeatureKind::Holiday;
        return spec;
    }
    if (id == "trend") {
        spec.kind = FeatureKind::Trend;
        return spec;
    }

    const std::vector<std::string> parts = split(id, ':');
    if (parts.size() == 2 && parts[0] == "dow") {
        spec.kind = FeatureKind::DayOfWeek;
        spec.arg = name_index(kDowNames, parts[1], "weekday");
        return spec;
    }
    if (parts.size() == 2 && parts[0] == "month") {
        spec.kind = FeatureKind::Month;
        spec.arg = name_index(kMonthNames, parts[1], "month") + 1;
        return spec;
    }
    if (parts.size() == 4 && parts[0] == "fourier") {
        spec.kind = parts[1] == "yearly" ? FeatureKind::FourierYearly
                  : parts[1] == "weekly" ? FeatureKind::FourierWeekly
                                         : throw ConfigError("malformed feature id '" + id + "'");
        spec.cosine = parts[2] == "cos";
        if (!spec.cosine && parts[2] != "sin") throw ConfigError("malformed feature id '" + id + "'");
        spec.arg = parse_suffix_int(parts[3], "k=", id);
        return spec;
    }
    if (parts.size() == 3 && parts[0] == "poly") {
        spec.kind = FeatureKind::Poly;
        spec.channel = parse_suffix_int(parts[1], "temp_", id);
        spec.arg = parse_suffix_int(parts[2], "d=", id);
        return spec;
    }
    if (parts.size() == 3 && parts[0] == "ma") {
        spec.kind = FeatureKind::MovingAverage;
        spec.channel = parse_suffix_int(parts[1], "temp_", id);
        spec.arg = parse_suffix_int(parts[2], "w=", id);
        return spec;
    }
    if (parts.size() == 4 && parts[0] == "ix" && parts[1] == "poly") {
        spec.channel = parse_suffix_int(parts[2], "temp_", id);
        const std::vector<std::string> tail = split(parts[3], '*');
        if (tail.size() != 2 || tail[0] != "d=1")
            throw ConfigError("malformed feature id '" + id + "'");
        const std::vector<std::string> target = split(tail[1], ':');
        if (target.size() != 2) throw ConfigError("malformed feature id '" + id + "'");
        if (target[0] == "month") {
            spec.kind = FeatureKind::InteractionMonth;
            spec.arg = name_index(kMonthNames, target[1], "month") + 1;
        } else if (target[0] == "dow") {
            spec.kind = FeatureKind::InteractionDow;
            spec.arg = name_index(kDowNames, target[1], "weekday");
        } else {
            throw ConfigError("malformed feature id '" + id + "'");
        }
        return spec;
    }
    throw ConfigError("unknown feature id '" + id + "'");
}

void GridConfig::validate() const {
    if (yearly_harmonics < 0 || weekly_harmonics < 0)
        throw ConfigError("grid: harmonic counts must be >= 0");
    if (yearly_harmonics > 52 || weekly_harmonics > 84)
        throw ConfigError("grid: harmonic counts are implausibly large");
    if (poly_degree_max < 0 || poly_degree_max > 6)
        throw ConfigError("grid: polynomial degree must be in 0..6");
    std::set<int> seen;
    for (int w : ma_windows) {
        if (w < 1) throw ConfigError("grid: moving-average window must be >= 1 hour");
        if (!seen.insert(w).second)
            throw ConfigError("grid: duplicate moving-average window " + std::to_string(w));
    }
    if (yearly_harmonics == 0 && weekly_harmonics == 0 && ma_windows.empty() &&
        poly_degree_max == 0 && !month_interactions && !dow_interactions)
        throw ConfigError("grid: no transformation family enabled");
}

std::string to_string(TrendMode mode) {
    switch (mode) {
    case TrendMode::On: return "on";
    case TrendMode::Off: return "off";
    case TrendMode::Auto: return "auto";
    }
    return "off";
}

TrendMode trend_mode_from_string(const std::string& name) {
    if (name == "on") return TrendMode::On;
    if (name == "off") return TrendMode::Off;
    if (name == "auto") return TrendMode::Auto;
    throw ConfigError("unknown trend mode '" + name + "'");
}

bool FeatureCatalog::contains(const std::string& id) const {
    return std::any_of(specs.begin(), specs.end(),
                       [&](const FeatureSpec& s) { return s.id() == id; });
}

int FeatureCatalog::max_backfill_hours() const {
    int best = 0;
    for (const FeatureSpec& s : specs) best = std::max(best, s.backfill_hours());
    return best;
}

FeatureCatalog build_catalog(std::size_t channels, const GridConfig& grid, TrendMode trend_mode) {
    grid.validate();

    FeatureCatalog catalog;
    catalog.grid = grid;
    auto& specs = catalog.specs;

    specs.push_back({FeatureKind::Intercept});
    for (int d = 0; d < 7; ++d) specs.push_back({FeatureKind::DayOfWeek, 0, d});
    for (int m = 1; m <= 12; ++m) specs.push_back({FeatureKind::Month, 0, m});
    specs.push_back({FeatureKind::Holiday});
    for (int k = 1; k <= grid.yearly_harmonics; ++k) {
        specs.push_back({FeatureKind::FourierYearly, 0, k, false});
        specs.push_back({FeatureKind::FourierYearly, 0, k, true});
    }
    for (int k = 1; k <= grid.weekly_harmonics; ++k) {
        specs.push_back({FeatureKind::FourierWeekly, 0, k, false});
        specs.push_back({FeatureKind::FourierWeekly, 0, k, true});
    }
    for (int c = 1; c <= static_cast<int>(channels); ++c)
        for (int d = 1; d <= grid.poly_degree_max; ++d)
            specs.push_back({FeatureKind::Poly, c, d});
    for (int c = 1; c <= static_cast<int>(channels); ++c)
        for (int w : grid.ma_windows) specs.push_back({FeatureKind::MovingAverage, c, w});
    if (grid.month_interactions)
        for (int c = 1; c <= static_cast<int>(channels); ++c)
            for (int m = 1; m <= 12; ++m) specs.push_back({FeatureKind::InteractionMonth, c, m});
    if (grid.dow_interactions)
        for (int c = 1; c <= static_cast<int>(channels); ++c)
            for (int d = 0; d < 7; ++d) specs.push_back({FeatureKind::InteractionDow, c, d});
    if (trend_mode != TrendMode::Off) specs.push_back({FeatureKind::Trend});

    return catalog;
}

FeatureCatalog build_catalog(const ZoneDataset& dataset, const GridConfig& grid,
                             TrendMode trend_mode) {
    return build_catalog(dataset.channels(), grid, trend_mode);
}

std::size_t catalog_size(std::size_t channels, const GridConfig& grid, TrendMode trend_mode) {
    const std::size_t c = channels;
    return 1 + 7 + 12 + 1 + 2 * static_cast<std::size_t>(grid.yearly_harmonics) +
           2 * static_cast<std::size_t>(grid.weekly_harmonics) +
           c * static_cast<std::size_t>(grid.poly_degree_max) + c * grid.ma_windows.size() +
           c * ((grid.month_interactions ? 12u : 0u) + (grid.dow_interactions ? 7u : 0u)) +
           (trend_mode != TrendMode::Off ? 1u : 0u);
}

std::pair<double, double> fourier_pair(double position, int harmonic) {
    const double angle = 2.0 * std::numbers::pi * harmonic * position;
    return {std::sin(angle), std::cos(angle)};
}

ExogFrame ExogFrame::from_dataset(const ZoneDataset& dataset, const Timestamp& from,
                                  const Timestamp& to) {
    const auto begin = dataset.index_of(from);
    const auto end = dataset.index_of(to);
    if (!begin || !end || *end < *begin)
        throw CoverageError("exog slice [" + from.iso() + ", " + to.iso() + "] outside dataset '" +
                            dataset.zone_id + "'");
    ExogFrame frame;
    frame.start = from;
    const std::size_t n = *end - *begin + 1;
    frame.temperatures.resize(dataset.channels());
    for (std::size_t c = 0; c < dataset.channels(); ++c)
        frame.temperatures[c].assign(dataset.temperatures[c].begin() + static_cast<std::ptrdiff_t>(*begin),
                                     dataset.temperatures[c].begin() + static_cast<std::ptrdiff_t>(*begin + n));
    frame.holiday.assign(dataset.holiday.begin() + static_cast<std::ptrdiff_t>(*begin),
                         dataset.holiday.begin() + static_cast<std::ptrdiff_t>(*begin + n));
    return frame;
}

namespace {

double integer_power(double base, int exponent) {
    double out = 1.0;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

constexpr int kTrendBaseYear = 2002; // 2003 maps to 1

} // namespace

DesignMatrix materialize(const std::vector<FeatureSpec>& specs,
                         const std::vector<Timestamp>& timestamps, const ExogFrame& exog) {
    DesignMatrix dm;
    dm.row_timestamps = timestamps;
    dm.column_ids.reserve(specs.size());
    for (const FeatureSpec& s : specs) dm.column_ids.push_back(s.id());
    dm.values.resize(static_cast<Eigen::Index>(timestamps.size()),
                     static_cast<Eigen::Index>(specs.size()));

    const std::size_t n_exog = exog.size();

    // Row index into the exog frame per requested timestamp.
    std::vector<std::int64_t> rows(timestamps.size());
    bool needs_exog = false;
    for (const FeatureSpec& s : specs)
        if (s.uses_temperature() || s.kind == FeatureKind::Holiday) needs_exog = true;
    for (std::size_t i = 0; i < timestamps.size(); ++i) {
        rows[i] = exog.row_of(timestamps[i]);
        if (needs_exog && (rows[i] < 0 || rows[i] >= static_cast<std::int64_t>(n_exog)))
            throw CoverageError("materialize: " + timestamps[i].iso() + " outside exog frame");
    }

    // Trailing-window sums via one prefix pass per referenced channel.
    std::vector<std::vector<double>> prefix(exog.temperatures.size());
    auto channel_values = [&](int channel) -> const std::vector<double>& {
        if (channel < 1 || channel > static_cast<int>(exog.temperatures.size()))
            throw ConfigError("feature references temperature channel " + std::to_string(channel) +
                              " but exog has " + std::to_string(exog.temperatures.size()));
        return exog.temperatures[static_cast<std::size_t>(channel - 1)];
    };
    auto channel_prefix = [&](int channel) -> const std::vector<double>& {
        const auto& values = channel_values(channel);
        auto& pre = prefix[static_cast<std::size_t>(channel - 1)];
        if (pre.empty()) {
            pre.resize(values.size() + 1, 0.0);
            for (std::size_t i = 0; i < values.size(); ++i) pre[i + 1] = pre[i] + values[i];
        }
        return pre;
    };

    for (std::size_t j = 0; j < specs.size(); ++j) {
        const FeatureSpec& spec = specs[j];
        const auto col = static_cast<Eigen::Index>(j);
        switch (spec.kind) {
        case FeatureKind::Intercept:
            dm.values.col(col).setOnes();
            break;
        case FeatureKind::DayOfWeek:
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    timestamps[i].weekday() == spec.arg ? 1.0 : 0.0;
            break;
        case FeatureKind::Month:
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    timestamps[i].month == spec.arg ? 1.0 : 0.0;
            break;
        case FeatureKind::Holiday:
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    exog.holiday[static_cast<std::size_t>(rows[i])];
            break;
        case FeatureKind::FourierYearly:
            for (std::size_t i = 0; i < timestamps.size(); ++i) {
                const double pos = (timestamps[i].yearday() - 1) / 365.25;
                const auto [s, c] = fourier_pair(pos, spec.arg);
                dm.values(static_cast<Eigen::Index>(i), col) = spec.cosine ? c : s;
            }
            break;
        case FeatureKind::FourierWeekly:
            for (std::size_t i = 0; i < timestamps.size(); ++i) {
                const double pos = timestamps[i].week_hour() / 168.0;
                const auto [s, c] = fourier_pair(pos, spec.arg);
                dm.values(static_cast<Eigen::Index>(i), col) = spec.cosine ? c : s;
            }
            break;
        case FeatureKind::Poly: {
            const auto& values = channel_values(spec.channel);
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    integer_power(values[static_cast<std::size_t>(rows[i])], spec.arg);
            break;
        }
        case FeatureKind::MovingAverage: {
            const auto& pre = channel_prefix(spec.channel);
            const int w = spec.arg;
            for (std::size_t i = 0; i < timestamps.size(); ++i) {
                const std::int64_t r = rows[i];
                if (r + 1 < w)
                    throw CoverageError("feature '" + spec.id() + "' at " + timestamps[i].iso() +
                                        " needs " + std::to_string(w - 1) +
                                        " hours of backfill before the exog frame start");
                dm.values(static_cast<Eigen::Index>(i), col) =
                    (pre[static_cast<std::size_t>(r + 1)] -
                     pre[static_cast<std::size_t>(r + 1 - w)]) /
                    w;
            }
            break;
        }
        case FeatureKind::InteractionMonth: {
            const auto& values = channel_values(spec.channel);
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    timestamps[i].month == spec.arg
                        ? values[static_cast<std::size_t>(rows[i])]
                        : 0.0;
            break;
        }
        case FeatureKind::InteractionDow: {
            const auto& values = channel_values(spec.channel);
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    timestamps[i].weekday() == spec.arg
                        ? values[static_cast<std::size_t>(rows[i])]
                        : 0.0;
            break;
        }
        case FeatureKind::Trend:
            for (std::size_t i = 0; i < timestamps.size(); ++i)
                dm.values(static_cast<Eigen::Index>(i), col) =
                    static_cast<double>(timestamps[i].year - kTrendBaseYear);
            break;
        }
    }

    if (!dm.values.allFinite())
        throw DataQualityError("materialize: non-finite value in design matrix");
    return dm;
}

} // namespace loadcast
