#include "loadcast/dst.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "loadcast/errors.hpp"

namespace loadcast {

namespace {

struct DayRows {
    std::int64_t civil_day = 0;
    // Row indices per hour-ending 1..24; -1 missing, second slot for duplicates.
    std::array<int, 24> first{};
    std::array<int, 24> second{};
    int anomalies() const {
        int n = 0;
        for (int h = 0; h < 24; ++h) {
            if (first[h] < 0) ++n;
            if (second[h] >= 0) ++n;
        }
        return n;
    }
};

std::string day_name(std::int64_t civil_day) {
    int y = 0, m = 0, d = 0;
    civil_from_days(civil_day, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

} // namespace

ZoneDataset normalize_dst(const ZoneDataset& raw, const DstOptions& options) {
    if (raw.dst_normalized) return raw;
    if (raw.grid.empty()) throw DataQualityError("normalize_dst: empty dataset");

    // Bucket rows into civil days.
    std::vector<DayRows> days;
    std::int64_t current_day = raw.grid.front().serial() / 24 - 1;
    for (std::size_t i = 0; i < raw.grid.size(); ++i) {
        const Timestamp& ts = raw.grid[i];
        const std::int64_t day = days_from_civil(ts.year, ts.month, ts.day);
        if (day != current_day) {
            if (day < current_day)
                throw DataQualityError("normalize_dst: unsorted input at " + ts.iso());
            while (++current_day < day) {
                // Whole missing day between rows.
                throw DataQualityError("normalize_dst: no samples on " + day_name(current_day));
            }
            DayRows fresh;
            fresh.civil_day = day;
            fresh.first.fill(-1);
            fresh.second.fill(-1);
            days.push_back(fresh);
        }
        DayRows& bucket = days.back();
        const int h = ts.hour - 1;
        if (bucket.first[h] < 0)
            bucket.first[h] = static_cast<int>(i);
        else if (bucket.second[h] < 0)
            bucket.second[h] = static_cast<int>(i);
        else
            throw NormalizationError("normalize_dst: hour " + ts.iso() + " appears 3+ times");
    }

    ZoneDataset out;
    out.zone_id = raw.zone_id;
    out.temperatures.resize(raw.channels());
    out.dst_normalized = true;

    const std::size_t channels = raw.channels();
    auto push_row = [&](const Timestamp& ts, double load, const std::vector<double>& temps,
                        double holiday) {
        out.grid.push_back(ts);
        out.load.push_back(load);
        for (std::size_t c = 0; c < channels; ++c) out.temperatures[c].push_back(temps[c]);
        out.holiday.push_back(holiday);
    };
    auto push_existing = [&](int row) {
        out.grid.push_back(raw.grid[static_cast<std::size_t>(row)]);
        out.load.push_back(raw.load[static_cast<std::size_t>(row)]);
        for (std::size_t c = 0; c < channels; ++c)
            out.temperatures[c].push_back(raw.temperatures[c][static_cast<std::size_t>(row)]);
        out.holiday.push_back(raw.holiday[static_cast<std::size_t>(row)]);
    };

    std::vector<double> temps(channels, 0.0);
    for (const DayRows& day : days) {
        int y = 0, m = 0, d = 0;
        civil_from_days(day.civil_day, y, m, d);
        const bool spring = options.calendar.is_spring_forward(y, m, d);
        const bool fall = options.calendar.is_fall_back(y, m, d);
        const int anomalies = day.anomalies();

        if (anomalies > 1)
            throw NormalizationError("normalize_dst: " + day_name(day.civil_day) + " has " +
                                     std::to_string(anomalies) + " gaps/duplicates");

        if (anomalies == 0) {
            const bool halve = fall && options.assume_summed_fallback && y < options.clean_from_year;
            for (int h = 0; h < 24; ++h) {
                if (halve && h == 1) {
                    const auto row = static_cast<std::size_t>(day.first[h]);
                    for (std::size_t c = 0; c < channels; ++c) temps[c] = raw.temperatures[c][row];
                    push_row(raw.grid[row], raw.load[row] / 2.0, temps, raw.holiday[row]);
                } else {
                    push_existing(day.first[h]);
                }
            }
            continue;
        }

        // Exactly one anomaly on this day.
        if (day.first[1] < 0 && spring) {
            // Missing hour-ending 2: insert the mean of hours 1 and 3.
            for (int h = 0; h < 24; ++h) {
                if (h == 1) {
                    const auto a = static_cast<std::size_t>(day.first[0]);
                    const auto b = static_cast<std::size_t>(day.first[2]);
                    for (std::size_t c = 0; c < channels; ++c)
                        temps[c] = (raw.temperatures[c][a] + raw.temperatures[c][b]) / 2.0;
                    Timestamp ts = raw.grid[a];
                    ts.hour = 2;
                    push_row(ts, (raw.load[a] + raw.load[b]) / 2.0, temps,
                             std::max(raw.holiday[a], raw.holiday[b]));
                } else {
                    push_existing(day.first[h]);
                }
            }
            continue;
        }
        if (day.second[1] >= 0 && fall) {
            // Double-counted hour-ending 2: half the summed value.
            for (int h = 0; h < 24; ++h) {
                if (h == 1) {
                    const auto a = static_cast<std::size_t>(day.first[h]);
                    const auto b = static_cast<std::size_t>(day.second[h]);
                    for (std::size_t c = 0; c < channels; ++c)
                        temps[c] = (raw.temperatures[c][a] + raw.temperatures[c][b]) / 2.0;
                    push_row(raw.grid[a], (raw.load[a] + raw.load[b]) / 2.0, temps,
                             std::max(raw.holiday[a], raw.holiday[b]));
                } else {
                    push_existing(day.first[h]);
                }
            }
            continue;
        }

        // One anomaly that the two DST rules do not cover.
        for (int h = 0; h < 24; ++h) {
            if (day.first[h] < 0) {
                Timestamp ts;
                civil_from_days(day.civil_day, ts.year, ts.month, ts.day);
                ts.hour = h + 1;
                throw DataQualityError("normalize_dst: gap at " + ts.iso() +
                                       (spring || fall ? " (not the DST hour)" : " (non-DST date)"));
            }
            if (day.second[h] >= 0) {
                const Timestamp& ts = raw.grid[static_cast<std::size_t>(day.first[h])];
                throw DataQualityError("normalize_dst: duplicate at " + ts.iso() +
                                       (fall ? " (not the DST hour)" : " (non-DST date)"));
            }
        }
    }

    out.validate();
    return out;
}

} // namespace loadcast
