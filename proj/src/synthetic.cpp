#include "loadcast/synthetic.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "loadcast/csv.hpp"
#include "loadcast/errors.hpp"
#include "loadcast/features.hpp"

namespace loadcast {

namespace {

// Self-contained RNG so generated files do not depend on the standard
// library's distribution implementations.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    double gauss() { // Box-Muller
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
};

struct ZoneParams {
    double base;
    std::array<double, 7> dow;
    std::array<double, 24> hour;
    double yearly_sin1, yearly_cos1, yearly_sin2;
    double temp_lin, temp_quad, temp_cubic;
    double temp_offset; // zone climate offset, degrees
};

ZoneParams draw_zone_params(SplitMix64& rng) {
    ZoneParams p{};
    p.base = 900.0 + 300.0 * rng.uniform();
    for (int d = 0; d < 7; ++d) p.dow[d] = (d >= 5 ? -110.0 : 20.0) + 35.0 * rng.uniform();
    for (int h = 0; h < 24; ++h)
        p.hour[h] = 95.0 * std::sin(2.0 * std::numbers::pi * (h - 6) / 24.0) + 25.0 * rng.uniform();
    p.yearly_sin1 = 50.0 + 30.0 * rng.uniform();
    p.yearly_cos1 = 60.0 + 30.0 * rng.uniform();
    p.yearly_sin2 = 20.0 + 15.0 * rng.uniform();
    p.temp_lin = -14.0 + 4.0 * rng.uniform();
    p.temp_quad = 22.0 + 6.0 * rng.uniform();
    p.temp_cubic = 2.0 + 1.5 * rng.uniform();
    p.temp_offset = 6.0 * rng.uniform() - 3.0;
    return p;
}

} // namespace

void SynthConfig::validate() const {
    if (years < 4)
        throw ConfigError("synthetic: years must be >= 4 (3 training + 1 extra history year)");
    if (zones < 1) throw ConfigError("synthetic: zones must be >= 1");
    if (noise_sigma < 0.0) throw ConfigError("synthetic: noise_sigma must be >= 0");
    if (buffer_days < 10)
        throw ConfigError("synthetic: buffer_days must cover backfill plus day shifts (>= 10)");
}

ZoneDataset generate_synthetic_zone(const SynthConfig& config, int zone_index) {
    config.validate();

    SplitMix64 seeder{config.seed};
    for (int i = 0; i <= zone_index; ++i) seeder.next();
    SplitMix64 rng{seeder.next()};
    const ZoneParams params = draw_zone_params(rng);

    const DstCalendar calendar = DstCalendar::us();
    const Timestamp begin =
        Timestamp{config.first_year(), 1, 1, 1}.add_days(-config.buffer_days);
    const Timestamp end{2017, 12, 31, 24};
    const std::int64_t total_hours = hours_between(begin, end) + 1;

    ZoneDataset ds;
    ds.zone_id = "Z" + std::to_string(zone_index + 1);
    ds.temperatures.resize(2);

    // Trailing history of temp_1 for the 24h mean; seeded flat at the first value.
    std::array<double, 24> temp_window{};
    double ar1 = 0.0, ar2 = 0.0;

    for (std::int64_t i = 0; i < total_hours; ++i) {
        const Timestamp ts = begin.add_hours(i);
        const double yearly_pos = (ts.yearday() - 1) / 365.25;

        ar1 = 0.95 * ar1 + 1.3 * rng.gauss();
        ar2 = 0.9 * ar2 + 0.9 * rng.gauss();
        const double seasonal =
            -24.0 * std::cos(2.0 * std::numbers::pi * (yearly_pos + 10.0 / 365.25));
        const double diurnal = -7.0 * std::cos(2.0 * std::numbers::pi * (ts.hour - 6) / 24.0);
        const double temp1 = 47.0 + params.temp_offset + seasonal + diurnal + ar1;
        const double temp2 = 0.75 * temp1 - 6.0 + ar2;

        if (i == 0) temp_window.fill(temp1);
        temp_window[static_cast<std::size_t>(i % 24)] = temp1;
        double ma24 = 0.0;
        for (double v : temp_window) ma24 += v;
        ma24 /= 24.0;

        const bool holiday = is_us_federal_holiday(ts.year, ts.month, ts.day);
        const auto pair1 = fourier_pair(yearly_pos, 1);
        const double s1 = pair1.first, c1 = pair1.second;
        const double s2 = fourier_pair(yearly_pos, 2).first;
        const double u = (temp1 - 55.0) / 10.0;

        double load = params.base + params.dow[static_cast<std::size_t>(ts.weekday())] +
                      params.hour[static_cast<std::size_t>(ts.hour - 1)] +
                      params.yearly_sin1 * s1 + params.yearly_cos1 * c1 + params.yearly_sin2 * s2 +
                      params.temp_lin * u + params.temp_quad * u * u +
                      params.temp_cubic * u * u * u + config.ma24_effect * (ma24 - 55.0) +
                      (holiday ? config.holiday_effect : 0.0) +
                      config.trend_per_year * (ts.year - 2002);
        if (config.noise_sigma > 0.0) load += config.noise_sigma * rng.gauss();

        // Raw-file DST anomalies for years before 2016.
        if (ts.year < 2016 && calendar.is_spring_forward(ts.year, ts.month, ts.day) && ts.hour == 2)
            continue; // the skipped hour never reaches the file
        const bool split_fallback = ts.year < 2016 && ts.hour == 2 &&
                                    calendar.is_fall_back(ts.year, ts.month, ts.day);

        const double flag = holiday ? 1.0 : 0.0;
        if (split_fallback) {
            // Two duplicate rows splitting the hour symmetrically; their mean
            // reproduces the true value exactly.
            const double load_delta = 4.0 * (rng.uniform() - 0.5);
            const double temp_delta = 0.6 * (rng.uniform() - 0.5);
            for (int half = 0; half < 2; ++half) {
                const double sign = half == 0 ? 1.0 : -1.0;
                ds.grid.push_back(ts);
                ds.load.push_back(load + sign * load_delta);
                ds.temperatures[0].push_back(temp1 + sign * temp_delta);
                ds.temperatures[1].push_back(temp2 + sign * temp_delta);
                ds.holiday.push_back(flag);
            }
        } else {
            ds.grid.push_back(ts);
            ds.load.push_back(load);
            ds.temperatures[0].push_back(temp1);
            ds.temperatures[1].push_back(temp2);
            ds.holiday.push_back(flag);
        }
    }
    return ds;
}

SynthOutput generate_synthetic(const SynthConfig& config, const std::string& out_dir) {
    config.validate();
    std::filesystem::create_directories(out_dir);

    SynthOutput out;
    for (int z = 0; z < config.zones; ++z) {
        const ZoneDataset ds = generate_synthetic_zone(config, z);
        const std::string path = out_dir + "/zone_" + std::to_string(z + 1) + ".csv";
        dump_csv(ds, path);
        out.zone_ids.push_back(ds.zone_id);
        out.paths.push_back(path);
    }
    return out;
}

} // namespace loadcast
