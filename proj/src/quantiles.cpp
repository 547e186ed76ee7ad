#include "loadcast/quantiles.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "loadcast/errors.hpp"

namespace loadcast {

bool QuantileForecast::monotone_levels() const {
    for (const auto& row : values)
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i] < row[i - 1]) return false;
    return true;
}

double quantile_type7_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 0) throw DomainError("quantile_type7: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile_type7: p outside [0, 1]");

    const double h = (static_cast<double>(n) - 1.0) * p + 1.0;
    const auto j = static_cast<std::size_t>(std::floor(h)); // 1-based
    const double gamma = h - static_cast<double>(j);
    const double lower = sorted[j - 1];
    const double upper = j < n ? sorted[j] : sorted[n - 1];
    return (1.0 - gamma) * lower + gamma * upper;
}

double quantile_type7(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    return quantile_type7_sorted(values, p);
}

QuantileForecast reduce_to_deciles(const std::vector<HourlySeries>& trajectories) {
    if (trajectories.empty()) throw AlignmentError("reduce_to_deciles: no trajectories");
    const HourlySeries& first = trajectories.front();
    for (const HourlySeries& t : trajectories) {
        if (t.timestamps.size() != first.timestamps.size())
            throw AlignmentError("reduce_to_deciles: trajectory length mismatch");
        for (std::size_t i = 0; i < t.timestamps.size(); ++i)
            if (t.timestamps[i] != first.timestamps[i])
                throw AlignmentError("reduce_to_deciles: trajectory timestamps misaligned at " +
                                     first.timestamps[i].iso());
    }

    QuantileForecast out;
    out.timestamps = first.timestamps;
    out.values.resize(first.timestamps.size());

    std::vector<double> sample(trajectories.size());
    for (std::size_t i = 0; i < first.timestamps.size(); ++i) {
        for (std::size_t k = 0; k < trajectories.size(); ++k) sample[k] = trajectories[k].values[i];
        std::sort(sample.begin(), sample.end());
        for (std::size_t q = 0; q < kDecileLevels.size(); ++q)
            out.values[i][q] = quantile_type7_sorted(sample, kDecileLevels[q]);
    }
    return out;
}

QuantileForecast ensemble_average(const QuantileForecast& a, const QuantileForecast& b) {
    if (a.timestamps.size() != b.timestamps.size())
        throw AlignmentError("ensemble_average: forecast lengths differ");
    for (std::size_t i = 0; i < a.timestamps.size(); ++i)
        if (a.timestamps[i] != b.timestamps[i])
            throw AlignmentError("ensemble_average: timestamps differ at " + a.timestamps[i].iso());

    QuantileForecast out;
    out.timestamps = a.timestamps;
    out.values.resize(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        for (std::size_t q = 0; q < kDecileLevels.size(); ++q)
            out.values[i][q] = (a.values[i][q] + b.values[i][q]) / 2.0;
    return out;
}

namespace {

void append_fixed(std::string& out, double value, int precision) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                                   precision);
    out.append(buf, ptr);
}

} // namespace

void write_quantile_csv(const QuantileForecast& forecast, const std::string& path, int precision) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot write " + path);
    out << "timestamp,q10,q20,q30,q40,q50,q60,q70,q80,q90\n";
    std::string row;
    for (std::size_t i = 0; i < forecast.size(); ++i) {
        row.clear();
        row += forecast.timestamps[i].iso();
        for (double v : forecast.values[i]) {
            row += ',';
            append_fixed(row, v, precision);
        }
        out << row << '\n';
    }
    if (!out) throw IngestError("write failed for " + path);
}

QuantileForecast read_quantile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw IngestError(path + ": empty file");

    QuantileForecast out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        if (!std::getline(ss, field, ',')) continue;
        out.timestamps.push_back(Timestamp::parse_iso(field));
        std::array<double, 9> row{};
        for (std::size_t q = 0; q < 9; ++q) {
            if (!std::getline(ss, field, ','))
                throw IngestError(path + ":" + std::to_string(line_no) + ": expected 9 deciles");
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{})
                throw IngestError(path + ":" + std::to_string(line_no) + ": non-numeric decile");
            row[q] = v;
        }
        out.values.push_back(row);
    }
    return out;
}

} // namespace loadcast
