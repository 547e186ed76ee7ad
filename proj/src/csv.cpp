#include "loadcast/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "loadcast/errors.hpp"

namespace loadcast {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name,
                         const std::string& path) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw SchemaError("column '" + name + "' not found in " + path);
    return static_cast<std::size_t>(it - header.begin());
}

double parse_number(const std::string& raw, const char* what, std::size_t line_no,
                    const std::string& path) {
    const std::string text = trim(raw);
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw IngestError(path + ":" + std::to_string(line_no) + ": non-numeric " + what + " '" +
                          raw + "'");
    return value;
}

int parse_integer(const std::string& raw, const char* what, std::size_t line_no,
                  const std::string& path) {
    const std::string text = trim(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw IngestError(path + ":" + std::to_string(line_no) + ": non-integer " + what + " '" +
                          raw + "'");
    return value;
}

Timestamp parse_date(const std::string& raw, std::size_t line_no, const std::string& path) {
    const std::string text = trim(raw);
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw IngestError(path + ":" + std::to_string(line_no) + ": unparseable date '" + raw + "'");
    Timestamp ts;
    ts.year = parse_integer(text.substr(0, 4), "year", line_no, path);
    ts.month = parse_integer(text.substr(5, 2), "month", line_no, path);
    ts.day = parse_integer(text.substr(8, 2), "day", line_no, path);
    ts.hour = 1;
    if (!ts.valid())
        throw IngestError(path + ":" + std::to_string(line_no) + ": invalid date '" + raw + "'");
    return ts;
}

} // namespace

ZoneDataset ingest_csv(const std::string& path, const CsvSchema& schema,
                       const std::string& zone_id) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw IngestError(path + ": empty file");
    std::vector<std::string> header = split_line(line);
    for (auto& h : header) h = trim(h);

    std::size_t ts_col = 0, date_col = 0, hour_col = 0;
    if (schema.pair_mode()) {
        date_col = column_index(header, schema.date_column, path);
        hour_col = column_index(header, schema.hour_column, path);
    } else {
        ts_col = column_index(header, schema.timestamp_column, path);
    }
    const std::size_t load_col = column_index(header, schema.load_column, path);
    std::vector<std::size_t> temp_cols;
    for (const auto& name : schema.temperature_columns)
        temp_cols.push_back(column_index(header, name, path));
    const std::size_t holiday_col = column_index(header, schema.holiday_column, path);

    ZoneDataset ds;
    ds.zone_id = zone_id;
    ds.temperatures.resize(temp_cols.size());

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() < header.size())
            throw IngestError(path + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));

        Timestamp ts;
        if (schema.pair_mode()) {
            ts = parse_date(fields[date_col], line_no, path);
            int hour = parse_integer(fields[hour_col], "hour", line_no, path);
            if (schema.hour_convention == CsvSchema::HourConvention::Beginning0To23) hour += 1;
            if (hour < 1 || hour > 24)
                throw IngestError(path + ":" + std::to_string(line_no) + ": hour out of range");
            ts.hour = hour;
        } else {
            try {
                ts = Timestamp::parse_iso(trim(fields[ts_col]));
            } catch (const IngestError& e) {
                throw IngestError(path + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }

        ds.grid.push_back(ts);
        ds.load.push_back(parse_number(fields[load_col], "load", line_no, path));
        for (std::size_t c = 0; c < temp_cols.size(); ++c)
            ds.temperatures[c].push_back(
                parse_number(fields[temp_cols[c]], "temperature", line_no, path));
        ds.holiday.push_back(parse_number(fields[holiday_col], "holiday flag", line_no, path));
    }

    // Stable sort by timestamp keeps duplicate rows in file order.
    std::vector<std::size_t> order(ds.grid.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ds.grid[a].serial() < ds.grid[b].serial();
    });

    ZoneDataset sorted;
    sorted.zone_id = ds.zone_id;
    sorted.temperatures.resize(ds.temperatures.size());
    sorted.grid.reserve(order.size());
    for (std::size_t i : order) {
        sorted.grid.push_back(ds.grid[i]);
        sorted.load.push_back(ds.load[i]);
        for (std::size_t c = 0; c < ds.temperatures.size(); ++c)
            sorted.temperatures[c].push_back(ds.temperatures[c][i]);
        sorted.holiday.push_back(ds.holiday[i]);
    }
    sorted.validate();
    return sorted;
}

namespace {

void append_double(std::string& out, double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, ptr);
}

} // namespace

void dump_csv(const ZoneDataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot write " + path);

    std::string header = "timestamp,load";
    for (std::size_t c = 0; c < dataset.channels(); ++c)
        header += ",temp_" + std::to_string(c + 1);
    header += ",holiday";
    out << header << '\n';

    std::string row;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        row.clear();
        row += dataset.grid[i].iso();
        row += ',';
        append_double(row, dataset.load[i]);
        for (std::size_t c = 0; c < dataset.channels(); ++c) {
            row += ',';
            append_double(row, dataset.temperatures[c][i]);
        }
        row += ',';
        append_double(row, dataset.holiday[i]);
        out << row << '\n';
    }
    if (!out) throw IngestError("write failed for " + path);
}

} // namespace loadcast
