#include "loadcast/series.hpp"

#include <cmath>

#include "loadcast/errors.hpp"

namespace loadcast {

bool HourlySeries::contiguous_hourly() const {
    if (timestamps.size() != values.size()) return false;
    for (std::size_t i = 1; i < timestamps.size(); ++i)
        if (timestamps[i].serial() != timestamps[i - 1].serial() + 1) return false;
    return true;
}

std::optional<std::size_t> ZoneDataset::index_of(const Timestamp& ts) const {
    if (grid.empty()) return std::nullopt;
    const std::int64_t offset = ts.serial() - grid.front().serial();
    if (offset < 0 || offset >= static_cast<std::int64_t>(grid.size())) return std::nullopt;
    return static_cast<std::size_t>(offset);
}

void ZoneDataset::validate() const {
    const std::size_t n = grid.size();
    if (load.size() != n || holiday.size() != n)
        throw AlignmentError("zone '" + zone_id + "': series lengths differ from grid");
    for (const auto& channel : temperatures)
        if (channel.size() != n)
            throw AlignmentError("zone '" + zone_id + "': temperature channel length differs from grid");
    for (std::size_t i = 0; i < n; ++i) {
        if (holiday[i] != 0.0 && holiday[i] != 1.0)
            throw DataQualityError("zone '" + zone_id + "': holiday flag at " + grid[i].iso() +
                                   " is not 0 or 1");
        if (!std::isfinite(load[i]))
            throw DataQualityError("zone '" + zone_id + "': non-finite load at " + grid[i].iso());
    }
}

ZoneDataset aggregate_zone(const std::vector<ZoneDataset>& children, const std::string& zone_id) {
    if (children.empty()) throw AlignmentError("aggregate_zone: no children for '" + zone_id + "'");

    const ZoneDataset& first = children.front();
    for (const ZoneDataset& child : children) {
        if (child.grid.size() != first.grid.size())
            throw AlignmentError("aggregate_zone '" + zone_id + "': child '" + child.zone_id +
                                 "' grid length differs");
        for (std::size_t i = 0; i < child.grid.size(); ++i)
            if (child.grid[i] != first.grid[i])
                throw AlignmentError("aggregate_zone '" + zone_id + "': child '" + child.zone_id +
                                     "' grid mismatch at " + first.grid[i].iso());
    }

    ZoneDataset out;
    out.zone_id = zone_id;
    out.grid = first.grid;
    out.dst_normalized = first.dst_normalized;
    const std::size_t n = out.grid.size();

    out.load.assign(n, 0.0);
    out.holiday.assign(n, 0.0);
    for (const ZoneDataset& child : children) {
        for (std::size_t i = 0; i < n; ++i) {
            out.load[i] += child.load[i];
            if (child.holiday[i] > out.holiday[i]) out.holiday[i] = child.holiday[i];
        }
        for (const auto& channel : child.temperatures) out.temperatures.push_back(channel);
        out.dst_normalized = out.dst_normalized && child.dst_normalized;
    }
    return out;
}

} // namespace loadcast
