#pragma once

#include <string>
#include <vector>

#include "loadcast/timestamp.hpp"

namespace loadcast {

enum class Strategy { Trend, NoTrend, Ensemble, Auto };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

struct RoundSpec {
    int id = 1;
    Timestamp due_date;        // submission due date (midnight, hour 24)
    Timestamp data_cutoff;     // last available training hour
    Timestamp window_start;    // first forecast hour
    Timestamp window_end;      // last forecast hour
    Strategy strategy = Strategy::Trend;

    std::int64_t window_hours() const {
        return hours_between(window_start, window_end) + 1;
    }
};

// The six qualifying-match rounds: due dates, forecast months, the data
// cutoffs (rounds 1-3 through Nov 30 2016, rounds 4-5 through Dec 31 2016,
// round 6 through Jan 31 2017) and the submitted strategy mixture (trend in
// rounds 1, 2 and 6; the trend/no-trend ensemble in rounds 3, 4 and 5).
std::vector<RoundSpec> default_rounds();

} // namespace loadcast
