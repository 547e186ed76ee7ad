#include "loadcast/rounds.hpp"

#include "loadcast/errors.hpp"

namespace loadcast {

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::Trend: return "trend";
    case Strategy::NoTrend: return "no_trend";
    case Strategy::Ensemble: return "ensemble";
    case Strategy::Auto: return "auto";
    }
    return "trend";
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "trend") return Strategy::Trend;
    if (name == "no_trend") return Strategy::NoTrend;
    if (name == "ensemble") return Strategy::Ensemble;
    if (name == "auto") return Strategy::Auto;
    throw ConfigError("unknown strategy '" + name + "'");
}

std::vector<RoundSpec> default_rounds() {
    auto day_end = [](int y, int m, int d) { return Timestamp{y, m, d, 24}; };
    auto day_start = [](int y, int m, int d) { return Timestamp{y, m, d, 1}; };

    std::vector<RoundSpec> rounds(6);
    rounds[0] = {1, day_end(2016, 12, 15), day_end(2016, 11, 30), day_start(2017, 1, 1),
                 day_end(2017, 1, 31), Strategy::Trend};
    rounds[1] = {2, day_end(2016, 12, 31), day_end(2016, 11, 30), day_start(2017, 2, 1),
                 day_end(2017, 2, 28), Strategy::Trend};
    rounds[2] = {3, day_end(2017, 1, 15), day_end(2016, 11, 30), day_start(2017, 2, 1),
                 day_end(2017, 2, 28), Strategy::Ensemble};
    rounds[3] = {4, day_end(2017, 1, 31), day_end(2016, 12, 31), day_start(2017, 3, 1),
                 day_end(2017, 3, 31), Strategy::Ensemble};
    rounds[4] = {5, day_end(2017, 2, 14), day_end(2016, 12, 31), day_start(2017, 3, 1),
                 day_end(2017, 3, 31), Strategy::Ensemble};
    rounds[5] = {6, day_end(2017, 2, 28), day_end(2017, 1, 31), day_start(2017, 4, 1),
                 day_end(2017, 4, 30), Strategy::Trend};
    return rounds;
}

} // namespace loadcast
