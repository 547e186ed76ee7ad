#pragma once

#include <vector>

#include "loadcast/ols.hpp"
#include "loadcast/series.hpp"

namespace loadcast {

// The fixed-structure competition benchmark: one single OLS regression of
// load on trend, month indicators, weekday x hour indicators, a cubic
// temperature polynomial, and the polynomial's interactions with month and
// hour.  Only the parameters are estimated; the structure never changes.
// Temperature is the dataset's first channel.
struct VanillaModel {
    OlsFit fit;
    std::size_t design_columns = 0;
};

VanillaModel fit_vanilla(const ZoneDataset& dataset, const Timestamp& window_start,
                         const Timestamp& window_end);

// Point prediction for `timestamps` given one temperature trajectory aligned
// with them.
HourlySeries vanilla_predict(const VanillaModel& model, const std::vector<Timestamp>& timestamps,
                             const std::vector<double>& temperature);

// Convenience fit-then-predict.
HourlySeries vanilla_forecast(const ZoneDataset& dataset, const Timestamp& window_start,
                              const Timestamp& window_end,
                              const std::vector<Timestamp>& forecast_timestamps,
                              const std::vector<double>& temperature);

} // namespace loadcast
