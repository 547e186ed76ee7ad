#include "loadcast/vanilla.hpp"

#include <string>

#include "loadcast/errors.hpp"

namespace loadcast {

namespace {

// Column layout: trend | month(12) | dow x hour(168) | T,T^2,T^3 |
// T^d x month(36) | T^d x hour(72).  Redundant indicator encodings are fine;
// the solver drops later collinear columns deterministically.
constexpr int kColumns = 1 + 12 + 7 * 24 + 3 + 3 * 12 + 3 * 24;

void fill_row(Eigen::MatrixXd& x, Eigen::Index row, const Timestamp& ts, double temp) {
    Eigen::Index c = 0;
    x(row, c++) = static_cast<double>(ts.year - 2002);
    for (int m = 1; m <= 12; ++m) x(row, c++) = ts.month == m ? 1.0 : 0.0;
    const int dow = ts.weekday();
    for (int d = 0; d < 7; ++d)
        for (int h = 1; h <= 24; ++h) x(row, c++) = (dow == d && ts.hour == h) ? 1.0 : 0.0;
    const double t1 = temp, t2 = temp * temp, t3 = t2 * temp;
    x(row, c++) = t1;
    x(row, c++) = t2;
    x(row, c++) = t3;
    for (double td : {t1, t2, t3})
        for (int m = 1; m <= 12; ++m) x(row, c++) = ts.month == m ? td : 0.0;
    for (double td : {t1, t2, t3})
        for (int h = 1; h <= 24; ++h) x(row, c++) = ts.hour == h ? td : 0.0;
}

Eigen::MatrixXd build_design(const std::vector<Timestamp>& timestamps,
                             const std::vector<double>& temperature) {
    Eigen::MatrixXd x(static_cast<Eigen::Index>(timestamps.size()), kColumns);
    for (std::size_t i = 0; i < timestamps.size(); ++i)
        fill_row(x, static_cast<Eigen::Index>(i), timestamps[i], temperature[i]);
    return x;
}

} // namespace

VanillaModel fit_vanilla(const ZoneDataset& dataset, const Timestamp& window_start,
                         const Timestamp& window_end) {
    if (dataset.channels() == 0)
        throw TrainingError("vanilla: dataset '" + dataset.zone_id + "' has no temperature channel");
    const auto begin = dataset.index_of(window_start);
    const auto end = dataset.index_of(window_end);
    if (!begin || !end || *end < *begin)
        throw TrainingError("vanilla: window [" + window_start.iso() + ", " + window_end.iso() +
                            "] not inside dataset '" + dataset.zone_id + "'");
    const std::int64_t window_hours = hours_between(window_start, window_end) + 1;
    if (window_hours < 365 * 24)
        throw TrainingError("vanilla: needs at least one year of training data");

    const std::size_t n = *end - *begin + 1;
    std::vector<Timestamp> ts(dataset.grid.begin() + static_cast<std::ptrdiff_t>(*begin),
                              dataset.grid.begin() + static_cast<std::ptrdiff_t>(*begin + n));
    std::vector<double> temp(dataset.temperatures[0].begin() + static_cast<std::ptrdiff_t>(*begin),
                             dataset.temperatures[0].begin() + static_cast<std::ptrdiff_t>(*begin + n));
    const Eigen::MatrixXd x = build_design(ts, temp);
    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) y(static_cast<Eigen::Index>(i)) = dataset.load[*begin + i];

    VanillaModel model;
    model.fit = fit_ols(x, y);
    model.design_columns = kColumns;
    return model;
}

HourlySeries vanilla_predict(const VanillaModel& model, const std::vector<Timestamp>& timestamps,
                             const std::vector<double>& temperature) {
    if (timestamps.size() != temperature.size())
        throw AlignmentError("vanilla_predict: temperature trajectory length mismatch");
    const Eigen::MatrixXd x = build_design(timestamps, temperature);
    const Eigen::VectorXd yhat = model.fit.predict(x);

    HourlySeries out;
    out.timestamps = timestamps;
    out.values.assign(yhat.data(), yhat.data() + yhat.size());
    return out;
}

HourlySeries vanilla_forecast(const ZoneDataset& dataset, const Timestamp& window_start,
                              const Timestamp& window_end,
                              const std::vector<Timestamp>& forecast_timestamps,
                              const std::vector<double>& temperature) {
    const VanillaModel model = fit_vanilla(dataset, window_start, window_end);
    return vanilla_predict(model, forecast_timestamps, temperature);
}

} // namespace loadcast
