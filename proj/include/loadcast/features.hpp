#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "loadcast/series.hpp"
#include "loadcast/timestamp.hpp"

namespace loadcast {

// Candidate-transformation families expanded from the raw variables.
enum class FeatureKind {
    Intercept,
    DayOfWeek,       // indicator, arg = 0..6 Monday-first
    Month,           // indicator, arg = 1..12
    Holiday,
    FourierYearly,   // harmonic arg, sine/cosine pair on day-of-year position
    FourierWeekly,   // harmonic arg, pair on hour-of-week position
    Poly,            // temperature channel ^ degree
    MovingAverage,   // trailing mean over `arg` hours, current hour included
    InteractionMonth, // linear temperature x month indicator
    InteractionDow,   // linear temperature x day-of-week indicator
    Trend,           // calendar year index, 2003 -> 1
};

// One candidate transformation.  The canonical id is a pure function of the
// fields and reconstructs the transformation exactly.
struct FeatureSpec {
    FeatureKind kind = FeatureKind::Intercept;
    int channel = 0; // 1-based temperature channel (Poly/MovingAverage/Interaction*)
    int arg = 0;     // harmonic / degree / window hours / dow index / month
    bool cosine = false; // Fourier families only

    std::string id() const;
    static FeatureSpec parse(const std::string& id);

    bool uses_temperature() const {
        return kind == FeatureKind::Poly || kind == FeatureKind::MovingAverage ||
               kind == FeatureKind::InteractionMonth || kind == FeatureKind::InteractionDow;
    }
    // Hours of history before a row this feature needs (window - 1 for MAs).
    int backfill_hours() const {
        return kind == FeatureKind::MovingAverage ? arg - 1 : 0;
    }

    friend bool operator==(const FeatureSpec& a, const FeatureSpec& b) = default;
};

// Parameter ranges the catalog is generated from.
struct GridConfig {
    int yearly_harmonics = 3;
    int weekly_harmonics = 3;
    std::vector<int> ma_windows = {2, 4, 8, 24, 48, 168};
    int poly_degree_max = 3;
    bool month_interactions = true;
    bool dow_interactions = true;

    void validate() const; // throws ConfigError on nonsense or an all-empty grid
};

enum class TrendMode { On, Off, Auto };

std::string to_string(TrendMode mode);
TrendMode trend_mode_from_string(const std::string& name);

struct FeatureCatalog {
    std::vector<FeatureSpec> specs; // deterministic order, intercept first
    GridConfig grid;

    std::size_t size() const { return specs.size(); }
    bool contains(const std::string& id) const;
    // Largest moving-average window in the catalog, 0 if none.
    int max_backfill_hours() const;
};

// Expands the catalog for a dataset with `channels` temperature channels:
// intercept, 7 day-of-week indicators, 12 month indicators, holiday, yearly
// and weekly Fourier pairs, per-channel polynomials and trailing moving
// averages, linear-temperature interactions, and (trend_mode != Off) the
// trend feature.
FeatureCatalog build_catalog(std::size_t channels, const GridConfig& grid, TrendMode trend_mode);
FeatureCatalog build_catalog(const ZoneDataset& dataset, const GridConfig& grid,
                             TrendMode trend_mode);

// Closed-form catalog size for a grid; tested against enumeration.
std::size_t catalog_size(std::size_t channels, const GridConfig& grid, TrendMode trend_mode);

// (sin(2*pi*harmonic*position), cos(2*pi*harmonic*position))
std::pair<double, double> fourier_pair(double position, int harmonic);

// Exogenous inputs covering a contiguous hourly span: temperature channels
// plus holiday flags.  At training time this is a slice of the dataset; at
// forecast time the temperatures come from a shuffled scenario while the
// holiday flags come from the real forecast calendar.
struct ExogFrame {
    Timestamp start;
    std::vector<std::vector<double>> temperatures; // [channel][row]
    std::vector<double> holiday;

    std::size_t size() const { return holiday.size(); }
    std::int64_t row_of(const Timestamp& ts) const { return ts.serial() - start.serial(); }

    static ExogFrame from_dataset(const ZoneDataset& dataset, const Timestamp& from,
                                  const Timestamp& to);
};

struct DesignMatrix {
    std::vector<std::string> column_ids;
    std::vector<Timestamp> row_timestamps;
    Eigen::MatrixXd values; // rows x columns

    std::size_t rows() const { return row_timestamps.size(); }
    std::size_t cols() const { return column_ids.size(); }
};

// Evaluates each spec at each timestamp.  Timestamps need not be contiguous
// (per-hour training rows are 24 hours apart); every temperature-derived
// value is read from `exog`, and moving averages are trailing means over the
// preceding `w` hours including the current one.
DesignMatrix materialize(const std::vector<FeatureSpec>& specs,
                         const std::vector<Timestamp>& timestamps, const ExogFrame& exog);

} // namespace loadcast
