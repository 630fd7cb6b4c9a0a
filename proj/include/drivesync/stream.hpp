#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "drivesync/types.hpp"

namespace drivesync {

// Timestamped scalar samples, possibly irregular. The universal
// intermediate every sensor adapter produces. Timestamps are real-valued
// milliseconds on the stream's own clock.
struct TimeSeries {
    std::vector<double> timestamps_ms;
    std::vector<double> values;
    SensorKind kind = SensorKind::AccelZ;

    std::size_t size() const { return timestamps_ms.size(); }
    bool empty() const { return timestamps_ms.empty(); }
    double first_ms() const { return timestamps_ms.front(); }
    double last_ms() const { return timestamps_ms.back(); }
    double duration_ms() const { return empty() ? 0.0 : last_ms() - first_ms(); }
};

// Throws if lengths differ, timestamps are not strictly increasing
// (duplicates included), or any value is non-finite.
void validate_time_series(const TimeSeries& series);

// Fixed-rate series. Sample i sits at start_ms + 1000*i/rate_hz exactly.
struct UniformSeries {
    double rate_hz = 0.0;
    double start_ms = 0.0;
    std::vector<double> values;
    SensorKind kind = SensorKind::AccelZ;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    double step_ms() const { return 1000.0 / rate_hz; }
    double time_at(std::size_t i) const { return start_ms + 1000.0 * static_cast<double>(i) / rate_hz; }
};

using TimeSpanMs = std::pair<double, double>;

// Linear interpolation onto a fixed grid. Grid points outside the series'
// time domain are filled with 0, matching the correlator's zero-extension
// convention. The grid starts at the span start (or the first timestamp)
// and covers the span end inclusively.
UniformSeries resample_uniform(const TimeSeries& series, double rate_hz,
                               std::optional<TimeSpanMs> span = std::nullopt);

// Zero mean, unit population standard deviation. Throws ConstantSeries on
// zero variance: a degenerate sensor must not reach the correlator.
UniformSeries normalize_zero_mean_unit_std(const UniformSeries& series);

// Negates the three anti-correlated flow kinds; identity for all others.
UniformSeries apply_sign_convention(const UniformSeries& series, SensorKind kind);

}  // namespace drivesync
