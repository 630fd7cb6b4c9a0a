#include "drivesync/stream.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace drivesync {

void validate_time_series(const TimeSeries& series) {
    if (series.timestamps_ms.size() != series.values.size()) {
        throw InvalidArgument("timestamps and values differ in length");
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!std::isfinite(series.values[i]) || !std::isfinite(series.timestamps_ms[i])) {
            throw InvalidArgument("non-finite sample at index " + std::to_string(i));
        }
        if (i > 0 && series.timestamps_ms[i] <= series.timestamps_ms[i - 1]) {
            throw NonMonotonicTimestamps("timestamp at index " + std::to_string(i) +
                                         " does not increase");
        }
    }
}

UniformSeries resample_uniform(const TimeSeries& series, double rate_hz,
                               std::optional<TimeSpanMs> span) {
    if (series.size() < 2) {
        throw EmptySeries("resample needs at least 2 samples, got " +
                          std::to_string(series.size()));
    }
    if (!(rate_hz > 0.0)) {
        throw InvalidArgument("rate_hz must be positive");
    }
    validate_time_series(series);

    const double domain_lo = series.first_ms();
    const double domain_hi = series.last_ms();
    double t0 = domain_lo;
    double t1 = domain_hi;
    if (span) {
        t0 = span->first;
        t1 = span->second;
        if (!(t0 < t1)) throw InvalidArgument("span must have positive length");
        if (t1 < domain_lo || t0 > domain_hi) {
            throw InvalidArgument("span does not intersect series domain");
        }
    }

    const double step = 1000.0 / rate_hz;
    const auto count =
        static_cast<std::size_t>(std::floor((t1 - t0) / step + 1e-9)) + 1;

    UniformSeries out;
    out.rate_hz = rate_hz;
    out.start_ms = t0;
    out.kind = series.kind;
    out.values.resize(count);

    const auto& ts = series.timestamps_ms;
    const auto& vs = series.values;
    std::size_t hi = 1;  // ts[hi-1] <= t < ts[hi] bracket cursor
    for (std::size_t i = 0; i < count; ++i) {
        const double t = t0 + step * static_cast<double>(i);
        if (t < domain_lo || t > domain_hi) {
            out.values[i] = 0.0;
            continue;
        }
        while (hi + 1 < ts.size() && ts[hi] < t) ++hi;
        const double ta = ts[hi - 1], tb = ts[hi];
        const double frac = (t - ta) / (tb - ta);
        out.values[i] = vs[hi - 1] + frac * (vs[hi] - vs[hi - 1]);
    }
    return out;
}

UniformSeries normalize_zero_mean_unit_std(const UniformSeries& series) {
    const std::size_t n = series.size();
    if (n < 2) throw EmptySeries("normalize needs at least 2 samples");

    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);

    double var = 0.0;
    for (double v : series.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);

    const double std_dev = std::sqrt(var);
    if (std_dev == 0.0) {
        throw ConstantSeries("series has zero variance");
    }

    UniformSeries out = series;
    for (double& v : out.values) v = (v - mean) / std_dev;
    return out;
}

UniformSeries apply_sign_convention(const UniformSeries& series, SensorKind kind) {
    UniformSeries out = series;
    if (is_negated_kind(kind)) {
        for (double& v : out.values) v = -v;
    }
    return out;
}

}  // namespace drivesync
