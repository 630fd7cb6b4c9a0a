#pragma once

#include <filesystem>
#include <string>

#include "drivesync/stream.hpp"
#include "drivesync/types.hpp"

namespace drivesync {

// Reads a sensor CSV: a header line followed by rows of decimal values.
// The file must contain a "timestamp_ms" column and the named value
// column. UTF-8, LF or CRLF. Timestamps must strictly increase;
// duplicates are an ingestion error.
TimeSeries read_time_series_csv(const std::filesystem::path& path,
                                SensorKind kind,
                                const std::string& value_column = "value");

// Writes "timestamp_ms,value" rows. Deterministic formatting.
void write_time_series_csv(const std::filesystem::path& path, const TimeSeries& series);

// Fixed-point decimal with up to six fractional digits, trailing zeros
// stripped. Used everywhere a report or data file prints a double.
std::string format_double(double v);

}  // namespace drivesync
