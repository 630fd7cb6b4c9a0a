#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drivesync {

// Error with a stable machine-readable code. The CLI renders these as a
// single line "ERROR <code>: <message>" on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define DRIVESYNC_DEFINE_ERROR(Name)                     \
    class Name : public Error {                          \
    public:                                              \
        explicit Name(const std::string& m = #Name)      \
            : Error(#Name, m) {}                         \
    }

DRIVESYNC_DEFINE_ERROR(EmptySeries);
DRIVESYNC_DEFINE_ERROR(NonMonotonicTimestamps);
DRIVESYNC_DEFINE_ERROR(ConstantSeries);
DRIVESYNC_DEFINE_ERROR(RateMismatch);
DRIVESYNC_DEFINE_ERROR(EmptyInput);
DRIVESYNC_DEFINE_ERROR(LagTooLarge);
DRIVESYNC_DEFINE_ERROR(EmptyCorrelation);
DRIVESYNC_DEFINE_ERROR(DimensionMismatch);
DRIVESYNC_DEFINE_ERROR(DegenerateFrame);
DRIVESYNC_DEFINE_ERROR(NoValidPixels);
DRIVESYNC_DEFINE_ERROR(TooFewFrames);
DRIVESYNC_DEFINE_ERROR(EmptyClip);
DRIVESYNC_DEFINE_ERROR(NonPositiveBin);
DRIVESYNC_DEFINE_ERROR(MissingColumn);
DRIVESYNC_DEFINE_ERROR(UnparsableRow);
DRIVESYNC_DEFINE_ERROR(InsufficientOverlap);
DRIVESYNC_DEFINE_ERROR(MissingCalibrationEntry);
DRIVESYNC_DEFINE_ERROR(PrefixTooShort);
DRIVESYNC_DEFINE_ERROR(InvalidSpec);
DRIVESYNC_DEFINE_ERROR(InvalidArgument);
DRIVESYNC_DEFINE_ERROR(ParseError);
DRIVESYNC_DEFINE_ERROR(IoError);

#undef DRIVESYNC_DEFINE_ERROR

// The seven stream labels the pipeline knows about. Flow kinds name the
// camera and axis they come from.
enum class SensorKind {
    AccelZ,
    AudioEnergy,
    FlowXFront,
    FlowYFront,
    FlowYDash,
    FlowYFace,
    SteeringAngle,
};

inline constexpr SensorKind kAllSensorKinds[] = {
    SensorKind::AccelZ,       SensorKind::AudioEnergy, SensorKind::FlowXFront,
    SensorKind::FlowYFront,   SensorKind::FlowYDash,   SensorKind::FlowYFace,
    SensorKind::SteeringAngle,
};

std::string_view to_string(SensorKind kind);
std::optional<SensorKind> sensor_kind_from_string(std::string_view name);

// True for the three streams that anti-correlate with their pairing
// reference and are negated before correlation: the vertical flow of the
// face and dash cameras and the horizontal flow of the front camera.
bool is_negated_kind(SensorKind kind);

}  // namespace drivesync
