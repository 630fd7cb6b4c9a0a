#include "drivesync/types.hpp"

namespace drivesync {

std::string_view to_string(SensorKind kind) {
    switch (kind) {
        case SensorKind::AccelZ: return "accel_z";
        case SensorKind::AudioEnergy: return "audio_energy";
        case SensorKind::FlowXFront: return "flow_x_front";
        case SensorKind::FlowYFront: return "flow_y_front";
        case SensorKind::FlowYDash: return "flow_y_dash";
        case SensorKind::FlowYFace: return "flow_y_face";
        case SensorKind::SteeringAngle: return "steering_angle";
    }
    return "unknown";
}

std::optional<SensorKind> sensor_kind_from_string(std::string_view name) {
    for (SensorKind kind : kAllSensorKinds) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

bool is_negated_kind(SensorKind kind) {
    return kind == SensorKind::FlowYFace || kind == SensorKind::FlowYDash ||
           kind == SensorKind::FlowXFront;
}

}  // namespace drivesync
