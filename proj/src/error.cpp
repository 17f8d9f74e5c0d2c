#include "pls/error.hpp"

namespace pls {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::SingularGram: return "SingularGram";
        case ErrorKind::NoNullspace: return "NoNullspace";
        case ErrorKind::ZeroChannel: return "ZeroChannel";
        case ErrorKind::InvalidGeometry: return "InvalidGeometry";
        case ErrorKind::InvalidPower: return "InvalidPower";
        case ErrorKind::InsufficientSamples: return "InsufficientSamples";
        case ErrorKind::DegenerateVariance: return "DegenerateVariance";
        case ErrorKind::EmptySamples: return "EmptySamples";
        case ErrorKind::UnknownScenario: return "UnknownScenario";
        case ErrorKind::CellFailed: return "CellFailed";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::MissingScheme: return "MissingScheme";
    }
    return "Unknown";
}

}  // namespace pls
