#include "rodrigues/error.hpp"

namespace rodrigues {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NotUnit: return "NotUnit";
        case ErrorCode::HalfTurnUndefined: return "HalfTurnUndefined";
        case ErrorCode::NotARotation: return "NotARotation";
        case ErrorCode::NotPerpendicular: return "NotPerpendicular";
        case ErrorCode::ParallelAxes: return "ParallelAxes";
        case ErrorCode::DegenerateComposition: return "DegenerateComposition";
        case ErrorCode::MissingInput: return "MissingInput";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace rodrigues
