#include "o1p/error.hpp"

namespace o1p {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedRotation: return "MalformedRotation";
    case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonQuadFace: return "NonQuadFace";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::Not3Connected: return "Not3Connected";
    case ErrorCode::DuplicateDiagonal: return "DuplicateDiagonal";
    case ErrorCode::NotOptimal: return "NotOptimal";
    case ErrorCode::EmbeddingFailed: return "EmbeddingFailed";
    case ErrorCode::MalformedBook: return "MalformedBook";
    case ErrorCode::UnclassifiableFace: return "UnclassifiableFace";
    case ErrorCode::DolphinGapViolation: return "DolphinGapViolation";
    case ErrorCode::ForeignEdge: return "ForeignEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotGridFamily: return "NotGridFamily";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : Error(code, code, message) {}

Error::Error(ErrorCode code, ErrorCode cause, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), cause_(cause) {}

}  // namespace o1p
