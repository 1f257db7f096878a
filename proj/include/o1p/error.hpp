#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace o1p {

enum class ErrorCode {
    MalformedRotation,
    NonPlanarRotation,
    NotSimple,
    Disconnected,
    NonQuadFace,
    NotBipartite,
    Not3Connected,
    DuplicateDiagonal,
    NotOptimal,
    EmbeddingFailed,
    MalformedBook,
    UnclassifiableFace,
    DolphinGapViolation,
    ForeignEdge,
    TooLarge,
    NotGridFamily,
    GenerationFailed,
    InvalidArgument,
    ParseError,
    ValidationError,
    IoError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. `cause` is set when one error wraps
// another (parse-time validation, NotOptimal raised from a quad check).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);
    Error(ErrorCode code, ErrorCode cause, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    ErrorCode cause() const noexcept { return cause_; }

  private:
    ErrorCode code_;
    ErrorCode cause_;
};

}  // namespace o1p
