#pragma once

#include <stdexcept>
#include <string>

namespace qm {

enum class ErrorCode {
    UnknownGenerator,
    NegativePowerOfNonInvertible,
    NonAdmissibleKillSet,
    NotQNormal,
    MissingImage,
    RelationViolated,
    SizeMismatch,
    NotHomogeneous,
    LocalizedAmbient,
    InconsistentOracle,
    HasCorrections,
    UnknownSuite,
    ParseError,
    InvalidArgument,
};

/// Machine-readable name, e.g. "NonAdmissibleKillSet".
const char* error_code_name(ErrorCode code);

class QmError : public std::runtime_error {
public:
    QmError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    [[nodiscard]] ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a zero-based character offset into the input.
class ParseError : public QmError {
public:
    ParseError(std::size_t position, const std::string& message)
        : QmError(ErrorCode::ParseError, "at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace qm
