#include "qm/errors.hpp"

namespace qm {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
        case ErrorCode::NegativePowerOfNonInvertible: return "NegativePowerOfNonInvertible";
        case ErrorCode::NonAdmissibleKillSet: return "NonAdmissibleKillSet";
        case ErrorCode::NotQNormal: return "NotQNormal";
        case ErrorCode::MissingImage: return "MissingImage";
        case ErrorCode::RelationViolated: return "RelationViolated";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::LocalizedAmbient: return "LocalizedAmbient";
        case ErrorCode::InconsistentOracle: return "InconsistentOracle";
        case ErrorCode::HasCorrections: return "HasCorrections";
        case ErrorCode::UnknownSuite: return "UnknownSuite";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace qm
