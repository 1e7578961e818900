#include "imbalance/errors.hpp"

namespace imbalance {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::InvalidTransform: return "invalid-transform";
    case ErrorKind::NotAFunction: return "not-a-function";
    case ErrorKind::Inapplicable: return "inapplicable";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::IdentityViolation: return "identity-violation";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

}  // namespace imbalance
