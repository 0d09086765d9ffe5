#pragma once

#include <stdexcept>

namespace polycat {

// Base class for all library errors. The CLI maps these to its
// usage-error exit code; mathematical verification failures are not
// exceptions but explicit report fields.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidIndex : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct InvalidTerm : Error { using Error::Error; };
struct UnboundedOperand : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct TruncateInput : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NonInvertibleA : Error { using Error::Error; };
struct NonInvertibleDerivative : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace polycat
