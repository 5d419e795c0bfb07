// Error taxonomy shared across the library.
#ifndef QCV_ERRORS_HPP
#define QCV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcv {

enum class ErrorKind {
    ZeroInput,            // padic split of 0
    NotPIntegral,         // residue of a rational with negative p-adic valuation
    NotInvertible,        // integer with gcd(a, m) > 1
    DivisionByZeroPoly,   // polynomial division by the zero polynomial
    NotCoprime,           // quotient-ring inverse of a non-unit
    DuplicateIndex,       // repeated cyclotomic index in a modulus spec
    NonTerminating,       // basic hypergeometric series without a terminating parameter
    DegenerateParameters, // a lower Pochhammer factor vanishes inside the summation range
    Validation,           // task parameters violate a precondition
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotPIntegral: return "NotPIntegral";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::DuplicateIndex: return "DuplicateIndex";
        case ErrorKind::NonTerminating: return "NonTerminating";
        case ErrorKind::DegenerateParameters: return "DegenerateParameters";
        case ErrorKind::Validation: return "Validation";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace qcv

#endif
