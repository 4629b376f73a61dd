#ifndef HYPERCIRCLE_ERRORS_HPP
#define HYPERCIRCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hc {

// A mathematical precondition does not hold (zero divisor, singular unit,
// inexact division, unreachable point, ...).
class MathError : public std::domain_error {
   public:
    explicit MathError(const std::string& what) : std::domain_error(what) {}
};

// Operands live in different number fields.
class FieldMismatch : public MathError {
   public:
    FieldMismatch() : MathError("operands belong to different number fields") {}
};

// A desk-scale certification strategy could not decide.
class Inconclusive : public std::runtime_error {
   public:
    explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input.
class SchemaError : public std::runtime_error {
   public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hc

#endif  // HYPERCIRCLE_ERRORS_HPP
