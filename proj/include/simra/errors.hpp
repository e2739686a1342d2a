#pragma once

#include <stdexcept>
#include <string>

namespace simra {

// Requested certification could not be reached within the precision budget.
// Distinct from contract_violation: the math may still be fine, we simply
// ran out of bits (or a decimal literal hit its cap).
class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what, long achieved_bits = -1)
        : std::runtime_error(what), achieved_bits(achieved_bits) {}
    long achieved_bits;
};

// A fact the underlying theory guarantees failed to verify.  Either the
// implementation is wrong or a theorem has a counterexample; both deserve
// a loud stop with a reproduction payload in the message.
class contract_violation : public std::logic_error {
public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

// Caller asked for an operation whose stated hypotheses do not hold.
class hypothesis_unmet : public std::invalid_argument {
public:
    explicit hypothesis_unmet(const std::string& what) : std::invalid_argument(what) {}
};

// A rounding decision (nearest integer) straddles a half-integer at max bits.
class rounding_unresolved : public precision_exhausted {
public:
    explicit rounding_unresolved(const std::string& what, long achieved_bits = -1)
        : precision_exhausted(what, achieved_bits) {}
};

// Two candidate L-values could not be separated at max bits.
class tie_unresolved : public precision_exhausted {
public:
    explicit tie_unresolved(const std::string& what, long achieved_bits = -1)
        : precision_exhausted(what, achieved_bits) {}
};

// Minimal-point enumeration was asked for n >= [Q(xi):Q] in strict mode.
class degenerate_xi : public std::invalid_argument {
public:
    explicit degenerate_xi(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace simra
