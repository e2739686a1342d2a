#pragma once

#include "simra/interval.hpp"
#include "simra/polynomial.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace simra {

inline constexpr long kDefaultMaxBits = 4096;

// A real number queryable to arbitrary certified precision.
//
//   Algebraic      -- integer minimal polynomial plus an isolating rational
//                     interval certified to contain exactly one (simple)
//                     root; refinement bisects on the polynomial sign.
//   DecimalLiteral -- a finite-precision measurement "d" with a cap in
//                     bits: enclosure(k) = d +- 2^-(k+1) for k <= cap,
//                     precision_exhausted beyond.  Never treated as an
//                     exact rational, so equality with it is never proven.
//
// Instances are immutable values with an internal synchronized refinement
// cache; sharing across threads is safe.
class RealOracle {
public:
    enum class Kind { Algebraic, DecimalLiteral };

    static RealOracle algebraic(IntPolynomial minimal_poly, mpq_class iso_lo, mpq_class iso_hi);
    static RealOracle decimal(const std::string& digits, long cap_bits = 0 /* 0: derive from digits */);
    // Literal syntax: `alg:<coeffs>:<lo>,<hi>` (dense integer coefficients,
    // constant first; rational endpoints allowed) or `dec:<digits>[:<capbits>]`.
    static RealOracle parse(const std::string& literal);

    Kind kind() const;
    // Enclosure of the value with width <= 2^-frac_bits.
    Interval enclosure(long frac_bits) const;
    // Enclosure of value^power with width <= 2^-frac_bits.
    Interval power_enclosure(unsigned power, long frac_bits) const;
    // Exact rational value when representable (degree-1 algebraic).
    std::optional<mpq_class> exact_rational() const;
    // Exact sign of P(value).  Algebraic oracles decide the zero case by
    // reducing P modulo the minimal polynomial; nonzero signs come from
    // refinement.  Throws precision_exhausted when undecidable (capped
    // literals, or a reducible "minimal" polynomial).
    int poly_sign_at_value(const IntPolynomial& p, long max_bits = kDefaultMaxBits) const;
    // Degree of the minimal polynomial; 0 for decimal literals.
    unsigned algebraic_degree() const;
    long cap_bits() const; // -1 when uncapped (algebraic)

    std::string describe() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

enum class CompareResult { Less, Greater, EqualProven, Unresolved };

struct CompareOutcome {
    CompareResult result;
    long achieved_bits;     // refinement depth reached when Unresolved
    Dyadic width_a, width_b; // enclosure widths at that depth
};

// A refinable real for comparison purposes: an enclosure producer plus an
// optional exact rational identity.
struct RefinableReal {
    std::function<Interval(long)> enclosure;
    std::optional<mpq_class> exact;

    static RefinableReal of_oracle(const RealOracle& o);
    static RefinableReal of_mpq(const mpq_class& q);
    static RefinableReal of_fn(std::function<Interval(long)> fn);
};

// Certified three-way comparison.  Less/Greater only on certified interval
// separation; EqualProven only when both operands are exact rationals with
// equal canonical value; Unresolved once max_bits is reached (or a producer
// exhausts its precision) with overlapping enclosures.
CompareOutcome certified_compare(const RefinableReal& a, const RefinableReal& b,
                                 long max_bits = kDefaultMaxBits);

} // namespace simra
