// q-shifted factorials, q-integers, the two summand families under test, and
// structured right-hand sides with their q -> 1 limits.
#ifndef QCV_QSERIES_HPP
#define QCV_QSERIES_HPP

#include <vector>

#include "ratfunc.hpp"

namespace qcv {

// (q^x; q^d)_k = ∏_{j=0}^{k-1} (1 - q^{x+jd}); x may be negative or zero.
LaurentPoly qpoch(long x, long d, unsigned long k);

// [n]_{q^b} = 1 + q^b + ... + q^{(n-1)b}
Poly qint(unsigned long n, unsigned long b);

// The two summand families.
//   T1: (1 + q^{4k+1}) (q^2;q^4)_k^3 / ((1+q) (q^4;q^4)_k^3) * q^k
//   C2: (q;q^2)_k^2 (q^2;q^4)_k / ((q^2;q^2)_k^2 (q^4;q^4)_k) * q^{2k}
enum class Family { T1, C2 };

const char* family_name(Family f);

RatFunc summand(Family f, unsigned long k);

// Σ_{k=0}^{N-1} summand(f, k), fully reduced. Accumulates over the factored
// cyclotomic denominator with a reduction after every addition.
RatFunc partial_sum(Family f, unsigned long N);

// same accumulation kept in factored-denominator form
CycloFraction partial_sum_fraction(Family f, unsigned long N);

// One multiplicative step of a family: the factors of summand(f,k)/summand(f,k-1).
// sign +1 encodes a factor (1 - q^e), sign -1 a factor (1 + q^e).
struct StepFactor {
    int sign;
    long exponent;
    unsigned long mult;
};
struct StepFactors {
    std::vector<StepFactor> num, den;
    long monomial;   // q^monomial
};
StepFactors family_step(Family f, unsigned long k);

// [n_power]_{q^qint_base} * ∏ (1-q^e) over num / ∏ (1-q^e) over den * q^shift.
// All list exponents must be nonzero.
struct FactorRatio {
    std::vector<long> num_exponents;
    std::vector<long> den_exponents;
    long monomial_shift = 0;
    std::vector<std::pair<unsigned long, unsigned long>> qint_factors;  // (n, base)

    RatFunc expand() const;
    // expand() with the monomial shift forced to zero
    RatFunc expand_unshifted() const;
    CycloFraction expand_fraction(bool include_shift) const;
};

// numerator exponents {3, 7, ..., 4M-1}, denominator {5, 9, ..., 4M+1},
// q-integer factor [n_power]_{q^2}, monomial shift -M
FactorRatio rhs_ratio(unsigned long M, unsigned long n_power);

// Structural q -> 1 limit: each (1-q^a)/(1-q^b) pair contributes a/b and each
// q-integer factor contributes n. Unbalanced exponent lists give a tagged
// zero/infinity instead of a number.
struct QLimit {
    enum class Kind { Finite, Zero, Infinite };
    Kind kind = Kind::Finite;
    Rational value;   // meaningful only when finite
};
QLimit q_limit_one(const FactorRatio& r);

} // namespace qcv

#endif
