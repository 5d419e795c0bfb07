// Reduced fractions of polynomials, plus a factored-denominator working form.
//
// Every denominator that appears in the q-series world is a monomial times a
// product of cyclotomic polynomials, so fraction reduction can be done by
// exact trial division against the known factors instead of a generic gcd.
// CycloFraction is that working form; RatFunc is the reduced public value.
#ifndef QCV_RATFUNC_HPP
#define QCV_RATFUNC_HPP

#include <map>

#include "cyclotomic.hpp"
#include "poly.hpp"

namespace qcv {

class RatFunc {
public:
    RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
    explicit RatFunc(Poly numerator) : num_(std::move(numerator)), den_(Poly::one()) {}
    // reduces via polynomial gcd and normalizes the denominator to monic
    RatFunc(Poly numerator, Poly denominator);

    // trusted constructor: inputs already coprime, denominator monic
    static RatFunc from_reduced(Poly numerator, Poly denominator);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;

    std::string to_string() const;

private:
    Poly num_, den_;
};

// numerator / (q^den_qpow * ∏ Φ_d^{mult_d})
class CycloFraction {
public:
    CycloFraction() : num_(Poly::zero()) {}
    explicit CycloFraction(Poly numerator) : num_(std::move(numerator)) {}

    static CycloFraction one() { return CycloFraction(Poly::one()); }

    // multiply the numerator by (1 - q^e)^mult, folding negative e into the
    // monomial bookkeeping; e == 0 zeroes the fraction
    void mul_num_one_minus_q_pow(long e, unsigned long mult = 1);
    // multiply the numerator by (1 + q^e)^mult
    void mul_num_one_plus_q_pow(long e, unsigned long mult = 1);
    void mul_num_q_pow(long e);           // q^e, any sign
    void mul_num(const Poly& p) { num_ *= p; }

    // same four, acting on the denominator (recorded in factored form)
    void mul_den_one_minus_q_pow(long e, unsigned long mult = 1);
    void mul_den_one_plus_q_pow(long e, unsigned long mult = 1);
    void mul_den_q_pow(long e) { mul_num_q_pow(-e); }

    void add(const CycloFraction& o);
    void negate() { num_ = -num_; }

    // divide out every denominator factor that still divides the numerator
    void reduce();

    const Poly& num() const { return num_; }
    Poly den_expanded() const;

    // reduce() then package; the result satisfies the RatFunc invariants
    RatFunc to_ratfunc() const;

private:
    void mul_den_phi(unsigned long d, unsigned long mult);
    void reduce_zero_check();

    Poly num_;
    std::map<unsigned long, unsigned long> den_phi_;   // cyclotomic index -> multiplicity
    long den_qpow_ = 0;                                // may be lowered by negative-e folding
};

} // namespace qcv

#endif
