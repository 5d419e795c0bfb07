// Exact arbitrary-precision rationals (GMP-backed) plus the p-adic helpers
// used by the congruence checks: valuation/unit splitting, residues mod p^s,
// and modular inverses. Values are immutable in spirit: every operation
// returns a new canonical value (lowest terms, positive denominator).
#ifndef QCV_RATIONAL_HPP
#define QCV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace qcv {

using Int = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}    // NOLINT
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const Int& num, const Int& den) : v_(num, den) { normalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    const Int numerator() const { return Int(v_.get_num()); }
    const Int denominator() const { return Int(v_.get_den()); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorKind::ZeroInput, "rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const {
        if (is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    double to_double() const { return v_.get_d(); }

    // "a" for integers, "a/b" otherwise.
    std::string to_string() const;

private:
    void normalize() {
        if (v_.get_den() == 0) throw Error(ErrorKind::ZeroInput, "zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

// valuation/unit decomposition: x = p^valuation * unit with v_p(unit) = 0
struct PadicSplit {
    long valuation = 0;
    Rational unit;
};

// Deterministic trial division; intended for desk-scale p (< 10^6 or so).
bool is_prime_trial(unsigned long p);

// p-adic valuation of a nonzero integer.
long int_valuation(const Int& n, unsigned long p);

PadicSplit padic_split(const Rational& x, unsigned long p);

// a * b^{-1} mod p^s for x = a/b with v_p(x) >= 0; result in [0, p^s).
Int padic_residue(const Rational& x, unsigned long p, unsigned s);

// Inverse of a mod m (m >= 2); throws NotInvertible when gcd(a, m) > 1.
Int mod_inverse(const Int& a, const Int& m);

Int int_pow(unsigned long base, unsigned long exp);

} // namespace qcv

#endif
