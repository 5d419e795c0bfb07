// Dense univariate polynomials over Rational in the variable q.
// Exact arithmetic throughout: Euclidean division, extended gcd, inverses in
// quotient rings Q[q]/(m), and evaluation (exact rational and complex double).
#ifndef QCV_POLY_HPP
#define QCV_POLY_HPP

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qcv {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(1); }
    static Poly q() { return monomial(1); }
    static Poly constant(const Rational& c);
    static Poly monomial(long exp, const Rational& c = Rational(1));

    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    size_t size() const { return c_.size(); }

    const Rational& coeff(size_t i) const {
        static const Rational kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scale(const Rational& c) const;
    Poly shift_up(long k) const;    // multiply by q^k, k >= 0
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // a = quot*b + rem with deg rem < deg b
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    // exact division; throws Internal if the remainder is nonzero
    static Poly div_exact(const Poly& a, const Poly& b);
    static bool divides(const Poly& d, const Poly& a);

    struct XgcdResult;
    static XgcdResult xgcd(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);

    // b with a*b == 1 (mod m), deg b < deg m; throws NotCoprime
    static Poly quotient_inverse(const Poly& a, const Poly& m);

    Poly monic() const;
    Poly derivative() const;

    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // number of trailing zero coefficients (0 for the zero polynomial)
    long trailing_zeros() const;

    Rational coeff_one_norm() const;

    // canonical rendering: "c0 + c1*q + c2*q^2 + ..." with rationals as a/b
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static Poly mul_schoolbook(const Poly& a, const Poly& b);
    static Poly mul_karatsuba(const Poly& a, const Poly& b);

    std::vector<Rational> c_;   // c_[i] is the coefficient of q^i
};

struct Poly::XgcdResult {
    Poly g;   // monic gcd
    Poly u;
    Poly v;   // u*a + v*b = g
};

// q^shift * body, with body having a nonzero constant term unless zero.
// Carries the negative q-powers from q-shifted factorials with negative
// arguments; normalized on construction.
struct LaurentPoly {
    Poly body;
    long shift = 0;

    LaurentPoly() = default;
    LaurentPoly(Poly b, long s);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Poly::one(), 0); }
    // 1 - q^e for any integer e (e == 0 gives the zero value)
    static LaurentPoly one_minus_q_pow(long e);

    bool is_zero() const { return body.is_zero(); }
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return shift == o.shift && body == o.body; }
};

} // namespace qcv

#endif
