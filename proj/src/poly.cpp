#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace qcv {

namespace {
// Schoolbook beats Karatsuba on small or very unbalanced operands.
constexpr size_t kKaratsubaThreshold = 64;
}

Poly Poly::constant(const Rational& c) {
    if (c.is_zero()) return Poly();
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(long exp, const Rational& c) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<size_t>(exp) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::Internal, "leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly Poly::mul_schoolbook(const Poly& a, const Poly& b) {
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;   // products here are often sparse
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::mul_karatsuba(const Poly& a, const Poly& b) {
    size_t half = (std::max(a.c_.size(), b.c_.size()) + 1) / 2;
    auto split = [half](const Poly& p) {
        std::vector<Rational> lo(p.c_.begin(),
                                 p.c_.begin() + std::min(half, p.c_.size()));
        std::vector<Rational> hi;
        if (p.c_.size() > half) hi.assign(p.c_.begin() + half, p.c_.end());
        return std::make_pair(Poly(std::move(lo)), Poly(std::move(hi)));
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    Poly z0 = a0 * b0;
    Poly z2 = a1 * b1;
    Poly z1 = (a0 + a1) * (b0 + b1) - z0 - z2;
    Poly r = z0;
    r += z1.shift_up(static_cast<long>(half));
    r += z2.shift_up(static_cast<long>(2 * half));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    size_t lo = std::min(c_.size(), o.c_.size());
    if (lo < kKaratsubaThreshold) return mul_schoolbook(*this, o);
    return mul_karatsuba(*this, o);
}

Poly Poly::scale(const Rational& c) const {
    if (c.is_zero()) return Poly();
    std::vector<Rational> r(c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return Poly(std::move(r));
}

Poly Poly::shift_up(long k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> r(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZeroPoly, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.c_;
    long db = b.degree();
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    Rational lead_inv = b.leading().inverse();
    for (long i = a.degree(); i >= db; --i) {
        Rational& ci = rem[static_cast<size_t>(i)];
        if (ci.is_zero()) continue;
        Rational t = ci * lead_inv;
        quot[static_cast<size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(i - db + j)] -= t * b.c_[static_cast<size_t>(j)];
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw Error(ErrorKind::Internal, "div_exact: nonzero remainder");
    return q;
}

bool Poly::divides(const Poly& d, const Poly& a) {
    if (a.is_zero()) return true;
    if (d.is_zero() || a.degree() < d.degree()) return false;
    return divrem(a, d).second.is_zero();
}

// Euclid with a monic normalization each step; keeps coefficient growth
// proportional to the true remainder sizes.
Poly::XgcdResult Poly::xgcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorKind::Internal, "xgcd(0, 0)");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        Rational lc = r1.leading();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            r1 = r1.scale(inv);
            s1 = s1.scale(inv);
            t1 = t1.scale(inv);
        }
        auto [q, r2] = divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    Rational lc = r0.leading();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        r0 = r0.scale(inv);
        s0 = s0.scale(inv);
        t0 = t0.scale(inv);
    }
    return {r0, s0, t0};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        r1 = r1.monic();
        auto [q, r2] = divrem(r0, r1);
        (void)q;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

Poly Poly::quotient_inverse(const Poly& a, const Poly& m) {
    if (m.degree() < 1)
        throw Error(ErrorKind::Validation, "quotient_inverse: modulus must have degree >= 1");
    Poly ar = divrem(a, m).second;
    if (ar.is_zero())
        throw Error(ErrorKind::NotCoprime, "quotient_inverse: gcd = " + m.monic().to_string());
    XgcdResult x = xgcd(ar, m);
    if (x.g.degree() != 0)
        throw Error(ErrorKind::NotCoprime, "quotient_inverse: gcd = " + x.g.to_string());
    // g is the monic constant 1, so u*a == 1 (mod m) already
    return divrem(x.u, m).second;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (leading().is_one()) return *this;
    return scale(leading().inverse());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + std::complex<double>(c_[i].to_double(), 0.0);
    }
    return acc;
}

long Poly::trailing_zeros() const {
    long t = 0;
    while (t < static_cast<long>(c_.size()) && c_[static_cast<size_t>(t)].is_zero()) ++t;
    return is_zero() ? 0 : t;
}

Rational Poly::coeff_one_norm() const {
    Rational s(0);
    for (const auto& c : c_) s += c.abs();
    return s;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << a.to_string();
        } else {
            if (!a.is_one()) out << a.to_string() << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

LaurentPoly::LaurentPoly(Poly b, long s) : body(std::move(b)), shift(s) {
    if (body.is_zero()) {
        shift = 0;
        return;
    }
    long t = body.trailing_zeros();
    if (t > 0) {
        std::vector<Rational> v(body.coeffs().begin() + t, body.coeffs().end());
        body = Poly(std::move(v));
        shift += t;
    }
}

LaurentPoly LaurentPoly::one_minus_q_pow(long e) {
    if (e == 0) return LaurentPoly::zero();
    if (e > 0) {
        // 1 - q^e
        std::vector<Rational> v(static_cast<size_t>(e) + 1, Rational(0));
        v[0] = Rational(1);
        v.back() = Rational(-1);
        return LaurentPoly(Poly(std::move(v)), 0);
    }
    // 1 - q^{-|e|} = q^{-|e|} * (q^{|e|} - 1)
    long a = -e;
    std::vector<Rational> v(static_cast<size_t>(a) + 1, Rational(0));
    v[0] = Rational(-1);
    v.back() = Rational(1);
    return LaurentPoly(Poly(std::move(v)), e);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly::zero();
    return LaurentPoly(body * o.body, shift + o.shift);
}

} // namespace qcv
