#include "ratfunc.hpp"

#include <algorithm>

namespace qcv {

RatFunc::RatFunc(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw Error(ErrorKind::DivisionByZeroPoly, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

RatFunc RatFunc::from_reduced(Poly numerator, Poly denominator) {
    RatFunc f;
    f.num_ = std::move(numerator);
    f.den_ = std::move(denominator);
    if (f.den_.is_zero())
        throw Error(ErrorKind::DivisionByZeroPoly, "rational function with zero denominator");
    if (f.num_.is_zero()) f.den_ = Poly::one();
    return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero())
        throw Error(ErrorKind::DivisionByZeroPoly, "rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return from_reduced(-num_, den_); }

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "rational function pole");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
    if (is_poly()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

void CycloFraction::mul_num_q_pow(long e) {
    if (e >= 0) {
        num_ = num_.shift_up(e);
    } else {
        den_qpow_ += -e;
    }
}

void CycloFraction::mul_num_one_minus_q_pow(long e, unsigned long mult) {
    if (mult == 0) return;
    if (e == 0) {
        num_ = Poly::zero();
        return;
    }
    LaurentPoly f = LaurentPoly::one_minus_q_pow(e);
    for (unsigned long i = 0; i < mult; ++i) {
        num_ *= f.body;
        mul_num_q_pow(f.shift);
    }
}

void CycloFraction::mul_num_one_plus_q_pow(long e, unsigned long mult) {
    if (mult == 0) return;
    if (e == 0) {
        for (unsigned long i = 0; i < mult; ++i) num_ = num_.scale(Rational(2));
        return;
    }
    long a = e < 0 ? -e : e;
    Poly f = Poly::monomial(a) + Poly::one();   // q^|e| + 1
    for (unsigned long i = 0; i < mult; ++i) {
        num_ *= f;
        if (e < 0) den_qpow_ += a;
    }
}

void CycloFraction::mul_den_phi(unsigned long d, unsigned long mult) {
    den_phi_[d] += mult;
}

void CycloFraction::mul_den_one_minus_q_pow(long e, unsigned long mult) {
    if (mult == 0) return;
    if (e == 0)
        throw Error(ErrorKind::DivisionByZeroPoly, "division by 1 - q^0");
    // e > 0: 1 - q^e = -(q^e - 1) = -∏_{d|e} Φ_d
    // e < 0: 1 - q^e = q^e ∏_{d | |e|} Φ_d
    for (unsigned long d : cyclo_indices_of_one_minus_q_pow(e)) mul_den_phi(d, mult);
    if (e > 0) {
        if (mult % 2 == 1) num_ = -num_;
    } else {
        mul_num_q_pow(static_cast<long>(mult) * (-e));
    }
}

void CycloFraction::mul_den_one_plus_q_pow(long e, unsigned long mult) {
    if (mult == 0) return;
    if (e == 0) {
        // dividing by 2
        Rational half(1, 2);
        for (unsigned long i = 0; i < mult; ++i) num_ = num_.scale(half);
        return;
    }
    for (unsigned long d : cyclo_indices_of_one_plus_q_pow(e)) mul_den_phi(d, mult);
    if (e < 0) mul_num_q_pow(static_cast<long>(mult) * (-e));
}

Poly CycloFraction::den_expanded() const {
    Poly d = Poly::monomial(den_qpow_);
    for (const auto& [idx, mult] : den_phi_) {
        Poly phi = cyclotomic(idx);
        for (unsigned long i = 0; i < mult; ++i) d *= phi;
    }
    return d;
}

void CycloFraction::add(const CycloFraction& o) {
    if (o.num_.is_zero()) { reduce_zero_check(); return; }

    // common denominator: per-index max multiplicity and max q-power
    Poly scaled_a = num_;
    Poly scaled_b = o.num_;
    std::map<unsigned long, unsigned long> common = den_phi_;
    for (const auto& [idx, mult] : o.den_phi_) {
        auto it = common.find(idx);
        if (it == common.end() || it->second < mult) common[idx] = mult;
    }
    Poly lift_a = Poly::one(), lift_b = Poly::one();
    for (const auto& [idx, mult] : common) {
        unsigned long ma = 0, mb = 0;
        if (auto it = den_phi_.find(idx); it != den_phi_.end()) ma = it->second;
        if (auto it = o.den_phi_.find(idx); it != o.den_phi_.end()) mb = it->second;
        if (ma < mult) {
            Poly phi = cyclotomic(idx);
            for (unsigned long i = ma; i < mult; ++i) lift_a *= phi;
        }
        if (mb < mult) {
            Poly phi = cyclotomic(idx);
            for (unsigned long i = mb; i < mult; ++i) lift_b *= phi;
        }
    }
    long qcommon = std::max(den_qpow_, o.den_qpow_);
    scaled_a = scaled_a * lift_a;
    scaled_b = scaled_b * lift_b;
    if (den_qpow_ < qcommon) scaled_a = scaled_a.shift_up(qcommon - den_qpow_);
    if (o.den_qpow_ < qcommon) scaled_b = scaled_b.shift_up(qcommon - o.den_qpow_);

    num_ = scaled_a + scaled_b;
    den_phi_ = std::move(common);
    den_qpow_ = qcommon;
    reduce();
}

namespace {

// num mod (q^d - 1): fold coefficients into residue classes. Exact filter for
// cyclotomic divisibility: Φ_d | num  ⟺  Φ_d | fold.
Poly fold_mod_qd_minus_one(const Poly& num, unsigned long d) {
    std::vector<Rational> r(d, Rational(0));
    const auto& c = num.coeffs();
    for (size_t i = 0; i < c.size(); ++i) r[i % d] += c[i];
    return Poly(std::move(r));
}

bool phi_divides(const Poly& num, unsigned long d, const Poly& phi) {
    if (num.is_zero()) return true;
    if (num.degree() < phi.degree()) return false;
    Poly fold = fold_mod_qd_minus_one(num, d);
    if (fold.is_zero()) return true;
    if (fold.degree() < phi.degree()) return false;
    return Poly::divrem(fold, phi).second.is_zero();
}

} // namespace

void CycloFraction::reduce_zero_check() {
    if (num_.is_zero()) {
        den_phi_.clear();
        den_qpow_ = 0;
    }
}

void CycloFraction::reduce() {
    if (num_.is_zero()) {
        reduce_zero_check();
        return;
    }
    for (auto it = den_phi_.begin(); it != den_phi_.end();) {
        unsigned long d = it->first;
        Poly phi = cyclotomic(d);
        while (it->second > 0 && phi_divides(num_, d, phi)) {
            num_ = Poly::div_exact(num_, phi);
            --it->second;
        }
        it = it->second == 0 ? den_phi_.erase(it) : std::next(it);
    }
    long t = num_.trailing_zeros();
    if (t > 0 && den_qpow_ > 0) {
        long cancel = std::min(t, den_qpow_);
        std::vector<Rational> v(num_.coeffs().begin() + cancel, num_.coeffs().end());
        num_ = Poly(std::move(v));
        den_qpow_ -= cancel;
    }
}

RatFunc CycloFraction::to_ratfunc() const {
    CycloFraction c = *this;
    c.reduce();
    return RatFunc::from_reduced(c.num_, c.den_expanded());
}

} // namespace qcv
