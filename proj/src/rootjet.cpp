#include "rootjet.hpp"

#include <cmath>

namespace qcv {

namespace {
constexpr double kPi = 3.14159265358979323846;

unsigned long mod_index(long e, unsigned long n) {
    long r = e % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    return static_cast<unsigned long>(r);
}
} // namespace

CycloRootExact::CycloRootExact(unsigned long n)
    : n_(n), phi_(cyclotomic(n)), deg_(totient(n)), zeta_pow_cache_(n) {
    if (n < 2) throw Error(ErrorKind::Validation, "root index must be >= 2");
    // rows: q^{deg+i} mod Φ, covering both products of reduced elements
    // (degree <= 2 deg - 2) and the raw monomials q^r, r < n
    size_t row_count = std::max<size_t>(deg_ >= 1 ? deg_ - 1 : 0, n_ - deg_);
    row_count = std::max<size_t>(row_count, 1);
    red_rows_.reserve(row_count);
    std::vector<Rational> head(phi_.coeffs().begin(), phi_.coeffs().end() - 1);
    Poly row = -Poly(std::move(head));   // q^deg ≡ -(Φ - q^deg)
    red_rows_.push_back(row);
    while (red_rows_.size() < row_count) {
        row = row.shift_up(1);
        if (row.degree() == static_cast<long>(deg_)) {
            Rational lead = row.leading();
            std::vector<Rational> low(row.coeffs().begin(), row.coeffs().end() - 1);
            row = Poly(std::move(low)) + red_rows_[0].scale(lead);
        }
        red_rows_.push_back(row);
    }
}

Poly CycloRootExact::reduce(const Poly& p) const {
    if (p.degree() < static_cast<long>(deg_)) return p;
    std::vector<Rational> acc(p.coeffs().begin(),
                              p.coeffs().begin() + static_cast<long>(deg_));
    Poly out(std::move(acc));
    for (long i = static_cast<long>(deg_); i <= p.degree(); ++i) {
        const Rational& c = p.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        size_t row = static_cast<size_t>(i) - deg_;
        if (row >= red_rows_.size())
            throw Error(ErrorKind::Internal, "reduction row out of range");
        out += red_rows_[row].scale(c);
    }
    return out;
}

const Poly& CycloRootExact::zeta_pow(unsigned long r) const {
    if (!zeta_pow_cache_[r]) {
        zeta_pow_cache_[r] = reduce(Poly::monomial(static_cast<long>(r)));
    }
    return *zeta_pow_cache_[r];
}

CycloRootExact::Jet CycloRootExact::root_power(long e) const {
    Jet j;
    j.a = zeta_pow(mod_index(e, n_));
    j.b = zeta_pow(mod_index(e - 1, n_)).scale(Rational(e));
    return j;
}

int CycloRootExact::factor_valuation(int sign, long e) const {
    unsigned long r = mod_index(e, n_);
    if (sign == +1) return r == 0 ? 1 : 0;
    return (n_ % 2 == 0 && r == n_ / 2) ? 1 : 0;
}

CycloRootExact::Jet CycloRootExact::factor_unit(int sign, long e) const {
    // factor f(q) = 1 - sign*q^e
    Rational se(sign > 0 ? 1 : -1);
    if (factor_valuation(sign, e) == 0) {
        Jet j;
        j.a = Poly::one() - zeta_pow(mod_index(e, n_)).scale(se);
        j.b = zeta_pow(mod_index(e - 1, n_)).scale(-se * Rational(e));
        return j;
    }
    // f(ζ) = 0: unit = f'(ζ) + (f''(ζ)/2) ε
    Jet j;
    j.a = zeta_pow(mod_index(e - 1, n_)).scale(-se * Rational(e));
    j.b = zeta_pow(mod_index(e - 2, n_)).scale(-se * Rational(e) * Rational(e - 1, 2));
    return j;
}

Poly CycloRootExact::element_inverse(const Poly& a) const {
    Poly ar = reduce(a);
    if (ar.is_zero()) throw Error(ErrorKind::NotCoprime, "inverse of zero at root of unity");
    Poly::XgcdResult x = Poly::xgcd(ar, phi_);
    if (x.g.degree() != 0)
        throw Error(ErrorKind::Internal, "cyclotomic polynomial not squarefree?");
    return reduce(x.u);
}

CycloRootExact::Jet CycloRootExact::inverse(const Jet& j) const {
    Poly ia = element_inverse(j.a);
    Jet out;
    out.a = ia;
    out.b = reduce(reduce(ia * ia).scale(Rational(-1)) * j.b);
    return out;
}

Poly CycloRootExact::lift_residue(const Jet& j) const {
    // residue ρ = A + Φ·B with A(ζ) = j.a, ρ'(ζ) = j.b
    const Poly& A = j.a;
    Poly dA = reduce(A.derivative());
    Poly dPhi_inv = element_inverse(phi_.derivative());
    Poly B = reduce((j.b - dA) * dPhi_inv);
    return A + phi_ * B;
}

// ---------------------------------------------------------------------------

CycloRootFloat::CycloRootFloat(unsigned long n) : n_(n) {
    if (n < 2) throw Error(ErrorKind::Validation, "root index must be >= 2");
}

std::complex<double> CycloRootFloat::zeta_pow(long e) const {
    double ang = 2.0 * kPi * static_cast<double>(mod_index(e, n_)) / static_cast<double>(n_);
    return {std::cos(ang), std::sin(ang)};
}

CycloRootFloat::Jet CycloRootFloat::root_power(long e) const {
    Jet j;
    j.a = zeta_pow(e);
    j.b = static_cast<double>(e) * zeta_pow(e - 1);
    j.mag_a = std::abs(j.a);
    j.mag_b = std::abs(j.b);
    return j;
}

int CycloRootFloat::factor_valuation(int sign, long e) const {
    unsigned long r = mod_index(e, n_);
    if (sign == +1) return r == 0 ? 1 : 0;
    return (n_ % 2 == 0 && r == n_ / 2) ? 1 : 0;
}

CycloRootFloat::Jet CycloRootFloat::factor_unit(int sign, long e) const {
    double se = sign > 0 ? 1.0 : -1.0;
    Jet j;
    if (factor_valuation(sign, e) == 0) {
        j.a = 1.0 - se * zeta_pow(e);
        j.b = -se * static_cast<double>(e) * zeta_pow(e - 1);
    } else {
        j.a = -se * static_cast<double>(e) * zeta_pow(e - 1);
        j.b = -se * (static_cast<double>(e) * static_cast<double>(e - 1) / 2.0) * zeta_pow(e - 2);
    }
    j.mag_a = std::abs(j.a);
    j.mag_b = std::abs(j.b);
    return j;
}

namespace {
void rescale_jets(std::initializer_list<CycloRootFloat::Jet*> jets) {
    double m = 0.0;
    for (const auto* j : jets) {
        m = std::max({m, std::abs(j->a), std::abs(j->b), j->mag_a, j->mag_b});
    }
    if (m > 1e120 || (m > 0.0 && m < 1e-120)) {
        double inv = 1.0 / m;
        for (auto* j : jets) {
            j->a *= inv;
            j->b *= inv;
            j->mag_a *= inv;
            j->mag_b *= inv;
        }
    }
}
} // namespace

void CycloRootFloat::normalize(Jet& q, Jet& n, Jet& b) const {
    rescale_jets({&q, &n, &b});
}

void CycloRootFloat::normalize_pair(Jet& x, Jet& y) const {
    rescale_jets({&x, &y});
}

} // namespace qcv
