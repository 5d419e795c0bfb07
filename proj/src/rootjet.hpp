// First-order arithmetic at a primitive n-th root of unity.
//
// A congruence modulo Φ_n(q)^2 for rational functions whose reduced
// denominators are coprime to Φ_n is equivalent to the vanishing of the value
// and first derivative at a primitive n-th root ζ. Working in K[ε]/(ε²),
// K = Q[q]/(Φ_n), with q ↦ ζ + ε turns each factor 1 ∓ q^e into either a unit
// jet or ε times a unit jet (the factors are squarefree, so the local order is
// at most 1), and partial sums accumulate with integer-coefficient jets only:
// denominator factors are collected into a running unit product instead of
// being inverted. This keeps the large verifications exact without ever
// materializing the huge cleared-denominator polynomials.
//
// The same accumulation instantiated over complex doubles is the floating
// root-of-unity oracle.
#ifndef QCV_ROOTJET_HPP
#define QCV_ROOTJET_HPP

#include <complex>
#include <optional>
#include <vector>

#include "qseries.hpp"

namespace qcv {

// ---------------------------------------------------------------------------
// exact context: K[ε]/(ε²) with K = Q[q]/(Φ_n)

class CycloRootExact {
public:
    explicit CycloRootExact(unsigned long n);

    struct Jet {
        Poly a, b;   // a + b·ε
    };

    unsigned long index() const { return n_; }
    const Poly& phi() const { return phi_; }

    Jet zero() const { return {Poly::zero(), Poly::zero()}; }
    Jet one() const { return {Poly::one(), Poly::zero()}; }
    bool is_zero(const Jet& j) const { return j.a.is_zero() && j.b.is_zero(); }

    Jet add(const Jet& x, const Jet& y) const { return {x.a + y.a, x.b + y.b}; }
    Jet sub(const Jet& x, const Jet& y) const { return {x.a - y.a, x.b - y.b}; }
    Jet mul(const Jet& x, const Jet& y) const {
        return {reduce(x.a * y.a), reduce(x.a * y.b + x.b * y.a)};
    }

    // jet of q^e at q = ζ + ε (e may be negative)
    Jet root_power(long e) const;

    // local order of 1 - q^e (sign +1) or 1 + q^e (sign -1) at ζ: 0 or 1
    int factor_valuation(int sign, long e) const;
    // jet of the factor divided by ε^valuation; always a unit
    Jet factor_unit(int sign, long e) const;

    Jet eps_shift_one(const Jet& j) const { return {Poly::zero(), j.a}; }

    // no-ops; the floating context rescales here
    void normalize(Jet&, Jet&, Jet&) const {}
    void normalize_pair(Jet&, Jet&) const {}

    Poly reduce(const Poly& p) const;
    Poly element_inverse(const Poly& a) const;   // in K, via xgcd with Φ_n
    Jet inverse(const Jet& j) const;

    // the unique residue mod Φ_n² with the jet's value and derivative at ζ
    Poly lift_residue(const Jet& j) const;

private:
    const Poly& zeta_pow(unsigned long r) const;

    unsigned long n_;
    Poly phi_;
    unsigned long deg_;
    std::vector<Poly> red_rows_;               // q^{deg+i} mod Φ
    mutable std::vector<std::optional<Poly>> zeta_pow_cache_;
};

// ---------------------------------------------------------------------------
// floating context: complex dual numbers plus a running magnitude proxy

class CycloRootFloat {
public:
    explicit CycloRootFloat(unsigned long n);

    // The magnitude fields follow the same bilinear recursion as the values
    // and play the role of the coefficient 1-norm in the oracle tolerance.
    struct Jet {
        std::complex<double> a{0.0, 0.0}, b{0.0, 0.0};
        double mag_a = 0.0, mag_b = 0.0;
    };

    unsigned long index() const { return n_; }

    Jet zero() const { return {}; }
    Jet one() const { return {{1.0, 0.0}, {0.0, 0.0}, 1.0, 0.0}; }

    Jet add(const Jet& x, const Jet& y) const {
        return {x.a + y.a, x.b + y.b, x.mag_a + y.mag_a, x.mag_b + y.mag_b};
    }
    Jet sub(const Jet& x, const Jet& y) const {
        return {x.a - y.a, x.b - y.b, x.mag_a + y.mag_a, x.mag_b + y.mag_b};
    }
    Jet mul(const Jet& x, const Jet& y) const {
        return {x.a * y.a, x.a * y.b + x.b * y.a,
                x.mag_a * y.mag_a, x.mag_a * y.mag_b + x.mag_b * y.mag_a};
    }

    Jet root_power(long e) const;
    int factor_valuation(int sign, long e) const;
    Jet factor_unit(int sign, long e) const;

    Jet eps_shift_one(const Jet& j) const {
        return {{0.0, 0.0}, j.a, 0.0, j.mag_a};
    }

    // joint rescale; magnitudes otherwise overflow or underflow on long products
    void normalize(Jet& q, Jet& n, Jet& b) const;
    void normalize_pair(Jet& x, Jet& y) const;

private:
    std::complex<double> zeta_pow(long e) const;

    unsigned long n_;
};

// ---------------------------------------------------------------------------
// shared accumulation (templated over the two contexts)

template <class Ctx>
struct FamilySumJets {
    typename Ctx::Jet sum_num;    // partial sum = sum_num / den_units
    typename Ctx::Jet den_units;  // unit jet
};

template <class Ctx>
struct RatioJets {
    long valuation = 0;           // value = ε^valuation · num / den
    typename Ctx::Jet num;        // unit jet
    typename Ctx::Jet den;        // unit jet
};

template <class Ctx>
typename Ctx::Jet eps_shift(const Ctx& ctx, const typename Ctx::Jet& j, long v) {
    if (v == 0) return j;
    if (v == 1) return ctx.eps_shift_one(j);
    return ctx.zero();
}

// Σ_{k=0}^{N-1} summand(f, k) as a jet fraction. Terms are built from the
// k -> k+1 factor ratios; denominator factors join the unit product and their
// local orders are folded into the term's ε-valuation.
template <class Ctx>
FamilySumJets<Ctx> family_sum_jets(const Ctx& ctx, Family f, unsigned long N) {
    FamilySumJets<Ctx> out{ctx.zero(), ctx.one()};
    if (N == 0) return out;
    typename Ctx::Jet term_num = ctx.one();   // unit part of the current term
    long valuation = 0;
    out.sum_num = ctx.one();                  // term k = 0 is exactly 1
    for (unsigned long k = 1; k < N; ++k) {
        StepFactors s = family_step(f, k);
        for (const auto& fac : s.den) {
            valuation -= ctx.factor_valuation(fac.sign, fac.exponent) *
                         static_cast<long>(fac.mult);
            typename Ctx::Jet u = ctx.factor_unit(fac.sign, fac.exponent);
            for (unsigned long i = 0; i < fac.mult; ++i) {
                out.den_units = ctx.mul(out.den_units, u);
                out.sum_num = ctx.mul(out.sum_num, u);
            }
        }
        for (const auto& fac : s.num) {
            valuation += ctx.factor_valuation(fac.sign, fac.exponent) *
                         static_cast<long>(fac.mult);
            typename Ctx::Jet u = ctx.factor_unit(fac.sign, fac.exponent);
            for (unsigned long i = 0; i < fac.mult; ++i) term_num = ctx.mul(term_num, u);
        }
        if (s.monomial != 0) term_num = ctx.mul(term_num, ctx.root_power(s.monomial));
        if (valuation < 0)
            throw Error(ErrorKind::Internal, "summand has a pole at the root of unity");
        if (valuation < 2) out.sum_num = ctx.add(out.sum_num, eps_shift(ctx, term_num, valuation));
        ctx.normalize(out.sum_num, term_num, out.den_units);
    }
    return out;
}

// jet data of a FactorRatio, monomial shift included (fine at a root of unity)
template <class Ctx>
RatioJets<Ctx> factor_ratio_jets(const Ctx& ctx, const FactorRatio& r) {
    RatioJets<Ctx> out{0, ctx.one(), ctx.one()};
    auto absorb = [&ctx, &out](long e, bool into_num) {
        long v = ctx.factor_valuation(+1, e);
        typename Ctx::Jet u = ctx.factor_unit(+1, e);
        if (into_num) {
            out.valuation += v;
            out.num = ctx.mul(out.num, u);
        } else {
            out.valuation -= v;
            out.den = ctx.mul(out.den, u);
        }
    };
    for (long e : r.num_exponents) {
        absorb(e, true);
        ctx.normalize_pair(out.num, out.den);
    }
    for (long e : r.den_exponents) {
        absorb(e, false);
        ctx.normalize_pair(out.num, out.den);
    }
    for (const auto& [n, base] : r.qint_factors) {
        absorb(static_cast<long>(n * base), true);
        absorb(static_cast<long>(base), false);
    }
    if (r.monomial_shift != 0) out.num = ctx.mul(out.num, ctx.root_power(r.monomial_shift));
    return out;
}

} // namespace qcv

#endif
