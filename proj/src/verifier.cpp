#include "verifier.hpp"

#include <chrono>
#include <sstream>

namespace qcv {

namespace {

// Direct-route term-count ceiling for path auto-selection. Above this the
// accumulated rational function gets expensive and the root-jet route is used.
constexpr unsigned long kDirectRouteMaxTerms = 40;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool all_multiplicities_two(const PhiModulus& m) {
    for (const auto& [idx, mult] : m.factors) {
        (void)idx;
        if (mult != 2) return false;
    }
    return true;
}

Poly crt_pair(const Poly& r1, const Poly& m1, const Poly& r2, const Poly& m2) {
    Poly::XgcdResult x = Poly::xgcd(m1, m2);
    if (x.g.degree() != 0)
        throw Error(ErrorKind::Internal, "crt_pair: moduli not coprime");
    Poly diff = Poly::divrem(r2 - r1, m2).second;
    Poly t = Poly::divrem(x.u * diff, m2).second;
    return Poly::divrem(r1 + m1 * t, m1 * m2).second;
}

// difference (q^{-shift}·lhs - rhs-without-shift) in factored form; the
// negative monomial shift is cleared onto the left side, valid because q is a
// unit modulo every Φ_n with n >= 2
CycloFraction direct_difference(const CongruenceTask& task) {
    CycloFraction lhs = partial_sum_fraction(task.family, task.terms);
    if (!task.rhs) return lhs;
    long shift = task.rhs->monomial_shift;
    if (shift < 0) {
        lhs.mul_num_q_pow(-shift);
    }
    CycloFraction rhs = task.rhs->expand_fraction(shift >= 0);
    rhs.negate();
    lhs.add(rhs);
    return lhs;
}

Poly verify_direct(const CongruenceTask& task) {
    return reduce_mod(direct_difference(task).to_ratfunc(), task.modulus);
}

struct JetOutcome {
    bool holds;
    CycloRootExact::Jet diff;        // numerator jet of the difference
    CycloRootExact::Jet den_units;   // unit denominator it sits over
};

JetOutcome jet_check_index(const CongruenceTask& task, unsigned long index) {
    CycloRootExact ctx(index);
    FamilySumJets<CycloRootExact> s = family_sum_jets(ctx, task.family, task.terms);
    JetOutcome out{false, s.sum_num, s.den_units};
    if (task.rhs) {
        RatioJets<CycloRootExact> r = factor_ratio_jets(ctx, *task.rhs);
        auto lhs = ctx.mul(s.sum_num, r.den);
        auto rhs = ctx.mul(eps_shift(ctx, r.num, r.valuation), s.den_units);
        out.diff = ctx.sub(lhs, rhs);
        out.den_units = ctx.mul(s.den_units, r.den);
    }
    out.holds = ctx.is_zero(out.diff);
    return out;
}

Poly verify_root_jets(const CongruenceTask& task) {
    Poly residue = Poly::zero();
    Poly combined_modulus = Poly::one();
    bool all_hold = true;
    for (const auto& [index, mult] : task.modulus.factors) {
        (void)mult;
        JetOutcome out = jet_check_index(task, index);
        Poly phi = cyclotomic(index);
        Poly phi_sq = phi * phi;
        Poly part = Poly::zero();
        if (!out.holds) {
            all_hold = false;
            // witness: divide the cleared difference by its unit denominator
            CycloRootExact ctx(index);
            auto value = ctx.mul(out.diff, ctx.inverse(out.den_units));
            part = ctx.lift_residue(value);
        }
        residue = combined_modulus.is_one() ? part
                                            : crt_pair(residue, combined_modulus, part, phi_sq);
        combined_modulus *= phi_sq;
    }
    if (all_hold) return Poly::zero();
    return residue;
}

} // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Error: return "error";
    }
    return "error";
}

Poly reduce_mod(const RatFunc& f, const PhiModulus& m) {
    const Poly& mm = m.expanded;
    if (mm.degree() < 1)
        throw Error(ErrorKind::Validation, "reduce_mod: modulus must have degree >= 1");
    if (f.is_zero()) return Poly::zero();
    Poly den_red = Poly::divrem(f.den(), mm).second;
    Poly inv = Poly::quotient_inverse(den_red, mm);
    Poly num_red = Poly::divrem(f.num(), mm).second;
    return Poly::divrem(num_red * inv, mm).second;
}

Report verify(const CongruenceTask& task) {
    Report rep;
    rep.label = task.label;
    auto start = Clock::now();
    try {
        if (task.terms < 1)
            throw Error(ErrorKind::Validation, "task needs at least one term");
        if (task.modulus.factors.empty())
            throw Error(ErrorKind::Validation, "empty modulus");
        VerifyPath path = task.path;
        if (path == VerifyPath::Auto) {
            path = (task.terms <= kDirectRouteMaxTerms || !all_multiplicities_two(task.modulus))
                       ? VerifyPath::Exact
                       : VerifyPath::RootJet;
        }
        if (path == VerifyPath::RootJet && !all_multiplicities_two(task.modulus))
            throw Error(ErrorKind::Validation,
                        "root-jet route requires all modulus multiplicities equal to 2");
        rep.residue = (path == VerifyPath::Exact) ? verify_direct(task) : verify_root_jets(task);
        rep.status = rep.residue.is_zero() ? Status::Holds : Status::Fails;
        rep.notes = (path == VerifyPath::Exact) ? "route: direct" : "route: root-jet";
    } catch (const Error& e) {
        rep.status = Status::Error;
        rep.notes = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    rep.timing_ms = elapsed_ms(start);
    return rep;
}

unsigned long fn_least_index(long x, unsigned long n) {
    if (n == 0 || n % 2 == 0)
        throw Error(ErrorKind::Validation, "fn_least_index: n must be odd and positive");
    for (unsigned long j = 0; j < n; ++j) {
        long e = x + 4 * static_cast<long>(j);
        long r = e % static_cast<long>(n);
        if (r < 0) r += static_cast<long>(n);
        if (r == 0) return j + 1;
    }
    throw Error(ErrorKind::Internal, "fn_least_index: no hit within one period");
}

Report proof_side_checks(unsigned long n, unsigned long m) {
    Report rep;
    std::ostringstream notes;
    auto start = Clock::now();
    try {
        if (n % 4 != 3)
            throw Error(ErrorKind::Validation, "proof_side_checks: n must be 3 mod 4");
        if (m < 1) throw Error(ErrorKind::Validation, "proof_side_checks: m must be positive");
        long nn = static_cast<long>(n);
        long L = static_cast<long>(m) * nn + (nn - 1) / 2;
        long a = count_phi_factors(6, 4, L, nn);
        long b = count_phi_factors(-(4 * static_cast<long>(m) + 2) * nn, 4, L, nn);
        long c = count_phi_factors(4, 4, L, nn);
        long d = count_phi_factors(2 - (4 * static_cast<long>(m) + 2) * nn, 4, L, nn);
        long multiplicity = a + b - c - d;
        notes << "prefactor multiplicity " << multiplicity
              << " (counts " << a << "+" << b << "-" << c << "-" << d << ")";
        bool ok = multiplicity == 2;

        // every reduced summand of the transformed series must keep its
        // denominator coprime to Φ_n: numerator multiplicity >= denominator
        // multiplicity for each k
        bool coprime_ok = true;
        long e_up = 4 + (4 * static_cast<long>(m) + 2) * nn;
        long e_dn = 2 - (4 * static_cast<long>(m) + 2) * nn;
        for (long k = 0; k <= L && coprime_ok; ++k) {
            long num_mult = count_phi_factors(3, 4, k, nn) + count_phi_factors(2, 4, k, nn) +
                            count_phi_factors(e_up, 4, k, nn) + count_phi_factors(e_dn, 4, k, nn);
            long den_mult = 2 * count_phi_factors(4, 4, k, nn) + count_phi_factors(5, 4, k, nn) +
                            count_phi_factors(6, 4, k, nn);
            if (den_mult > num_mult) {
                coprime_ok = false;
                notes << "; summand k=" << k << " keeps a cyclotomic factor in its denominator";
            }
        }
        ok = ok && coprime_ok;
        if (coprime_ok) notes << "; all reduced summand denominators coprime";
        rep.status = ok ? Status::Holds : Status::Fails;
        rep.residue = ok ? Poly::zero() : Poly::one();
    } catch (const Error& e) {
        rep.status = Status::Error;
        notes << error_kind_name(e.kind()) << ": " << e.what();
    }
    rep.notes = notes.str();
    rep.timing_ms = elapsed_ms(start);
    return rep;
}

std::vector<OracleCheck> root_oracle(const CongruenceTask& task) {
    std::vector<OracleCheck> out;
    for (const auto& [index, mult] : task.modulus.factors) {
        (void)mult;
        CycloRootFloat ctx(index);
        FamilySumJets<CycloRootFloat> s = family_sum_jets(ctx, task.family, task.terms);
        CycloRootFloat::Jet diff = s.sum_num;
        if (task.rhs) {
            RatioJets<CycloRootFloat> r = factor_ratio_jets(ctx, *task.rhs);
            auto lhs = ctx.mul(s.sum_num, r.den);
            auto rhs = ctx.mul(eps_shift(ctx, r.num, r.valuation), s.den_units);
            diff = ctx.sub(lhs, rhs);
        }
        OracleCheck c;
        c.index = index;
        c.value_mag = std::abs(diff.a);
        c.value_scale = std::max(diff.mag_a, 1e-300);
        c.deriv_mag = std::abs(diff.b);
        c.deriv_scale = std::max(diff.mag_b, 1e-300);
        c.pass = c.value_mag <= kOracleTolerance * c.value_scale &&
                 c.deriv_mag <= kOracleTolerance * c.deriv_scale;
        out.push_back(c);
    }
    return out;
}

std::vector<OracleCheck> root_oracle_poly(const CongruenceTask& task) {
    Poly num = direct_difference(task).to_ratfunc().num();
    Poly dnum = num.derivative();
    double scale = num.coeff_one_norm().to_double();
    double dscale = dnum.coeff_one_norm().to_double();
    std::vector<OracleCheck> out;
    for (const auto& [index, mult] : task.modulus.factors) {
        (void)mult;
        double ang = 2.0 * 3.14159265358979323846 / static_cast<double>(index);
        std::complex<double> zeta{std::cos(ang), std::sin(ang)};
        OracleCheck c;
        c.index = index;
        c.value_mag = std::abs(num.eval(zeta));
        c.value_scale = std::max(scale, 1e-300);
        c.deriv_mag = std::abs(dnum.eval(zeta));
        c.deriv_scale = std::max(dscale, 1e-300);
        c.pass = c.value_mag <= kOracleTolerance * c.value_scale &&
                 c.deriv_mag <= kOracleTolerance * c.deriv_scale;
        out.push_back(c);
    }
    return out;
}

} // namespace qcv
