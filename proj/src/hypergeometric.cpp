#include "hypergeometric.hpp"

#include <chrono>
#include <sstream>

namespace qcv {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// least j >= 0 with 1 - s*q^{e+dj} == 0, i.e. s == +1 and e + dj == 0
long zero_factor_index(const QMonomial& p, unsigned long base) {
    if (p.sign != +1) return -1;
    if (p.exponent > 0) return -1;
    long d = static_cast<long>(base);
    if ((-p.exponent) % d != 0) return -1;
    return -p.exponent / d;
}

void mul_factor(CycloFraction& f, const QMonomial& p, long offset, bool numerator) {
    long e = p.exponent + offset;
    if (p.sign == +1) {
        if (numerator) f.mul_num_one_minus_q_pow(e);
        else f.mul_den_one_minus_q_pow(e);
    } else {
        if (numerator) f.mul_num_one_plus_q_pow(e);
        else f.mul_den_one_plus_q_pow(e);
    }
}

// (p; q^base)_count into the numerator or denominator of f
void mul_pochhammer(CycloFraction& f, const QMonomial& p, unsigned long base,
                    unsigned long count, bool numerator) {
    for (unsigned long j = 0; j < count; ++j) {
        mul_factor(f, p, static_cast<long>(base * j), numerator);
    }
}

} // namespace

std::string QMonomial::to_string() const {
    std::ostringstream out;
    if (sign < 0) out << "-";
    if (exponent == 0) out << "1";
    else if (exponent == 1) out << "q";
    else out << "q^" << exponent;
    return out.str();
}

unsigned long phi_term_count(const PhiSeriesSpec& spec, unsigned long max_terms) {
    if (spec.base == 0) throw Error(ErrorKind::Validation, "series base must be positive");
    long stop = -1;
    for (const auto& p : spec.upper) {
        long j = zero_factor_index(p, spec.base);
        if (j >= 0 && (stop < 0 || j < stop)) stop = j;
    }
    if (stop < 0)
        throw Error(ErrorKind::NonTerminating, "no terminating upper parameter");
    unsigned long terms = static_cast<unsigned long>(stop) + 1;
    if (terms > max_terms)
        throw Error(ErrorKind::NonTerminating,
                    "series needs " + std::to_string(terms) + " terms, bound is " +
                        std::to_string(max_terms));
    return terms;
}

RatFunc phi_eval(const PhiSeriesSpec& spec, unsigned long max_terms) {
    unsigned long terms = phi_term_count(spec, max_terms);
    // a lower factor vanishing strictly inside the summation range is a pole
    for (const auto& p : spec.lower) {
        long j = zero_factor_index(p, spec.base);
        if (j >= 0 && j + 2 <= static_cast<long>(terms))
            throw Error(ErrorKind::DegenerateParameters,
                        "lower parameter " + p.to_string() + " vanishes at factor index " +
                            std::to_string(j));
    }
    CycloFraction sum = CycloFraction::one();   // k = 0 term
    for (unsigned long k = 1; k < terms; ++k) {
        CycloFraction term = CycloFraction::one();
        for (const auto& p : spec.upper) mul_pochhammer(term, p, spec.base, k, true);
        for (const auto& p : spec.lower) mul_pochhammer(term, p, spec.base, k, false);
        mul_pochhammer(term, QMonomial::q_pow(static_cast<long>(spec.base)), spec.base, k, false);
        if (spec.argument.sign < 0 && k % 2 == 1) term.negate();
        term.mul_num_q_pow(spec.argument.exponent * static_cast<long>(k));
        term.reduce();
        sum.add(term);
    }
    return sum.to_ratfunc();
}

Report watson_check(const WatsonParams& p) {
    Report rep;
    rep.label = "watson";
    auto start = Clock::now();
    try {
        if (p.base == 0) throw Error(ErrorKind::Validation, "base must be positive");
        if (p.a.sign != +1 || p.a.exponent % 2 != 0)
            throw Error(ErrorKind::Validation, "parameter a must be an even power of q");
        QMonomial half_a = QMonomial::q_pow(p.a.exponent / 2);
        QMonomial qd = QMonomial::q_pow(static_cast<long>(p.base));
        long n = static_cast<long>(p.terms_n);
        long D = static_cast<long>(p.base);
        QMonomial terminator = QMonomial::q_pow(-D * n);

        PhiSeriesSpec lhs_spec;
        lhs_spec.base = p.base;
        lhs_spec.upper = {p.a,
                          qd * half_a,
                          QMonomial(-1, D + half_a.exponent),
                          p.b,
                          p.c,
                          p.d,
                          p.e,
                          terminator};
        lhs_spec.lower = {half_a,
                          QMonomial(-1, half_a.exponent),
                          p.a * qd / p.b,
                          p.a * qd / p.c,
                          p.a * qd / p.d,
                          p.a * qd / p.e,
                          p.a * QMonomial::q_pow(D * (n + 1))};
        lhs_spec.argument =
            p.a * p.a * QMonomial::q_pow(D * (n + 2)) / (p.b * p.c * p.d * p.e);

        // If some other upper parameter truncates before the designated
        // terminator, vanishing numerator and denominator factors can collide
        // (e.g. a = 1) and the terminating-series convention no longer encodes
        // the identity; classify as degenerate.
        if (phi_term_count(lhs_spec) != p.terms_n + 1)
            throw Error(ErrorKind::DegenerateParameters,
                        "series truncates before the designated terminating parameter");

        PhiSeriesSpec rhs_spec;
        rhs_spec.base = p.base;
        rhs_spec.upper = {p.a * qd / (p.b * p.c), p.d, p.e, terminator};
        rhs_spec.lower = {p.a * qd / p.b, p.a * qd / p.c,
                          p.d * p.e * QMonomial::q_pow(-D * n) / p.a};
        rhs_spec.argument = qd;

        RatFunc lhs = phi_eval(lhs_spec);

        CycloFraction prefactor = CycloFraction::one();
        mul_pochhammer(prefactor, p.a * qd, p.base, p.terms_n, true);
        mul_pochhammer(prefactor, p.a * qd / (p.d * p.e), p.base, p.terms_n, true);
        mul_pochhammer(prefactor, p.a * qd / p.d, p.base, p.terms_n, false);
        mul_pochhammer(prefactor, p.a * qd / p.e, p.base, p.terms_n, false);
        RatFunc rhs = prefactor.to_ratfunc() * phi_eval(rhs_spec);

        // compare without trusting canonical forms
        bool equal = lhs.num() * rhs.den() == rhs.num() * lhs.den();
        rep.status = equal ? Status::Holds : Status::Fails;
        rep.residue = equal ? Poly::zero() : Poly::one();
        std::ostringstream notes;
        notes << "a=" << p.a.to_string() << " b=" << p.b.to_string() << " c=" << p.c.to_string()
              << " d=" << p.d.to_string() << " e=" << p.e.to_string() << " n=" << p.terms_n
              << " base=" << p.base;
        rep.notes = notes.str();
    } catch (const Error& err) {
        rep.status = Status::Error;
        rep.notes = std::string(error_kind_name(err.kind())) + ": " + err.what();
    }
    rep.timing_ms = elapsed_ms(start);
    return rep;
}

Report watson_instance_check(unsigned long n, unsigned long m) {
    Report rep;
    rep.label = "watson-instance";
    auto start = Clock::now();
    try {
        if (n % 4 != 3) throw Error(ErrorKind::Validation, "n must be 3 mod 4");
        long nn = static_cast<long>(n), mm = static_cast<long>(m);
        long L = mm * nn + (nn - 1) / 2;
        long big = (4 * mm + 2) * nn;   // so that 2 - big = -4L

        PhiSeriesSpec series;
        series.base = 4;
        series.upper = {QMonomial::q_pow(2), QMonomial::q_pow(5), QMonomial(-1, 5),
                        QMonomial::q_pow(2), QMonomial::q_pow(1), QMonomial::q_pow(2),
                        QMonomial::q_pow(4 + big), QMonomial::q_pow(2 - big)};
        series.lower = {QMonomial::q_pow(1), QMonomial(-1, 1), QMonomial::q_pow(4),
                        QMonomial::q_pow(5), QMonomial::q_pow(4), QMonomial::q_pow(2 - big),
                        QMonomial::q_pow(4 + big)};
        series.argument = QMonomial::q_pow(1);
        RatFunc well_poised = phi_eval(series);

        PhiSeriesSpec balanced;
        balanced.base = 4;
        balanced.upper = {QMonomial::q_pow(3), QMonomial::q_pow(2), QMonomial::q_pow(4 + big),
                          QMonomial::q_pow(2 - big)};
        balanced.lower = {QMonomial::q_pow(4), QMonomial::q_pow(5), QMonomial::q_pow(6)};
        balanced.argument = QMonomial::q_pow(4);

        CycloFraction prefactor = CycloFraction::one();
        mul_pochhammer(prefactor, QMonomial::q_pow(6), 4, static_cast<unsigned long>(L), true);
        mul_pochhammer(prefactor, QMonomial::q_pow(-big), 4, static_cast<unsigned long>(L), true);
        mul_pochhammer(prefactor, QMonomial::q_pow(4), 4, static_cast<unsigned long>(L), false);
        mul_pochhammer(prefactor, QMonomial::q_pow(2 - big), 4, static_cast<unsigned long>(L),
                       false);
        RatFunc transformed = prefactor.to_ratfunc() * phi_eval(balanced);

        RatFunc half_range = partial_sum(Family::T1, static_cast<unsigned long>(L) + 1);

        bool eq1 = well_poised.num() * transformed.den() == transformed.num() * well_poised.den();
        bool eq2 = well_poised.num() * half_range.den() == half_range.num() * well_poised.den();
        rep.status = (eq1 && eq2) ? Status::Holds : Status::Fails;
        rep.residue = (eq1 && eq2) ? Poly::zero() : Poly::one();
        std::ostringstream notes;
        notes << "n=" << n << " m=" << m << "; series==transformed: " << (eq1 ? "yes" : "no")
              << "; series==half-range sum: " << (eq2 ? "yes" : "no");
        rep.notes = notes.str();
    } catch (const Error& err) {
        rep.status = Status::Error;
        rep.notes = std::string(error_kind_name(err.kind())) + ": " + err.what();
    }
    rep.timing_ms = elapsed_ms(start);
    return rep;
}

WatsonParams random_watson_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> exp_dist(-3, 6);
    std::uniform_int_distribution<long> half_dist(-1, 3);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::uniform_int_distribution<unsigned long> n_dist(0, 3);
    std::uniform_int_distribution<unsigned long> base_dist(1, 4);
    WatsonParams p;
    p.a = QMonomial::q_pow(2 * half_dist(rng));
    auto rand_param = [&]() { return QMonomial(sign_dist(rng) ? +1 : -1, exp_dist(rng)); };
    p.b = rand_param();
    p.c = rand_param();
    p.d = rand_param();
    p.e = rand_param();
    p.terms_n = n_dist(rng);
    p.base = base_dist(rng);
    return p;
}

} // namespace qcv
