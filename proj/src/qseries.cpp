#include "qseries.hpp"

namespace qcv {

LaurentPoly qpoch(long x, long d, unsigned long k) {
    LaurentPoly acc = LaurentPoly::one();
    for (unsigned long j = 0; j < k; ++j) {
        acc = acc * LaurentPoly::one_minus_q_pow(x + d * static_cast<long>(j));
        if (acc.is_zero()) break;
    }
    return acc;
}

Poly qint(unsigned long n, unsigned long b) {
    if (n == 0) throw Error(ErrorKind::Validation, "qint: n must be positive");
    if (b == 0) throw Error(ErrorKind::Validation, "qint: base must be positive");
    std::vector<Rational> v((n - 1) * b + 1, Rational(0));
    for (unsigned long i = 0; i < n; ++i) v[i * b] = Rational(1);
    return Poly(std::move(v));
}

const char* family_name(Family f) {
    return f == Family::T1 ? "T1" : "C2";
}

StepFactors family_step(Family f, unsigned long k) {
    if (k == 0) throw Error(ErrorKind::Internal, "family_step: k must be >= 1");
    long kk = static_cast<long>(k);
    StepFactors s;
    if (f == Family::T1) {
        s.num = {{-1, 4 * kk + 1, 1}, {+1, 4 * kk - 2, 3}};
        s.den = {{-1, 4 * kk - 3, 1}, {+1, 4 * kk, 3}};
        s.monomial = 1;
    } else {
        s.num = {{+1, 2 * kk - 1, 2}, {+1, 4 * kk - 2, 1}};
        s.den = {{+1, 2 * kk, 2}, {+1, 4 * kk, 1}};
        s.monomial = 2;
    }
    return s;
}

namespace {

CycloFraction summand_fraction(Family f, unsigned long k) {
    CycloFraction c = CycloFraction::one();
    long kk = static_cast<long>(k);
    if (f == Family::T1) {
        c.mul_num_one_plus_q_pow(4 * kk + 1);
        for (long j = 0; j < kk; ++j) c.mul_num_one_minus_q_pow(4 * j + 2, 3);
        c.mul_num_q_pow(kk);
        c.mul_den_one_plus_q_pow(1);
        for (long j = 1; j <= kk; ++j) c.mul_den_one_minus_q_pow(4 * j, 3);
    } else {
        for (long j = 0; j < kk; ++j) c.mul_num_one_minus_q_pow(2 * j + 1, 2);
        for (long j = 0; j < kk; ++j) c.mul_num_one_minus_q_pow(4 * j + 2, 1);
        c.mul_num_q_pow(2 * kk);
        for (long j = 1; j <= kk; ++j) c.mul_den_one_minus_q_pow(2 * j, 2);
        for (long j = 1; j <= kk; ++j) c.mul_den_one_minus_q_pow(4 * j, 1);
    }
    c.reduce();
    return c;
}

} // namespace

RatFunc summand(Family f, unsigned long k) {
    return summand_fraction(f, k).to_ratfunc();
}

RatFunc partial_sum(Family f, unsigned long N) {
    return partial_sum_fraction(f, N).to_ratfunc();
}

CycloFraction partial_sum_fraction(Family f, unsigned long N) {
    if (N == 0) return CycloFraction();
    CycloFraction acc = summand_fraction(f, 0);
    for (unsigned long k = 1; k < N; ++k) {
        acc.add(summand_fraction(f, k));
    }
    return acc;
}

CycloFraction FactorRatio::expand_fraction(bool include_shift) const {
    CycloFraction c = CycloFraction::one();
    for (long e : num_exponents) {
        if (e == 0) throw Error(ErrorKind::Validation, "FactorRatio: zero exponent");
        c.mul_num_one_minus_q_pow(e);
    }
    for (const auto& [n, base] : qint_factors) c.mul_num(qint(n, base));
    for (long e : den_exponents) {
        if (e == 0) throw Error(ErrorKind::Validation, "FactorRatio: zero exponent");
        c.mul_den_one_minus_q_pow(e);
    }
    if (include_shift) {
        if (monomial_shift >= 0) {
            c.mul_num_q_pow(monomial_shift);
        } else {
            c.mul_den_q_pow(-monomial_shift);
        }
    }
    return c;
}

RatFunc FactorRatio::expand() const {
    return expand_fraction(true).to_ratfunc();
}

RatFunc FactorRatio::expand_unshifted() const {
    return expand_fraction(false).to_ratfunc();
}

FactorRatio rhs_ratio(unsigned long M, unsigned long n_power) {
    FactorRatio r;
    r.num_exponents.reserve(M);
    r.den_exponents.reserve(M);
    for (unsigned long k = 1; k <= M; ++k) {
        r.num_exponents.push_back(4 * static_cast<long>(k) - 1);
        r.den_exponents.push_back(4 * static_cast<long>(k) + 1);
    }
    r.monomial_shift = -static_cast<long>(M);
    r.qint_factors = {{n_power, 2}};
    return r;
}

QLimit q_limit_one(const FactorRatio& r) {
    QLimit out;
    if (r.num_exponents.size() != r.den_exponents.size()) {
        out.kind = r.num_exponents.size() > r.den_exponents.size() ? QLimit::Kind::Zero
                                                                   : QLimit::Kind::Infinite;
        return out;
    }
    Rational v(1);
    for (size_t i = 0; i < r.num_exponents.size(); ++i) {
        // lim (1-q^a)/(1-q^b) = a/b; pairing within the lists is immaterial
        v *= Rational(r.num_exponents[i], r.den_exponents[i]);
    }
    for (const auto& [n, base] : r.qint_factors) {
        (void)base;
        v *= Rational(static_cast<long>(n));
    }
    out.value = v;
    return out;
}

} // namespace qcv
