// Terminating basic hypergeometric series with ±q^e parameters, the Watson
// very-well-poised 8φ7 ↔ balanced 4φ3 transformation, and the specialized
// series rewrite used by the half-range sums.
#ifndef QCV_HYPERGEOMETRIC_HPP
#define QCV_HYPERGEOMETRIC_HPP

#include <random>

#include "verifier.hpp"

namespace qcv {

// ±q^exponent
struct QMonomial {
    int sign = +1;
    long exponent = 0;

    QMonomial() = default;
    QMonomial(int s, long e) : sign(s), exponent(e) {}
    static QMonomial q_pow(long e) { return {+1, e}; }

    QMonomial operator*(const QMonomial& o) const { return {sign * o.sign, exponent + o.exponent}; }
    QMonomial operator/(const QMonomial& o) const { return {sign * o.sign, exponent - o.exponent}; }
    std::string to_string() const;
};

struct PhiSeriesSpec {
    std::vector<QMonomial> upper;
    std::vector<QMonomial> lower;
    unsigned long base = 1;     // series in q^base
    QMonomial argument;
};

// Exact value of a terminating series: Σ_k ∏(a_i; q^d)_k / ((q^d; q^d)_k ∏(b_j; q^d)_k) z^k.
// The sum stops at the first vanishing upper factor; a vanishing lower factor
// inside the summation range raises DegenerateParameters, and a spec without a
// terminating upper parameter (or one terminating past max_terms) raises
// NonTerminating.
RatFunc phi_eval(const PhiSeriesSpec& spec, unsigned long max_terms = 10000);

// number of terms the series contributes (index of first vanishing upper factor)
unsigned long phi_term_count(const PhiSeriesSpec& spec, unsigned long max_terms = 10000);

struct WatsonParams {
    QMonomial a;      // must be +q^{even}
    QMonomial b, c, d, e;
    unsigned long terms_n = 0;   // the q^{-n} truncation parameter
    unsigned long base = 1;
};

// Exact check of the transformation: the very-well-poised 8φ7 with argument
// a²q^{(n+2)base}/(bcde) against the prefactored balanced 4φ3.
Report watson_check(const WatsonParams& p);

// The specialization a = b = d = q², c = q, e = q^{4+(4m+2)n} in base q^4 with
// mn + (n-1)/2 + 1 terms: checks that the displayed 8φ7 equals the prefactored
// 4φ3 and that both equal the half-range partial sum of family T1.
Report watson_instance_check(unsigned long n, unsigned long m);

// deterministic generator for the randomized identity suite
WatsonParams random_watson_params(std::mt19937_64& rng);

} // namespace qcv

#endif
