// Cyclotomic polynomials, product moduli ∏ Φ_{n_i}^{s_i}, and the arithmetic
// factor counting behind the telescoping-prefactor divisibility argument.
#ifndef QCV_CYCLOTOMIC_HPP
#define QCV_CYCLOTOMIC_HPP

#include <utility>
#include <vector>

#include "poly.hpp"

namespace qcv {

unsigned long totient(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// Monic minimal polynomial of the primitive n-th roots of unity. Computed by
// dividing q^n - 1 by the proper-divisor cyclotomics; results are memoized in
// a process-wide cache (idempotent fill, safe to race).
Poly cyclotomic(unsigned long n);

// Indices d with Φ_d dividing 1 - q^e (e != 0): the divisors of |e|.
std::vector<unsigned long> cyclo_indices_of_one_minus_q_pow(long e);
// Indices d with Φ_d dividing 1 + q^e: divisors of 2|e| that do not divide |e|.
std::vector<unsigned long> cyclo_indices_of_one_plus_q_pow(long e);

struct PhiModulus {
    std::vector<std::pair<unsigned long, unsigned long>> factors;  // (index, multiplicity)
    Poly expanded;

    long degree() const { return expanded.degree(); }
    std::string describe() const;
};

// indices must be distinct and >= 2
PhiModulus build_modulus(const std::vector<std::pair<unsigned long, unsigned long>>& spec);

// Number of k in [0, L) with n | (x + d*k): the count of factors of
// (q^x; q^d)_L that Φ_n divides.
long count_phi_factors(long x, long d, long L, long n);

} // namespace qcv

#endif
