// Reduction of rational functions modulo ∏ Φ_{n_i}^{s_i} and verification of
// q-congruence tasks, with two exact routes:
//   * the direct route: accumulate the full rational function, reduce once;
//   * the root-jet route: first-order data at each root of unity (moduli with
//     all multiplicities 2), which scales to the largest sums.
// Plus the floating root-of-unity oracle mirroring both.
#ifndef QCV_VERIFIER_HPP
#define QCV_VERIFIER_HPP

#include <optional>
#include <string>

#include "rootjet.hpp"

namespace qcv {

enum class VerifyPath { Auto, Exact, RootJet };

struct CongruenceTask {
    Family family = Family::T1;
    unsigned long terms = 1;            // sum over k in [0, terms)
    PhiModulus modulus;
    std::optional<FactorRatio> rhs;     // absent means "≡ 0"
    std::string label;
    VerifyPath path = VerifyPath::Auto;
};

enum class Status { Holds, Fails, Error };

const char* status_name(Status s);

struct Report {
    std::string label;
    Status status = Status::Error;
    Poly residue;                       // zero iff status == Holds
    std::string notes;
    double timing_ms = 0.0;
};

// canonical representative of f modulo m.expanded (degree < deg m);
// throws NotCoprime when the reduced denominator shares a factor with m
Poly reduce_mod(const RatFunc& f, const PhiModulus& m);

Report verify(const CongruenceTask& task);

// least k with Φ_n | (q^x; q^4)_k; n odd
unsigned long fn_least_index(long x, unsigned long n);

// the two facts behind the telescoping-prefactor argument: the prefactor has
// Φ_n-multiplicity exactly 2, and no reduced series summand keeps a Φ_n in
// its denominator
Report proof_side_checks(unsigned long n, unsigned long m);

// ---------------------------------------------------------------------------
// floating root-of-unity oracle

struct OracleCheck {
    unsigned long index = 0;
    double value_mag = 0.0, value_scale = 0.0;
    double deriv_mag = 0.0, deriv_scale = 0.0;
    bool pass = false;
};

// complex dual-number mirror of the root-jet route; usable at any size
std::vector<OracleCheck> root_oracle(const CongruenceTask& task);

// literal form: evaluate the cleared-denominator difference polynomial and its
// derivative at each root; tolerance relative to the coefficient 1-norm.
// Materializes the full polynomial, so only for direct-route-sized tasks.
std::vector<OracleCheck> root_oracle_poly(const CongruenceTask& task);

constexpr double kOracleTolerance = 1e-6;

} // namespace qcv

#endif
