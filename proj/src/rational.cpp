#include "rational.hpp"

namespace qcv {

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool is_prime_trial(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (unsigned long d = 5; d * d <= p; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

long int_valuation(const Int& n, unsigned long p) {
    if (sgn(n) == 0) throw Error(ErrorKind::ZeroInput, "valuation of zero");
    Int q(p), out;
    return static_cast<long>(mpz_remove(out.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

PadicSplit padic_split(const Rational& x, unsigned long p) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "padic_split of zero");
    Int q(p);
    Int num_out, den_out;
    long vn = static_cast<long>(
        mpz_remove(num_out.get_mpz_t(), x.numerator().get_mpz_t(), q.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(den_out.get_mpz_t(), x.denominator().get_mpz_t(), q.get_mpz_t()));
    PadicSplit s;
    s.valuation = vn - vd;
    s.unit = Rational(num_out, den_out);
    return s;
}

Int padic_residue(const Rational& x, unsigned long p, unsigned s) {
    if (x.is_zero()) return 0;
    PadicSplit sp = padic_split(x, p);
    if (sp.valuation < 0)
        throw Error(ErrorKind::NotPIntegral,
                    "padic_residue: negative valuation " + std::to_string(sp.valuation));
    Int mod = int_pow(p, s);
    Int a = sp.unit.numerator() % mod;
    Int inv = mod_inverse(sp.unit.denominator(), mod);
    Int pv;
    mpz_powm_ui(pv.get_mpz_t(), Int(p).get_mpz_t(),
                static_cast<unsigned long>(sp.valuation), mod.get_mpz_t());
    Int r = (a * inv % mod) * pv % mod;
    if (sgn(r) < 0) r += mod;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw Error(ErrorKind::Validation, "mod_inverse: modulus must be >= 2");
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorKind::NotInvertible,
                    "mod_inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") > 1");
    return r;
}

Int int_pow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

} // namespace qcv
