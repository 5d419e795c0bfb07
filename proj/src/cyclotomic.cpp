#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qcv {

unsigned long totient(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

std::mutex g_cache_mutex;
std::map<unsigned long, Poly>& cache() {
    static std::map<unsigned long, Poly> c;
    return c;
}

Poly q_pow_minus_one(unsigned long n) {
    std::vector<Rational> v(n + 1, Rational(0));
    v[0] = Rational(-1);
    v[n] = Rational(1);
    return Poly(std::move(v));
}

} // namespace

Poly cyclotomic(unsigned long n) {
    if (n == 0) throw Error(ErrorKind::Validation, "cyclotomic index must be positive");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache().find(n);
        if (it != cache().end()) return it->second;
    }
    Poly result;
    if (n == 1) {
        result = Poly{Rational(-1), Rational(1)};   // q - 1
    } else {
        // compute outside the lock; a racing duplicate insert is idempotent
        Poly num = q_pow_minus_one(n);
        for (unsigned long d : divisors(n)) {
            if (d == n) continue;
            num = Poly::div_exact(num, cyclotomic(d));
        }
        result = num;
    }
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        cache().emplace(n, result);
    }
    return result;
}

std::vector<unsigned long> cyclo_indices_of_one_minus_q_pow(long e) {
    if (e == 0) throw Error(ErrorKind::Validation, "1 - q^0 is the zero polynomial");
    return divisors(static_cast<unsigned long>(e < 0 ? -e : e));
}

std::vector<unsigned long> cyclo_indices_of_one_plus_q_pow(long e) {
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    if (a == 0) return {};   // 1 + q^0 = 2: a nonzero constant, no cyclotomic factors
    std::vector<unsigned long> out;
    for (unsigned long d : divisors(2 * a)) {
        if (a % d != 0) out.push_back(d);
    }
    return out;
}

std::string PhiModulus::describe() const {
    std::ostringstream out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "*";
        out << "Phi_" << factors[i].first;
        if (factors[i].second > 1) out << "^" << factors[i].second;
    }
    return out.str();
}

PhiModulus build_modulus(const std::vector<std::pair<unsigned long, unsigned long>>& spec) {
    PhiModulus m;
    m.factors = spec;
    std::sort(m.factors.begin(), m.factors.end());
    for (size_t i = 0; i + 1 < m.factors.size(); ++i) {
        if (m.factors[i].first == m.factors[i + 1].first)
            throw Error(ErrorKind::DuplicateIndex,
                        "duplicate cyclotomic index " + std::to_string(m.factors[i].first));
    }
    unsigned long expected_degree = 0;
    Poly p = Poly::one();
    for (const auto& [n, s] : m.factors) {
        if (n < 2) throw Error(ErrorKind::Validation, "modulus indices must be >= 2");
        if (s < 1) throw Error(ErrorKind::Validation, "modulus multiplicities must be >= 1");
        Poly phi = cyclotomic(n);
        for (unsigned long i = 0; i < s; ++i) p *= phi;
        expected_degree += s * totient(n);
    }
    m.expanded = std::move(p);
    if (static_cast<unsigned long>(m.expanded.degree()) != expected_degree)
        throw Error(ErrorKind::Internal, "modulus degree mismatch");
    return m;
}

long count_phi_factors(long x, long d, long L, long n) {
    if (n <= 0) throw Error(ErrorKind::Validation, "count_phi_factors: n must be positive");
    long count = 0;
    for (long k = 0; k < L; ++k) {
        long e = x + d * k;
        long r = e % n;
        if (r < 0) r += n;
        if (r == 0) ++count;
    }
    return count;
}

} // namespace qcv
