#ifndef ZETAFORMS_EXACT_HPP
#define ZETAFORMS_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <vector>

#include "zetaforms/precision.hpp"

namespace zetaforms {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;  // kept canonical by GMP

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("pow_rat: zero to negative power");
        b = Rat(1) / b;
        e = -e;
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// floor of a rational, exact
inline Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int r;
    mpz_fdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

inline Real to_real(const Int& n) {
    Real r;
    mpfr_set_z(r.backend().data(), n.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Rat& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

// deterministic trial-division primality, desk scale
inline bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> sieve_primes(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (long j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

// D_n = lcm(1..n)
inline Int lcm_upto(long n) {
    if (n < 1) throw std::invalid_argument("lcm_upto: n must be >= 1");
    Int acc(1);
    for (long k = 2; k <= n; ++k)
        acc = boost::multiprecision::lcm(acc, Int(k));
    return acc;
}

// Legendre's formula: ord_p(m!) = sum_i floor(m / p^i)
inline long ord_p_factorial(long p, long m) {
    if (!is_prime(p)) throw std::invalid_argument("ord_p_factorial: p must be prime");
    if (m < 0) throw std::invalid_argument("ord_p_factorial: m must be >= 0");
    long s = 0;
    for (long q = p; q <= m; ) {
        s += m / q;
        if (q > m / p) break;  // avoid overflow
        q *= p;
    }
    return s;
}

// primes p with lo < p <= hi, ascending (exact rational endpoints)
inline std::vector<long> primes_in(const Rat& lo, const Rat& hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("primes_in: need 0 <= lo <= hi");
    std::vector<long> out;
    long hi_l = static_cast<long>(floor_rat(hi));
    for (long p : sieve_primes(hi_l))
        if (Rat(p) > lo && Rat(p) <= hi) out.push_back(p);
    return out;
}

}  // namespace zetaforms

#endif
