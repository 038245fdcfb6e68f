#ifndef ZETAFORMS_SPECIAL_HPP
#define ZETAFORMS_SPECIAL_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zetaforms/exact.hpp"
#include "zetaforms/precision.hpp"

namespace zetaforms {

struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bernoulli numbers B_0..B_m, exact, cached.
// Recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline const std::vector<Rat>& bernoulli_upto(size_t m) {
    static std::vector<Rat> cache{Rat(1)};
    while (cache.size() <= m) {
        size_t k = cache.size();
        Rat s(0);
        for (size_t j = 0; j < k; ++j)
            s += Rat(binomial(k + 1, j)) * cache[j];
        cache.push_back(-s / Rat(Int(k) + 1));
    }
    return cache;
}

// Tail sum zeta(s, x) = sum_{k>=0} (x+k)^{-s} for integer s >= 2, x >= 1.
// Direct terms are taken until the Euler-Maclaurin series at the shifted
// point converges; the remainder after j corrections is bounded by the first
// omitted term (classical bound for real s > 0), which must drop below the
// relative target of the current working precision.
inline Real hurwitz_zeta_int(long s, Real x) {
    if (s < 2) throw std::invalid_argument("hurwitz_zeta_int: s must be >= 2");
    if (x < 1) throw std::invalid_argument("hurwitz_zeta_int: x must be >= 1");
    unsigned prec = Real::default_precision();
    Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(prec) - 2);

    // advance x so that s + 2j stays well below 2 pi x over the j-range used
    Real direct(0);
    Real two_pi = 2 * const_pi();
    long budget = 60L * prec + 1000;
    while (Real(s) > Real("0.7") * two_pi * x || x < Real(0.8 * prec + 12)) {
        direct += boost::multiprecision::pow(x, -s);
        x += 1;
        if (--budget < 0)
            throw NumericFailure("hurwitz_zeta_int: direct-term budget exhausted");
    }

    // EM at y = x:  y^{1-s}/(s-1) + y^{-s}/2 + sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} y^{-s-2j+1}
    Real y_pow = boost::multiprecision::pow(x, -s);
    Real total = y_pow * x / (s - 1) + y_pow / 2;
    const long jmax = 4L * prec + 60;
    Int poch(1);      // (s)_{2j-1}
    Int fact(1);      // (2j)!
    Real inv_y2 = 1 / (x * x);
    Real y_run = y_pow / x;  // y^{-s-2j+1} at j=1
    bool converged = false;
    for (long j = 1; j <= jmax; ++j) {
        if (j == 1) {
            poch = Int(s);
            fact = Int(2);
        } else {
            poch *= Int(s + 2 * j - 3) * Int(s + 2 * j - 2);
            fact *= Int(2 * j - 1) * Int(2 * j);
            y_run *= inv_y2;
        }
        Rat b2j = bernoulli_upto(static_cast<size_t>(2 * j))[static_cast<size_t>(2 * j)];
        Real term = to_real(b2j * Rat(poch) / Rat(fact)) * y_run;
        total += term;
        if (boost::multiprecision::abs(term) < eps * boost::multiprecision::abs(total)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericFailure("hurwitz_zeta_int: Euler-Maclaurin did not reach tolerance");
    return direct + total;
}

// zeta(s) for odd s >= 3, correct to ctx.digits - 2 digits (Euler-Maclaurin
// with the explicit first-omitted-term remainder bound). Cached per (s, digits).
inline Real zeta_odd(long s, const PrecisionContext& ctx) {
    if (s < 3 || s % 2 == 0)
        throw std::invalid_argument("zeta_odd: s must be odd and >= 3");
    static std::map<std::pair<long, unsigned>, Real> cache;
    auto key = std::make_pair(s, ctx.work_digits());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ScopedPrecision sp(ctx.work_digits());
    Real v = hurwitz_zeta_int(s, Real(1));
    cache.emplace(key, v);
    return v;
}

// Gauss digamma value psi(p/q) for a rational in (0, 1]:
//   psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
//              + 2 sum_{k=1}^{floor((q-1)/2)} cos(2 pi k p / q) ln sin(pi k / q)
inline Real digamma_rational(long p, long q, const PrecisionContext& ctx) {
    if (p <= 0 || q <= 0 || p > q)
        throw std::invalid_argument("digamma_rational: need 0 < p/q <= 1");
    long g = std::gcd(p, q);
    p /= g; q /= g;
    ScopedPrecision sp(ctx.work_digits());
    using boost::multiprecision::log;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    Real gamma = const_euler();
    if (q == 1) return -gamma;  // psi(1)
    Real pi = const_pi();
    Real x = Real(p) / q;
    Real val = -gamma - log(Real(2 * q)) - pi / 2 * cos(pi * x) / sin(pi * x);
    for (long k = 1; k <= (q - 1) / 2; ++k)
        val += 2 * cos(2 * pi * k * p / q) * log(sin(pi * Real(k) / q));
    return val;
}

}  // namespace zetaforms

#endif
