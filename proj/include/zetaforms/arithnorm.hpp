#ifndef ZETAFORMS_ARITHNORM_HPP
#define ZETAFORMS_ARITHNORM_HPP

#include <map>
#include <sstream>
#include <string>

#include "zetaforms/formbuilder.hpp"

namespace zetaforms {

// phi_c(x, y) = [cx+y] + [cx-y] - c[x+y] - c[x-y], exact floors.
// Periodic with period 1 in each argument, even in y.
inline long phi_c(int c, const Rat& x, const Rat& y) {
    if (c < 3 || c % 2 == 0) throw std::invalid_argument("phi_c: c must be odd and >= 3");
    Int v = floor_rat(Rat(c) * x + y) + floor_rat(Rat(c) * x - y) -
            Int(c) * floor_rat(x + y) - Int(c) * floor_rat(x - y);
    return static_cast<long>(v);
}

// min over y of phi_c(x, .), by the closed case analysis: with
// xi = frac(x) reduced mod 1/2, the value is 2l-2 on [ (l-1)/(c-1), l/c )
// and 2l-1 on [ l/c, l/(c-1) ), l = 1..(c-1)/2.
inline long min_phi_c(int c, const Rat& x) {
    if (c < 3 || c % 2 == 0) throw std::invalid_argument("min_phi_c: c must be odd and >= 3");
    Rat xi = x - Rat(floor_rat(x));
    if (xi >= Rat(1, 2)) xi -= Rat(1, 2);
    for (int l = 1; l <= (c - 1) / 2; ++l) {
        if (xi < Rat(l, c)) return 2 * l - 2;
        if (xi < Rat(l, c - 1)) return 2 * l - 1;
    }
    return c - 2;  // unreachable: l = (c-1)/2 gives l/(c-1) = 1/2
}

// nu_p = min_{|k| <= n} ord_p( (cn+k)! (cn-k)! / ((n+k)!^c (n-k)!^c) ), exact.
inline long nu_p(long p, long n, int c) {
    if (!is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
    long best = 0;
    bool first = true;
    for (long k = 0; k <= n; ++k) {  // symmetric in k -> -k
        long v = ord_p_factorial(p, c * n + k) + ord_p_factorial(p, c * n - k) -
                 static_cast<long>(c) * (ord_p_factorial(p, n + k) + ord_p_factorial(p, n - k));
        if (first || v < best) { best = v; first = false; }
        if (best == 0) break;  // valuations are nonnegative here
    }
    return best;
}

// Pi_n = prod p^{nu_p} over primes sqrt((c+1)n) < p <= 2n, with D_{2n}.
struct NormalizerReport {
    long n;
    int c;
    Int d2n;
    Int clearing_product;          // Pi_n
    std::map<long, long> valuations;  // p -> nu_p (only primes in range)
};

inline NormalizerReport pi_n(long n, int c) {
    if (n < 1) throw std::invalid_argument("pi_n: n must be >= 1");
    if (c < 3 || c % 2 == 0) throw std::invalid_argument("pi_n: c must be odd and >= 3");
    NormalizerReport rep{n, c, lcm_upto(2 * n), Int(1), {}};
    for (long p : sieve_primes(2 * n)) {
        // strict lower bound sqrt((c+1)n) < p as exact integer comparison
        if (p * p <= (c + 1) * n) continue;
        long v = nu_p(p, n, c);
        rep.valuations[p] = v;
        if (v > 0) rep.clearing_product *= pow_int(Int(p), static_cast<unsigned long>(v));
    }
    return rep;
}

struct VarpiValue {
    int c;
    Real value;
};

// varpi_c = -sum_{l=1}^{(c-1)/2} ( 2 psi(2l/(c-1)) + 2 psi(2l/c) + (2c-1)/l )
//           + 2(c-1)(1-gamma)
inline VarpiValue varpi(int c, const PrecisionContext& ctx) {
    if (c < 3 || c % 2 == 0) throw std::invalid_argument("varpi: c must be odd and >= 3");
    ScopedPrecision sp(ctx.work_digits());
    Real s(0);
    for (long l = 1; l <= (c - 1) / 2; ++l) {
        s += 2 * digamma_rational(2 * l, c - 1, ctx);
        s += 2 * digamma_rational(2 * l, c, ctx);
        s += Real(2 * c - 1) / l;
    }
    Real val = -s + 2 * (c - 1) * (1 - const_euler());
    return VarpiValue{c, val};
}

// Exact integrality checks of the denominator-clearing property:
//   Pi^{-b} D_{2n}^j  B_{k,j}      integral for all k, j
//   Pi^{-b} D_{2n}^{a+b-1} A_s     integral for s = 0 and all odd s in (b, a+b)
struct Lemma1Verdict {
    bool ok = true;
    std::string failure;  // empty when ok
    NormalizerReport normalizer;
};

inline Lemma1Verdict check_lemma1(const FormParameters& p, const LinearForm& form,
                                  const ResidueTable& table) {
    Lemma1Verdict v{true, "", pi_n(p.n, p.c)};
    Rat pi_pow = Rat(pow_int(v.normalizer.clearing_product, static_cast<unsigned long>(p.b)));
    std::vector<Rat> d_pow(static_cast<size_t>(p.a + p.b));
    d_pow[0] = Rat(1);
    for (size_t j = 1; j < d_pow.size(); ++j)
        d_pow[j] = d_pow[j - 1] * Rat(v.normalizer.d2n);

    for (long k = -p.n; k <= p.n && v.ok; ++k) {
        for (int j = 0; j < p.a; ++j) {
            Rat scaled = d_pow[static_cast<size_t>(j)] * table.at(k, j) / pi_pow;
            if (!is_integer(scaled)) {
                std::ostringstream os;
                os << "residue entry not cleared at k=" << k << " j=" << j;
                v.ok = false;
                v.failure = os.str();
                break;
            }
        }
    }
    if (v.ok) {
        Rat top = d_pow[static_cast<size_t>(p.a + p.b - 1)];
        if (!is_integer(top * form.a0 / pi_pow)) {
            v.ok = false;
            v.failure = "A_0 not cleared";
        }
        for (auto& [s, as] : form.coeff) {
            if (!v.ok) break;
            if (!is_integer(top * as / pi_pow)) {
                std::ostringstream os;
                os << "A_s not cleared at s=" << s;
                v.ok = false;
                v.failure = os.str();
            }
        }
    }
    return v;
}

}  // namespace zetaforms

#endif
