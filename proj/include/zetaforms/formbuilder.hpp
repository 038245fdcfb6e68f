#ifndef ZETAFORMS_FORMBUILDER_HPP
#define ZETAFORMS_FORMBUILDER_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "zetaforms/series.hpp"
#include "zetaforms/special.hpp"

namespace zetaforms {

// Odd parameter triple (a, b, c) with c >= 3, a > b(c-1), plus the index n.
struct FormParameters {
    int a, b, c;
    long n;

    FormParameters(int a_, int b_, int c_, long n_) : a(a_), b(b_), c(c_), n(n_) {
        if (a <= 0 || b <= 0 || c <= 0 || n <= 0)
            throw std::invalid_argument("FormParameters: all parameters must be positive");
        if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0)
            throw std::invalid_argument("FormParameters: a, b, c must be odd");
        if (c < 3)
            throw std::invalid_argument("FormParameters: c must be >= 3");
        if (static_cast<long>(a) <= static_cast<long>(b) * (c - 1))
            throw std::invalid_argument("FormParameters: need a > b(c-1)");
    }
};

// R(t) = (2n)!^{a+b-bc} * prod_{m=n+1}^{cn} ((t+m)(t-m))^b / prod_{m=-n}^{n} (t+m)^a
inline ProductForm rational_form(const FormParameters& p) {
    ProductForm w;
    long e = static_cast<long>(p.a) + p.b - static_cast<long>(p.b) * p.c;
    w.constant = e >= 0 ? Rat(pow_int(factorial(2 * p.n), e))
                        : Rat(1) / Rat(pow_int(factorial(2 * p.n), -e));
    for (long m = p.n + 1; m <= static_cast<long>(p.c) * p.n; ++m) {
        w.factors.push_back({m, p.b});
        w.factors.push_back({-m, p.b});
    }
    for (long m = -p.n; m <= p.n; ++m)
        w.factors.push_back({m, -static_cast<long>(p.a)});
    return w;
}

// R(t) (t+k)^a with the pole at t = -k removed, |k| <= n.
inline ProductForm form_without_pole(const FormParameters& p, long k) {
    ProductForm w = rational_form(p);
    auto it = std::find_if(w.factors.begin(), w.factors.end(),
                           [&](auto& f) { return f.first == k; });
    w.factors.erase(it);
    return w;
}

// Partial-fraction residue coefficients:
//   entries (k, j) = (1/j!) d^j/dt^j ( R(t) (t+k)^a ) at t = -k,
//   k = -n..n, j = 0..a-1, all exact.
struct ResidueTable {
    FormParameters params;
    std::vector<Rat> entries;  // row-major over k, then j

    const Rat& at(long k, int j) const {
        return entries[static_cast<size_t>((k + params.n) * params.a + j)];
    }
};

inline ResidueTable residue_table(const FormParameters& p) {
    ResidueTable table{p, {}};
    table.entries.resize(static_cast<size_t>((2 * p.n + 1) * p.a));
    for (long k = -p.n; k <= p.n; ++k) {
        ProductForm w = form_without_pole(p, k);
        std::vector<Rat> coeffs = w.taylor_at(Rat(-k), p.a - 1);
        for (int j = 0; j < p.a; ++j)
            table.entries[static_cast<size_t>((k + p.n) * p.a + j)] = coeffs[static_cast<size_t>(j)];
    }
    return table;
}

// I = sum_{s odd, b < s < a+b} A_s zeta(s) - A_0
struct LinearForm {
    FormParameters params;
    Rat a0;
    std::map<int, Rat> coeff;  // s -> A_s, odd s in (b, a+b)
};

//   A_s = (-1)^{b-1} C(s-1, b-1) sum_k entries(k, a+b-s-1)
//   A_0 = (-1)^{b-1} sum_k sum_{l=1}^{k+n} sum_j C(a+b-2-j, b-1) entries(k, j) / l^{a+b-1-j}
inline LinearForm assemble_linear_form(const ResidueTable& table) {
    const FormParameters& p = table.params;
    LinearForm form{p, Rat(0), {}};
    int sign = (p.b - 1) % 2 == 0 ? 1 : -1;  // b odd, so +1

    for (int s = p.b + 2; s < p.a + p.b; s += 2) {
        int j = p.a + p.b - s - 1;
        Rat sum(0);
        for (long k = -p.n; k <= p.n; ++k)
            sum += table.at(k, j);
        form.coeff[s] = Rat(sign) * Rat(binomial(s - 1, p.b - 1)) * sum;
    }

    Rat a0(0);
    for (long k = -p.n; k <= p.n; ++k) {
        for (long l = 1; l <= k + p.n; ++l) {
            Rat lr(l);
            for (int j = 0; j < p.a; ++j) {
                Rat term = Rat(binomial(p.a + p.b - 2 - j, p.b - 1)) * table.at(k, j) /
                           pow_rat(lr, p.a + p.b - 1 - j);
                a0 += term;
            }
        }
    }
    form.a0 = Rat(sign) * a0;
    return form;
}

struct SeriesBudgetError : NumericFailure {
    Real achieved_bound;
    SeriesBudgetError(const std::string& what, Real achieved)
        : NumericFailure(what), achieved_bound(std::move(achieved)) {}
};

struct SeriesValue {
    Real value;
    Real error_bound;
    long exact_terms;
    long tail_terms;
};

// Term of the series: h(t) = R^{(b-1)}(t) / (b-1)!, exact at integer t > n.
// Zero for n < t <= cn (zeros of R there have multiplicity b > b-1).
inline Rat series_term(const FormParameters& p, long t) {
    if (t <= p.n) throw std::domain_error("series_term: t must exceed n");
    if (t <= static_cast<long>(p.c) * p.n) return Rat(0);
    ProductForm w = rational_form(p);
    if (p.b == 1) return w.value_at(Rat(t));
    return w.taylor_at(Rat(t), p.b - 1)[static_cast<size_t>(p.b - 1)];
}

// I_n = sum_{t=n+1}^infty h(t), evaluated as an exact prefix plus a tail
// resummed through the Laurent expansion of h at infinity:
//   sum_{t>=T} h(t) = sum_i c_i zeta(s_i, T),
// with the remainder after the last Laurent term bounded by a geometric
// comparison (ratio max-root/T <= ~1/2 by choice of T).
inline SeriesValue eval_series(const FormParameters& p, const PrecisionContext& ctx,
                               long term_budget = 1000000) {
    ScopedPrecision sp(ctx.work_digits(12));
    unsigned prec = Real::default_precision();

    ProductForm r = rational_form(p);
    long cn = static_cast<long>(p.c) * p.n;
    long start = cn + 1;  // terms vanish identically on (n, cn]
    long max_root = r.max_abs_root();  // = cn

    // Laurent expansion of h = R^{(b-1)}/(b-1)!: from R's coefficients,
    //   exponent -(d0+i)  ->  coefficient * C(d0+i+b-2, b-1) * (-1)^{b-1}
    // (b odd, sign +1); valid |t| > max_root.
    long T = std::max({start, 2 * max_root + 1, static_cast<long>(40)});
    if (T - start > term_budget)
        throw SeriesBudgetError("eval_series: exact prefix exceeds term budget", Real(0));

    Rat prefix(0);
    for (long t = start; t < T; ++t)
        prefix += series_term(p, t);

    Real eps_rel = boost::multiprecision::pow(Real(10), -static_cast<int>(prec) + 4);
    int max_terms = static_cast<int>(3.4 * prec + 60);

    auto [d0r, rcoeffs] = r.laurent_at_infinity(max_terms);
    long d0 = d0r + p.b - 1;  // leading exponent of h

    Real value = to_real(prefix);
    Real tail(0);
    Real last_abs(0), prev_abs(0);
    Real Tx(T);
    long used = 0;
    for (int i = 0; i < max_terms; ++i) {
        long s = d0 + i;
        Rat ci = rcoeffs[static_cast<size_t>(i)] *
                 Rat(binomial(static_cast<unsigned long>(d0r + i + p.b - 2), p.b - 1));
        if (!(ci == 0)) {
            Real term = to_real(ci) * hurwitz_zeta_int(s, Tx);
            tail += term;
            prev_abs = last_abs;
            last_abs = boost::multiprecision::abs(term);
            Real scale = boost::multiprecision::abs(value + tail);
            if (i > 4 && last_abs < eps_rel * scale && prev_abs < eps_rel * scale) {
                used = i + 1;
                break;
            }
        }
        used = i + 1;
    }
    value += tail;

    // geometric remainder bound: ratio (max_root + 1/2)/T <= ~0.51 by choice of T
    Real q = Real(2 * max_root + 1) / (2 * Tx);
    Real bound = 8 * last_abs * q / (1 - q);
    Real scale = boost::multiprecision::abs(value);
    Real target = ctx.tolerance() * std::max(scale, Real(1));
    Real target_rel = boost::multiprecision::pow(Real(10), -static_cast<int>(ctx.digits) + 10) * scale;
    if (bound > target && bound > target_rel)
        throw SeriesBudgetError("eval_series: tail bound did not reach tolerance", bound);

    return SeriesValue{value, bound, T - start, used};
}

// |I_n - (sum_s A_s zeta(s) - A_0)| with zeta evaluated at a working
// precision inflated by the a-priori coefficient growth, so the numerical
// error of the right-hand side stays far below the contract threshold.
inline Real verify_identity(const LinearForm& form, const PrecisionContext& ctx) {
    const FormParameters& p = form.params;
    using boost::multiprecision::log;
    double growth = (2.0 * p.b * p.c * std::log(static_cast<double>(p.c)) +
                     2.0 * (p.a + p.b - p.b * p.c) * std::log(2.0)) *
                    static_cast<double>(p.n) / std::log(10.0);
    unsigned extra = static_cast<unsigned>(growth < 0 ? 0 : growth) + 10;
    PrecisionContext inner{ctx.digits + extra};
    ScopedPrecision sp(inner.work_digits());

    Real rhs = -to_real(form.a0);
    for (auto& [s, as] : form.coeff)
        rhs += to_real(as) * zeta_odd(s, inner);
    Real lhs = eval_series(p, inner).value;
    return boost::multiprecision::abs(lhs - rhs);
}

}  // namespace zetaforms

#endif
