#ifndef ZETAFORMS_QUADRATURE_HPP
#define ZETAFORMS_QUADRATURE_HPP

#include <algorithm>
#include <stdexcept>

#include "zetaforms/complex.hpp"
#include "zetaforms/special.hpp"

namespace zetaforms {

struct QuadratureError : NumericFailure {
    Real achieved;
    QuadratureError(const std::string& what, Real a)
        : NumericFailure(what), achieved(std::move(a)) {}
};

struct QuadResult {
    Complex value;
    Real error;     // last level-to-level difference, relative to L1 mass
    long evals = 0;
};

// Tanh-sinh quadrature over the straight segment [p0, p1] in the complex
// plane. The integrand must be analytic in a neighbourhood of the open
// segment; endpoint singularities are tolerated.
template <class F>
QuadResult integrate_segment(F&& f, const Complex& p0, const Complex& p1,
                             const Real& eps_rel, int max_level = 12) {
    using boost::multiprecision::abs;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sinh;
    using boost::multiprecision::tanh;
    unsigned prec = Real::default_precision();
    double u_max = std::asinh((static_cast<double>(prec) + 25) * 2.302585 / 3.141592653589793) + 0.5;

    Complex mid = (p0 + p1) * Complex(Real(1) / 2, Real(0));
    Complex half = (p1 - p0) * Complex(Real(1) / 2, Real(0));
    Real half_pi = const_pi() / 2;

    QuadResult res;
    Real l1(0);

    auto weighted = [&](const Real& u) {
        Real s = half_pi * sinh(u);
        Real ch = cosh(s);
        Real w = half_pi * cosh(u) / (ch * ch);
        Real x = tanh(s);
        Complex pt = mid + half * Complex(x, Real(0));
        Complex v = f(pt) * Complex(w, Real(0));
        ++res.evals;
        l1 += abs(v);
        return v;
    };

    Real h(1);
    Complex sum = weighted(Real(0));
    // level 0 side nodes
    for (int sgn : {1, -1}) {
        long misses = 0;
        for (long k = 1;; ++k) {
            Real u = h * k * sgn;
            if (std::abs(static_cast<double>(u)) > u_max) break;
            Complex v = weighted(u);
            sum += v;
            if (abs(v) < eps_rel * eps_rel * (l1 + Real(1))) {
                if (++misses > 6) break;
            } else misses = 0;
        }
    }
    Complex estimate = sum * Complex(h, Real(0)) * half;
    Real err(1);

    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        Complex add(Real(0), Real(0));
        for (int sgn : {1, -1}) {
            long misses = 0;
            for (long k = 1;; k += 2) {
                Real u = h * k * sgn;
                if (std::abs(static_cast<double>(u)) > u_max) break;
                Complex v = weighted(u);
                add += v;
                if (abs(v) < eps_rel * eps_rel * (l1 + Real(1))) {
                    if (++misses > 6) break;
                } else misses = 0;
            }
        }
        sum += add;
        Complex new_estimate = sum * Complex(h, Real(0)) * half;
        err = abs(new_estimate - estimate);
        estimate = new_estimate;
        Real scale = l1 * h * abs(half) + abs(estimate);
        if (level >= 3 && err < eps_rel * scale) {
            res.value = estimate;
            res.error = err;
            return res;
        }
    }
    res.value = estimate;
    res.error = err;
    Real scale = abs(estimate) + l1 * h * abs(half);
    if (err > eps_rel * scale * 1000)
        throw QuadratureError("integrate_segment: did not reach tolerance", err);
    return res;
}

// Exp-sinh quadrature along the ray p0 + dir*s, s in (0, inf). The integrand
// must decay at least like s^-2 at infinity along the ray.
template <class F>
QuadResult integrate_ray(F&& f, const Complex& p0, const Complex& dir,
                         const Real& eps_rel, int max_level = 12) {
    using boost::multiprecision::abs;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sinh;
    using boost::multiprecision::exp;
    unsigned prec = Real::default_precision();
    double u_max = std::asinh((static_cast<double>(prec) + 25) * 2.302585 / 3.141592653589793) + 0.5;

    Real half_pi = const_pi() / 2;
    QuadResult res;
    Real l1(0);

    auto weighted = [&](const Real& u) {
        Real g = half_pi * sinh(u);
        Real x = exp(g);                      // distance along the ray
        Real w = half_pi * cosh(u) * x;       // dx/du
        Complex pt = p0 + dir * Complex(x, Real(0));
        Complex v = f(pt) * Complex(w, Real(0));
        ++res.evals;
        l1 += abs(v);
        return v;
    };

    Real h(1);
    Complex sum = weighted(Real(0));
    for (int sgn : {1, -1}) {
        long misses = 0;
        for (long k = 1;; ++k) {
            Real u = h * k * sgn;
            if (std::abs(static_cast<double>(u)) > u_max) break;
            Complex v = weighted(u);
            sum += v;
            if (abs(v) < eps_rel * eps_rel * (l1 + Real(1))) {
                if (++misses > 6) break;
            } else misses = 0;
        }
    }
    Complex estimate = sum * Complex(h, Real(0)) * dir;
    Real err(1);

    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        Complex add(Real(0), Real(0));
        for (int sgn : {1, -1}) {
            long misses = 0;
            for (long k = 1;; k += 2) {
                Real u = h * k * sgn;
                if (std::abs(static_cast<double>(u)) > u_max) break;
                Complex v = weighted(u);
                add += v;
                if (abs(v) < eps_rel * eps_rel * (l1 + Real(1))) {
                    if (++misses > 6) break;
                } else misses = 0;
            }
        }
        sum += add;
        Complex new_estimate = sum * Complex(h, Real(0)) * dir;
        err = abs(new_estimate - estimate);
        estimate = new_estimate;
        Real scale = l1 * h + abs(estimate);
        if (level >= 3 && err < eps_rel * scale) {
            res.value = estimate;
            res.error = err;
            return res;
        }
    }
    res.value = estimate;
    res.error = err;
    Real scale = abs(estimate) + l1 * h;
    if (err > eps_rel * scale * 1000)
        throw QuadratureError("integrate_ray: did not reach tolerance", err);
    return res;
}

}  // namespace zetaforms

#endif
