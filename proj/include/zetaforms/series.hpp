#ifndef ZETAFORMS_SERIES_HPP
#define ZETAFORMS_SERIES_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "zetaforms/complex.hpp"
#include "zetaforms/exact.hpp"

namespace zetaforms {

// A rational function held in factored form:  W(t) = C * prod (t + m)^e.
// Exact Taylor coefficients come from integrating the logarithmic derivative
// sum e/(t+m) termwise and exponentiating the series; exact Laurent
// coefficients at infinity come from the same recurrence in v = 1/t.
struct ProductForm {
    Rat constant = Rat(1);
    std::vector<std::pair<long, long>> factors;  // (m, e) for (t+m)^e, m distinct

    long degree() const {
        long d = 0;
        for (auto& [m, e] : factors) d += e;
        return d;
    }

    // exponent of (t+m); 0 if absent
    long exponent_at(long m) const {
        for (auto& [mm, e] : factors)
            if (mm == m) return e;
        return 0;
    }

    // Exact value at rational t. Returns 0 if a positive-exponent factor
    // vanishes; throws on a pole.
    Rat value_at(const Rat& t) const {
        Rat acc = constant;
        for (auto& [m, e] : factors) {
            Rat base = t + m;
            if (base == 0) {
                if (e < 0) throw std::domain_error("ProductForm: pole");
                return Rat(0);
            }
            acc *= pow_rat(base, e);
        }
        return acc;
    }

    Real value_at(const Real& t) const {
        Real acc = to_real(constant);
        for (auto& [m, e] : factors) {
            Real base = t + m;
            acc *= boost::multiprecision::pow(base, static_cast<int>(e));
        }
        return acc;
    }

    Complex value_at(const Complex& t) const {
        Complex acc(to_real(constant), Real(0));
        for (auto& [m, e] : factors)
            acc *= pow_int(Complex(t.re + m, t.im), e);
        return acc;
    }

    // Taylor coefficients of W(center + u) about u = 0, orders 0..order.
    // Requires center + m != 0 for every factor.
    std::vector<Rat> taylor_at(const Rat& center, int order) const {
        Rat w0 = constant;
        for (auto& [m, e] : factors) {
            Rat base = center + m;
            if (base == 0)
                throw std::domain_error("ProductForm::taylor_at: expansion at a root/pole");
            w0 *= pow_rat(base, e);
        }
        // lambda_i = coeff of u^i in log W(center+u) = (-1)^(i-1)/i * S_i,
        // S_i = sum e / (center+m)^i
        std::vector<Rat> lambda(static_cast<size_t>(order) + 1, Rat(0));
        std::vector<Rat> recip(factors.size());
        for (size_t f = 0; f < factors.size(); ++f)
            recip[f] = Rat(1) / (center + factors[f].first);
        std::vector<Rat> pw = recip;  // (center+m)^{-i}
        for (int i = 1; i <= order; ++i) {
            Rat s(0);
            for (size_t f = 0; f < factors.size(); ++f) {
                s += Rat(factors[f].second) * pw[f];
                pw[f] *= recip[f];
            }
            lambda[static_cast<size_t>(i)] = (i % 2 == 1 ? s : -s) / i;
        }
        // exponentiate: beta_0 = 1, beta_j = (1/j) sum_{i=1}^{j} i lambda_i beta_{j-i}
        std::vector<Rat> beta(static_cast<size_t>(order) + 1, Rat(0));
        beta[0] = Rat(1);
        for (int j = 1; j <= order; ++j) {
            Rat s(0);
            for (int i = 1; i <= j; ++i)
                s += Rat(i) * lambda[static_cast<size_t>(i)] * beta[static_cast<size_t>(j - i)];
            beta[static_cast<size_t>(j)] = s / j;
        }
        for (auto& b : beta) b *= w0;
        return beta;
    }

    // Laurent expansion at infinity: W(t) = sum_{i>=0} coeff[i] * t^{-(d0+i)},
    // d0 = -degree(), convergent for |t| > max |m|.
    std::pair<long, std::vector<Rat>> laurent_at_infinity(int terms) const {
        long d0 = -degree();
        // log(prod (1 + m v)^e) with v = 1/t:
        //   lambda_i = (-1)^(i-1)/i * sum e m^i
        std::vector<Rat> lambda(static_cast<size_t>(terms) + 1, Rat(0));
        std::vector<Rat> pw(factors.size(), Rat(1));
        for (int i = 1; i <= terms; ++i) {
            Rat s(0);
            for (size_t f = 0; f < factors.size(); ++f) {
                pw[f] *= Rat(factors[f].first);
                s += Rat(factors[f].second) * pw[f];
            }
            lambda[static_cast<size_t>(i)] = (i % 2 == 1 ? s : -s) / i;
        }
        std::vector<Rat> beta(static_cast<size_t>(terms) + 1, Rat(0));
        beta[0] = Rat(1);
        for (int j = 1; j <= terms; ++j) {
            Rat s(0);
            for (int i = 1; i <= j; ++i)
                s += Rat(i) * lambda[static_cast<size_t>(i)] * beta[static_cast<size_t>(j - i)];
            beta[static_cast<size_t>(j)] = s / j;
        }
        for (auto& b : beta) b *= constant;
        return {d0, std::move(beta)};
    }

    long max_abs_root() const {
        long mx = 0;
        for (auto& [m, e] : factors)
            mx = std::max(mx, m < 0 ? -m : m);
        return mx;
    }
};

}  // namespace zetaforms

#endif
