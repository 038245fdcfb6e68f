#ifndef ZETAFORMS_COMPLEX_HPP
#define ZETAFORMS_COMPLEX_HPP

#include <ostream>

#include "zetaforms/precision.hpp"

namespace zetaforms {

// Minimal complex type over the MPFR-backed Real.  std::complex is not
// usable with a variable-precision type and no MPC headers are available,
// so the handful of operations needed here are spelled out.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r), im(0) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        Real i = re * o.im + im * o.re;
        re = r; im = i;
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }

inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Real abs(const Complex& z) {
    using boost::multiprecision::hypot;
    return hypot(z.re, z.im);
}

inline Real arg(const Complex& z) {
    using boost::multiprecision::atan2;
    return atan2(z.im, z.re);
}

inline Complex exp(const Complex& z) {
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

// Principal branch, cut along the negative real axis.
inline Complex log(const Complex& z) {
    using boost::multiprecision::log;
    return Complex(log(abs(z)), arg(z));
}

inline Complex sqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    Real r = abs(z);
    if (r == 0) return Complex(Real(0), Real(0));
    // principal square root via half-angle
    Real u = sqrt((r + z.re) / 2);
    Real v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return Complex(u, v);
}

// Integer power by binary exponentiation (single-valued, no branch issues).
inline Complex pow_int(Complex base, long e) {
    if (e < 0) return Complex(Real(1), Real(0)) / pow_int(base, -e);
    Complex acc(Real(1), Real(0));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Complex sin(const Complex& z) {
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    using boost::multiprecision::sinh;
    using boost::multiprecision::cosh;
    return Complex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}

inline Complex cos(const Complex& z) {
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    using boost::multiprecision::sinh;
    using boost::multiprecision::cosh;
    return Complex(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
}

}  // namespace zetaforms

#endif
