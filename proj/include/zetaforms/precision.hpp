#ifndef ZETAFORMS_PRECISION_HPP
#define ZETAFORMS_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <ios>
#include <stdexcept>
#include <string>

namespace zetaforms {

// Variable-precision real backed by MPFR. New values pick up the precision
// installed by ScopedPrecision; values keep their own precision afterwards.
using Real = boost::multiprecision::mpfr_float;

struct PrecisionContext {
    unsigned digits = 64;

    PrecisionContext() = default;
    explicit PrecisionContext(unsigned d) : digits(d) {
        if (d < 20)
            throw std::invalid_argument("PrecisionContext: digits must be >= 20");
    }

    // Comparison tolerance 10^(10-digits).
    Real tolerance() const {
        return boost::multiprecision::pow(Real(10), 10 - static_cast<int>(digits));
    }

    // Working precision: requested digits plus guard digits.
    unsigned work_digits(unsigned extra = 0) const { return digits + 16 + extra; }
};

// RAII guard installing a default precision for freshly constructed Reals.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline Real const_pi() {
    Real x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

inline Real const_euler() {
    Real x;
    mpfr_const_euler(x.backend().data(), MPFR_RNDN);
    return x;
}

inline Real const_log2() {
    Real x;
    mpfr_const_log2(x.backend().data(), MPFR_RNDN);
    return x;
}

// Decimal string with the given number of significant digits (round to nearest).
inline std::string decimal_string(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace zetaforms

#endif
