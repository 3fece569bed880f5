#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace freud {

// Runtime-precision real. Expression templates off so Eigen and std
// algorithms see a plain arithmetic-like scalar.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Raised when a computation cannot reach the requested accuracy
// (Cholesky breakdown, unstable iteration, ...). Carries an estimate of
// the digits that would be needed when one is available.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what, int required_digits = -1)
        : std::runtime_error(what), required_digits_(required_digits) {}
    int required_digits() const { return required_digits_; }

private:
    int required_digits_;
};

// Ambient precision plus the finite-difference step derived from it.
// Internally everything runs at digits + guard_digits; results are
// meaningful to ~digits.
struct PrecisionContext {
    int digits;       // requested significant decimal digits
    Real eps;         // 10^(-digits)
    Real deriv_step;  // 10^(-(digits/3)), so deriv_step^3 >= eps

    static constexpr int guard_digits = 30;

    int working_digits() const { return digits + guard_digits; }

    // Sets the global default precision as a side effect; construct one
    // context up front and pass it around.
    static PrecisionContext make(int digits = 50) {
        if (digits < 16) throw std::invalid_argument("PrecisionContext: digits must be >= 16");
        PrecisionContext ctx;
        ctx.digits = digits;
        Real::default_precision(static_cast<unsigned>(digits + guard_digits));
        ctx.eps = pow(Real(10), -digits);
        ctx.deriv_step = pow(Real(10), -(digits / 3));
        return ctx;
    }
};

// Temporarily raises (or lowers) the default precision for locally
// cancellation-heavy work.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
    ~PrecisionGuard() { Real::default_precision(saved_); }

private:
    unsigned saved_;
};

// Rounds x to the current default precision. Copies and arithmetic inherit
// the widest operand's precision on this backend, so values computed under
// a PrecisionGuard are squeezed back through this on the way out.
inline Real promote(const Real& x) {
    Real y(x);
    y.precision(static_cast<unsigned>(Real::default_precision()));
    return y;
}

}  // namespace freud
