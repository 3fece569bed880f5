#pragma once

#include "freud/params.hpp"
#include "freud/precision.hpp"

#include <array>
#include <vector>

namespace freud::sf {

// Euler gamma; throws std::domain_error at the poles (nonpositive integers).
Real gamma(const Real& x);
Real lgamma(const Real& x);

// 1/gamma(x); entire, exactly 0 at nonpositive integers.
Real recip_gamma(const Real& x);

Real erf(const Real& x);
Real erfc(const Real& x);

// Confluent hypergeometric M(a, b, z) by series. b must not be a
// nonpositive integer.
Real kummer_m(const Real& a, const Real& b, const Real& z);

// Weber parabolic cylinder D_nu(z) from the two-Kummer-series form.
Real pcf_d(const Real& nu, const Real& z);

// Independent oracle for Re(nu) < 0:
// D_nu(z) = e^(-z^2/4)/gamma(-nu) * int_0^inf s^(-nu-1) e^(-s^2/2 - z s) ds.
Real pcf_d_integral(const Real& nu, const Real& z, const PrecisionContext& ctx);

// Phi_lambda(t) = t/2 + (sqrt(2)/2) D_(-lambda)(-t/sqrt2) / D_(-lambda-1)(-t/sqrt2).
Real big_phi(const Params& p);

// |dPhi/dt + Phi^2 - (t/2)Phi - (lambda+1)/2| with the derivative by
// central differences.
Real riccati_residual(const Params& p, const PrecisionContext& ctx);

// Phi and its first three t-derivatives, the derivatives closed via the
// Riccati relation (no differencing).
std::array<Real, 4> phi_derivs(const Params& p);

// Coefficients of the large-t expansion Phi ~ t/2 + sum a_n t^(1-2n).
struct PhiExpansion {
    Real lambda;
    std::vector<Real> a;  // a[0] = a_1, ..., a[N-1] = a_N
};
PhiExpansion phi_expansion(const Real& lambda, int N);

// Truncated expansion value with the first `terms` coefficients.
Real phi_asymptotic(const Params& p, int terms);

}  // namespace freud::sf
