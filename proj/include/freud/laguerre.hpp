#pragma once

#include "freud/params.hpp"
#include "freud/parity_poly.hpp"
#include "freud/precision.hpp"

#include <utility>
#include <vector>

namespace freud::lag {

using DPoly = DensePoly<Real>;

// Monic polynomials orthogonal w.r.t. x^lambda e^(-x^2+tx) on (0, inf),
// with their recurrence x L_n = L_(n+1) + alpha_n L_n + beta_n L_(n-1).
struct LaguerrePolySet {
    Params params;
    int N;
    std::vector<DPoly> L;      // L_0..L_N
    std::vector<Real> alpha;   // alpha_0..alpha_(N-1)
    std::vector<Real> beta;    // beta_0 = 0, beta_1..beta_(N-1)
    std::vector<Real> h;       // norms h_0..h_N
};

// Cholesky of the half-line moment Hankel matrix; monic coefficient rows
// from the inverse factor, recurrence coefficients from norm ratios and
// subleading coefficients.
LaguerrePolySet laguerre_recurrence(int N, const Real& t, const Real& lambda);

// Kernel polynomials Q_n = [L_(n+1) - (L_(n+1)(0)/L_n(0)) L_n]/x, monic of
// degree n, orthogonal w.r.t. x^(lambda+1) e^(-x^2+tx).
std::vector<DPoly> kernel_polys(const LaguerrePolySet& set);

// Coefficient residual of S_(2m) = L_m(x^2) and S_(2m+1) = x Q_m(x^2)
// against the polynomial-engine S's, for 2m+1 <= N.
ResidualReport symmetrization_check(int N, const Params& p, const PrecisionContext& ctx);

// alpha_0 by the log-derivative route: alpha_0 = q_0/2 + t/2 with
// q_0(z) = -2z + d/dz log psi(z), psi(z) = D_(-lambda-1)(-sqrt2 z) e^(z^2/2),
// z = t/2. Independent of the moment route.
Real alpha0_log_derivative(const Params& p, const PrecisionContext& ctx);

// alpha_1 and beta_1 by the same theorem at n = 1, with the Wronskian
// ratio closed in terms of Phi and its derivatives.
std::pair<Real, Real> alpha1_beta1_log_derivative(const Params& p);

}  // namespace freud::lag
