#pragma once

#include "freud/params.hpp"
#include "freud/precision.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freud::rec {

// beta_0..beta_N for x S_n = S_(n+1) + beta_n S_(n-1), with provenance and
// an honest per-entry accuracy estimate (routes compared at runtime).
struct BetaTable {
    Params params;
    int N = 0;
    std::vector<Real> beta;       // beta[0] = 0
    std::string method;           // hankel-ratio | tau-ratio | dp1-iteration | closed-form
    std::vector<int> est_digits;  // -1 where no independent comparison was made
    std::optional<int> truncated_at;
    std::string truncation_reason;
};

// Production route: Cholesky of the full moment Hankel matrix,
// beta_n = (L_nn / L_(n-1,n-1))^2.
Real beta_hankel(int n, const Params& p);
std::vector<Real> beta_hankel_table(int N, const Params& p);
// Norms h_n = L_nn^2 come from the same factorization.
std::vector<Real> norm_table_hankel(int N, const Params& p);

// tau-function route: beta_(2m) = H_m(lambda+1) - H_m(lambda),
// beta_(2m+1) = H_(m+1)(lambda) - H_m(lambda+1), derivatives by central
// differences of the two log-tau families.
Real beta_tau(int n, const Params& p, const PrecisionContext& ctx);
std::vector<Real> beta_tau_table(int N, const Params& p, const PrecisionContext& ctx);

// Forward string-equation iteration seeded beta_0 = 0, beta_1 = Phi.
// Exponentially unstable: the table truncates (with reason) once
// positivity or the accuracy estimate vs the Hankel route fails.
BetaTable beta_dp1(int N, const Params& p, const PrecisionContext& ctx);

// Rational closed forms in Phi for n = 1..4.
Real beta_closed(int n, const Params& p);

// String-equation residual beta_(n+1)+beta_n+beta_(n-1) - t/2
//   - [2n + (2*lambda+1)(1-(-1)^n)]/(8 beta_n) over a supplied table.
Real dp1_residual(int n, const Params& p, const std::vector<Real>& beta);

// Continuous Painleve-type residual for beta_n(t): second-order ODE with
// parity-dependent parameters, t-derivatives via the tau route.
Real pIV_residual(int n, const Params& p, const PrecisionContext& ctx);

// Residuals of beta_(n+1) and beta_(n-1) against
// +-beta_n'/(2 beta_n) - beta_n/2 + t/4 + gamma_n/(4 beta_n),
// gamma_n = n/2 + (2*lambda+1)[1-(-1)^n]/4.
std::pair<Real, Real> backlund_residual(int n, const Params& p, const PrecisionContext& ctx);

// Large-t forms: beta_(2m) ~ m/t - 2m(2*lambda-m+1)/t^3,
// beta_(2m+1) ~ t/2 + (lambda-m)/t - 2(lambda^2-4*lambda*m+m^2-lambda-m)/t^3.
Real beta_asymptotic(int n, const Params& p);

// At lambda = -1/2 the even/odd forcing collapses; with q_n = 2 beta_n the
// table satisfies q_n(q_(n-1)+q_n+q_(n+1)) - t q_n = n (classical string
// equation up to time normalization). Returns that residual.
Real string_reduction_residual(int n, const Real& t);

// floor(-log10 relative difference), clamped to [0, digits].
int agreement_digits(const Real& a, const Real& b, const PrecisionContext& ctx);

}  // namespace freud::rec
