#pragma once

#include "freud/orthogonal.hpp"
#include "freud/params.hpp"
#include "freud/parity_poly.hpp"
#include "freud/precision.hpp"

#include <utility>
#include <vector>

namespace freud::structure {

using poly::Poly;

// Ladder pair for x S_n' = -B_n S_n + A_n S_(n-1):
// A_n = 4x beta_n (x^2 - t/2 + beta_n + beta_(n+1)),
// B_n = 4x^2 beta_n + (lambda + 1/2)(1 - (-1)^n).
struct LadderPair {
    int n;
    Params params;
    Poly A;  // odd, degree 3
    Poly B;  // even, degree 2
};

LadderPair ladder(int n, const Params& p, const std::vector<Real>& beta);

// Coefficient-level residual of x S_n' + B_n S_n - A_n S_(n-1), normalized
// by the largest coefficient among the three summands.
ResidualReport dde_residual(int n, const Params& p, const PrecisionContext& ctx);

// A_n, B_n rebuilt from the kernel integrals
// int K(x,y) S_n S_m w dy, K = 4x^2 + 4xy + 4y^2 - 2t, all evaluated by
// exact moment summation, plus the inverse-moment offset that decides the
// [1 - (-1)^n] constant in B_n. Independent of the closed forms above.
LadderPair ladder_oracle(int n, const Params& p);

// int S_n S_(n-1) / y w dy by exact moment summation (odd product has no
// constant term, so the division stays polynomial).
Real cross_inverse_moment(int n, const Params& p);

// Second-order ODE x S_n'' + R_n S_n' + T_n S_n = 0 with rational R_n, T_n;
// denominators divide 2x^2 (x^2 - t/2 + beta_n + beta_(n+1)).
struct OdeCoeffs {
    int n;
    Params params;
    Poly R_num, R_den;  // R = R_num / R_den
    Poly T_num, T_den;  // T = T_num / T_den
};

OdeCoeffs ode_coeffs(int n, const Params& p, const std::vector<Real>& beta);

// Residual of the ODE cleared of denominators:
// 2x^3 d_n S_n'' + 2x^2 (R_num) S_n' + (T_num) S_n, normalized.
ResidualReport ode_residual(int n, const Params& p, const PrecisionContext& ctx);

// Quasi-orthogonality x S_n' = c_(n,n-4) S_(n-4) + c_(n,n-2) S_(n-2) + n S_n.
struct ShohatCoeffs {
    int n;
    Real c_nm4;  // 4 beta_n beta_(n-1) beta_(n-2) beta_(n-3)
    Real c_nm2;  // 4 beta_n beta_(n-1) (beta_(n-2)+beta_(n-1)+beta_n+beta_(n+1) - t/2)
    Real c_n;    // exactly n
};

ShohatCoeffs shohat(int n, const Params& p, const std::vector<Real>& beta);

// Normalized coefficient residual of the quasi-orthogonality expansion.
Real shohat_quasi_residual(int n, const Params& p);

// Eliminating S_(n-2), S_(n-4) back to the (S_n, S_(n-1)) basis gives a
// second derivation of the ladder pair; must match `ladder` coefficient-wise.
LadderPair shohat_reconstruct(int n, const Params& p, const std::vector<Real>& beta);

// max over sample x of |B_n + B_(n+1) - x A_n / beta_n - (2*lambda+1)
//   + x(4x^3 - 2tx)|.
Real lemma_b_sum_residual(int n, const Params& p);

}  // namespace freud::structure
