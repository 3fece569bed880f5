#pragma once

#include "freud/params.hpp"
#include "freud/parity_poly.hpp"
#include "freud/precision.hpp"

#include <utility>
#include <vector>

namespace freud::poly {

using Poly = ParityPoly<Real>;

// Monic S_0..S_N by the coefficient-level recurrence
// S_(n+1) = x S_n - beta_n S_(n-1). Parity is structural: S_n has parity
// n mod 2 exactly.
std::vector<Poly> generate(int N, const Params& p, const std::vector<Real>& beta);

Real eval(const Poly& s, const Real& x);
Poly derivative(const Poly& s);

struct NormTable {
    Params params;
    std::vector<Real> h;  // h_0 = mu_0, h_n = beta_n h_(n-1)
};
NormTable norms(int N, const Params& p, const std::vector<Real>& beta);

// Integral of a polynomial against the weight by exact moment summation;
// odd parity integrates to exactly 0.
Real integrate_poly(const Poly& q, const Params& p);

// max over m != n <= N of |int S_m S_n w| / sqrt(h_m h_n), plus the
// diagonal's agreement with NormTable folded into the same report.
ResidualReport gram_check(int N, const Params& p, const PrecisionContext& ctx);

// N-point Gauss rule from the Jacobi matrix (zero diagonal, off-diagonal
// sqrt(beta_n)); nodes symmetrized in +- pairs, weights by the
// Christoffel sum of squared orthonormal polynomials.
std::pair<std::vector<Real>, std::vector<Real>> gauss_rule(int N, const Params& p,
                                                           const std::vector<Real>& beta);

// Zeros of S_n = eigenvalues of the n x n Jacobi matrix, ascending.
std::vector<Real> zeros(int n, const Params& p, const std::vector<Real>& beta);

}  // namespace freud::poly
