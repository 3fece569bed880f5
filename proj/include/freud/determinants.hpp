#pragma once

#include "freud/params.hpp"
#include "freud/precision.hpp"

#include <vector>

namespace freud::dets {

// tau_n = det [ mu_0(t; lambda+j+k) ]_(j,k=0..n-1); tau_0 = 1. Positive for
// lambda > -1, and super-exponentially large in n, hence the log twin.
struct TauValue {
    int n;
    Params params;
    Real value;
    Real log_value;
};

// LU with full pivoting.
TauValue tau(int n, const Params& p);

// log tau_0 .. log tau_N in one Cholesky pass (leading principal minors);
// lambda_shift offsets the moment family.
std::vector<Real> log_tau_table(int N, const Params& p, int lambda_shift = 0);

struct HnValue {
    int n;
    Params params;
    Real value;
};

// H_n = d/dt log tau_n by central differences.
HnValue hn(int n, const Params& p, const PrecisionContext& ctx);

// |(H_n'')^2 - (1/4)(t H_n' - H_n)^2 + H_n'(2H_n' - n)(2H_n' - n - lambda)|.
Real sigma_residual(int n, const Params& p, const PrecisionContext& ctx);

// Oracle: tau_n as the Wronskian of t -> mu_0(t;lambda), derivatives taken
// numerically (orders up to 2n-2), no lambda shifting anywhere.
Real log_tau_wronskian(int n, const Params& p, const PrecisionContext& ctx);

// Large-t form H_n ~ n t/2 + n lambda/t + 2 n lambda (n - lambda)/t^3.
Real hn_asymptotic(int n, const Params& p);

}  // namespace freud::dets
