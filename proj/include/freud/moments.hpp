#pragma once

#include "freud/params.hpp"
#include "freud/precision.hpp"

#include <vector>

namespace freud::moments {

// First moment of the weight: mu_0(t; lambda) = int_0^inf y^lambda e^(-y^2 + t y) dy
//   = gamma(lambda+1) 2^(-(lambda+1)/2) e^(t^2/8) D_(-lambda-1)(-t/sqrt2).
Real mu0(const Params& p);

// k-th moment of |x|^(2*lambda+1) e^(-x^4+t*x^2) over R: 0 for odd k,
// mu0(t; lambda + k/2) for even k.
Real moment(int k, const Params& p);

// Same moment by direct tanh-sinh quadrature after y = x^2.
Real moment_oracle(int k, const Params& p, const PrecisionContext& ctx);

// Half-line moments m_k = int_0^inf x^(k+lambda) e^(-x^2+t x) dx of the
// semi-classical Laguerre weight; m_k(t; lambda) = mu0(t; lambda + k).
Real half_line_moment(int k, const Params& p);

struct MomentSequence {
    Params params;
    std::vector<Real> mu;  // mu_0 .. mu_(2N), odd entries exactly 0
    enum class Method { closed_form, quadrature } method;
};
MomentSequence moment_sequence(int N, const Params& p, MomentSequence::Method method,
                               const PrecisionContext& ctx);

}  // namespace freud::moments
