#pragma once

#include "freud/precision.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace freud {

// tanh-sinh integration over (a, b). The explicit min_complement matters:
// the library default is derived from min_value, which overflows (2-x)/x
// for this backend. 1e-2000 leaves endpoint mass far below any tolerance
// used here while keeping the transform finite.
template <typename F>
Real integrate(F&& f, const Real& a, const Real& b, const PrecisionContext& ctx) {
    boost::math::quadrature::tanh_sinh<Real> integrator(15, Real("1e-2000"));
    Real tol = pow(Real(10), -(ctx.digits + 5));
    return integrator.integrate(f, a, b, tol);
}

}  // namespace freud
