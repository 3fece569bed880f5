#pragma once

#include "freud/params.hpp"
#include "freud/precision.hpp"

#include <vector>

namespace freud::verify {

struct Options {
    Params p;
    int n_max = 6;
    int tolerance_exponent = -12;  // pass iff max residual <= 10^exponent
    PrecisionContext ctx = PrecisionContext::make();
};

// Every identity the library claims, evaluated as a residual at (t, lambda)
// for n <= n_max, each against the uniform tolerance. Includes the
// convention cross-checks (ladder coefficients vs the integral oracle,
// recurrence coefficients across all routes, Laguerre log-derivative
// route), so a sign or offset convention drift fails the suite.
std::vector<ResidualReport> run_suite(const Options& opt);

// True iff every report passed.
bool all_pass(const std::vector<ResidualReport>& reports);

}  // namespace freud::verify
