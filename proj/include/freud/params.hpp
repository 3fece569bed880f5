#pragma once

#include "freud/precision.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace freud {

// Weight parameters for |x|^(2*lambda+1) * exp(-x^4 + t*x^2).
struct Params {
    Real t;
    Real lambda;
};

inline void check_params(const Params& p) {
    if (!(p.lambda > -1)) throw std::domain_error("Params: lambda must be > -1");
}

// Named identity, where it was evaluated, worst residual, verdict.
struct ResidualReport {
    std::string name;
    std::vector<std::string> grid;
    Real max_residual{0};
    Real tolerance{0};
    bool pass{false};

    void absorb(const Real& r, const std::string& where) {
        Real a = abs(r);
        if (a > max_residual) max_residual = a;
        grid.push_back(where);
    }
    void finish(const Real& tol) {
        tolerance = tol;
        pass = (max_residual <= tol);
    }
};

}  // namespace freud
