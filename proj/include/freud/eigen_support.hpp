#pragma once

#include "freud/precision.hpp"

#include <Eigen/Core>

#include <limits>

// NumTraits for the runtime-precision scalar. boost ships one but it lacks
// infinity()/quiet_NaN(), which the tridiagonal eigensolver needs.
namespace Eigen {

template <>
struct NumTraits<freud::Real> : GenericNumTraits<freud::Real> {
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 30,
        MulCost = 40
    };
    static freud::Real epsilon() { return std::numeric_limits<freud::Real>::epsilon(); }
    static freud::Real dummy_precision() { return epsilon() * 1000; }
    static freud::Real highest() { return std::numeric_limits<freud::Real>::max(); }
    static freud::Real lowest() { return -std::numeric_limits<freud::Real>::max(); }
    static freud::Real infinity() { return std::numeric_limits<freud::Real>::infinity(); }
    static freud::Real quiet_NaN() { return std::numeric_limits<freud::Real>::quiet_NaN(); }
    static int digits10() { return static_cast<int>(freud::Real::default_precision()); }
};

}  // namespace Eigen

namespace freud {

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

}  // namespace freud
