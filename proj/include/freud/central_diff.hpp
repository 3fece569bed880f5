#pragma once

#include "freud/precision.hpp"

#include <cassert>
#include <vector>

namespace freud {

// 5-point 4th-order central differences, exact (to roundoff) on
// polynomials of degree <= 4. order: 1 or 2.
template <typename F>
Real central_diff(F&& f, const Real& x, int order, const PrecisionContext& ctx) {
    const Real& h = ctx.deriv_step;
    if (order == 1) {
        return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
    }
    if (order == 2) {
        return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
               (12 * h * h);
    }
    throw std::invalid_argument("central_diff: order must be 1 or 2");
}

// Fornberg finite-difference weights: for derivative orders 0..m at z over
// the nodes xs, returns w[k][j] with f^(k)(z) ~ sum_j w[k][j] f(xs[j]).
inline std::vector<std::vector<Real>> fd_weights(const Real& z, const std::vector<Real>& xs,
                                                 int m) {
    const int nd = static_cast<int>(xs.size()) - 1;
    assert(nd >= m);
    std::vector<std::vector<std::vector<Real>>> d(
        static_cast<size_t>(m) + 1,
        std::vector<std::vector<Real>>(xs.size(), std::vector<Real>(xs.size(), Real(0))));
    d[0][0][0] = 1;
    Real c1(1);
    for (int n = 1; n <= nd; ++n) {
        Real c2(1);
        for (int v = 0; v < n; ++v) {
            Real c3 = xs[n] - xs[v];
            c2 *= c3;
            for (int k = 0; k <= std::min(n, m); ++k) {
                Real prev = (k > 0) ? d[k - 1][n - 1][v] : Real(0);
                d[k][n][v] = ((xs[n] - z) * d[k][n - 1][v] - k * prev) / c3;
            }
        }
        for (int k = 0; k <= std::min(n, m); ++k) {
            Real prev = (k > 0) ? d[k - 1][n - 1][n - 1] : Real(0);
            d[k][n][n] = c1 / c2 * (k * prev - (xs[n - 1] - z) * d[k][n - 1][n - 1]);
        }
        c1 = c2;
    }
    std::vector<std::vector<Real>> w(static_cast<size_t>(m) + 1,
                                     std::vector<Real>(xs.size()));
    for (int k = 0; k <= m; ++k)
        for (size_t j = 0; j < xs.size(); ++j) w[k][j] = d[k][nd][j];
    return w;
}

// f^(0..M)(x) from one symmetric stencil of 2(M+2)+1 nodes. Step chosen to
// balance h^(stencil order) truncation against eps_work/h^M roundoff.
template <typename F>
std::vector<Real> derivatives_upto(F&& f, const Real& x, int M, const PrecisionContext& ctx) {
    const int K = M + 2;
    const Real eps_work = pow(Real(10), -ctx.working_digits());
    const Real h = pow(eps_work, Real(1) / (2 * M + 9));
    std::vector<Real> xs;
    xs.reserve(2 * K + 1);
    for (int j = -K; j <= K; ++j) xs.push_back(x + j * h);
    auto w = fd_weights(x, xs, M);
    std::vector<Real> fv(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) fv[j] = f(xs[j]);
    std::vector<Real> out(static_cast<size_t>(M) + 1, Real(0));
    for (int k = 0; k <= M; ++k)
        for (size_t j = 0; j < xs.size(); ++j) out[static_cast<size_t>(k)] += w[k][j] * fv[j];
    return out;
}

}  // namespace freud
