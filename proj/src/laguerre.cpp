#include "freud/laguerre.hpp"

#include "freud/central_diff.hpp"
#include "freud/eigen_support.hpp"
#include "freud/moments.hpp"
#include "freud/orthogonal.hpp"
#include "freud/recurrence.hpp"
#include "freud/special_functions.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <string>

namespace freud::lag {

LaguerrePolySet laguerre_recurrence(int N, const Real& t, const Real& lambda) {
    if (N < 1) throw std::invalid_argument("laguerre_recurrence: N must be >= 1");
    Params p{t, lambda};
    check_params(p);
    Matrix H(N + 1, N + 1);
    std::vector<Real> m(static_cast<size_t>(2 * N) + 1);
    for (int k = 0; k <= 2 * N; ++k) m[static_cast<size_t>(k)] = moments::half_line_moment(k, p);
    for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) H(j, k) = m[static_cast<size_t>(j + k)];
    Eigen::LLT<Matrix> llt(H);
    if (llt.info() != Eigen::Success)
        throw PrecisionError("laguerre_recurrence: Cholesky breakdown on half-line moments");
    Matrix L = llt.matrixL();
    // Monic coefficient rows: C = diag(L_nn) L^(-1), so C H C^T = diag(h_n).
    Matrix C = L.triangularView<Eigen::Lower>().solve(Matrix::Identity(N + 1, N + 1));
    for (int n = 0; n <= N; ++n) C.row(n) *= L(n, n);

    LaguerrePolySet set;
    set.params = p;
    set.N = N;
    set.h.resize(static_cast<size_t>(N) + 1);
    set.L.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        std::vector<Real> coeffs(static_cast<size_t>(n) + 1);
        for (int j = 0; j < n; ++j) coeffs[static_cast<size_t>(j)] = C(n, j);
        coeffs[static_cast<size_t>(n)] = 1;  // monic exactly, not L_nn/L_nn
        set.L.emplace_back(std::move(coeffs));
        set.h[static_cast<size_t>(n)] = L(n, n) * L(n, n);
    }
    set.alpha.resize(static_cast<size_t>(N));
    set.beta.resize(static_cast<size_t>(N), Real(0));
    for (int n = 0; n < N; ++n) {
        // x L_n = L_(n+1) + alpha_n L_n + ... at the x^n coefficient:
        // alpha_n = [x^(n-1)] L_n - [x^n] L_(n+1).
        Real sub_n = n >= 1 ? set.L[static_cast<size_t>(n)][static_cast<size_t>(n - 1)] : Real(0);
        set.alpha[static_cast<size_t>(n)] =
            sub_n - set.L[static_cast<size_t>(n + 1)][static_cast<size_t>(n)];
        if (n >= 1)
            set.beta[static_cast<size_t>(n)] =
                set.h[static_cast<size_t>(n)] / set.h[static_cast<size_t>(n - 1)];
    }
    return set;
}

std::vector<DPoly> kernel_polys(const LaguerrePolySet& set) {
    std::vector<DPoly> Q;
    Q.reserve(static_cast<size_t>(set.N));
    for (int n = 0; n < set.N; ++n) {
        Real Ln0 = set.L[static_cast<size_t>(n)].eval(Real(0));
        if (Ln0 == 0)
            throw std::domain_error("kernel_polys: L_n(0) = 0, kernel undefined at this (t,lambda)");
        Real r = set.L[static_cast<size_t>(n + 1)].eval(Real(0)) / Ln0;
        DPoly num = set.L[static_cast<size_t>(n + 1)] - r * set.L[static_cast<size_t>(n)];
        Real rem;
        Q.push_back(num.div_x(rem));  // rem is the rounded-to-zero constant
    }
    return Q;
}

ResidualReport symmetrization_check(int N, const Params& p, const PrecisionContext& ctx) {
    ResidualReport rep;
    rep.name = "symmetrization";
    std::vector<Real> beta = rec::beta_hankel_table(std::max(1, N), p);
    std::vector<poly::Poly> S = poly::generate(N, p, beta);
    int M = N / 2 + 1;
    LaguerrePolySet set = laguerre_recurrence(M, p.t, p.lambda);
    std::vector<DPoly> Q = kernel_polys(set);
    for (int m = 0; 2 * m <= N; ++m) {
        poly::Poly diff = S[static_cast<size_t>(2 * m)] -
                          set.L[static_cast<size_t>(m)].substitute_x2();
        rep.absorb(diff.max_abs_coeff() /
                       std::max(Real(1), S[static_cast<size_t>(2 * m)].max_abs_coeff()),
                   "S_" + std::to_string(2 * m));
    }
    for (int m = 0; 2 * m + 1 <= N; ++m) {
        poly::Poly diff = S[static_cast<size_t>(2 * m + 1)] -
                          Q[static_cast<size_t>(m)].x_times_substitute_x2();
        rep.absorb(diff.max_abs_coeff() /
                       std::max(Real(1), S[static_cast<size_t>(2 * m + 1)].max_abs_coeff()),
                   "S_" + std::to_string(2 * m + 1));
    }
    rep.finish(pow(Real(10), -(ctx.digits / 2)));
    return rep;
}

Real alpha0_log_derivative(const Params& p, const PrecisionContext& ctx) {
    check_params(p);
    Real z = p.t / 2;
    auto log_psi = [&](const Real& zz) {
        return log(sf::pcf_d(-p.lambda - 1, -sqrt(Real(2)) * zz)) + zz * zz / 2;
    };
    Real q0 = -2 * z + central_diff(log_psi, z, 1, ctx);
    return q0 / 2 + p.t / 2;
}

std::pair<Real, Real> alpha1_beta1_log_derivative(const Params& p) {
    check_params(p);
    // psi(z) is proportional to phi(2z) (the first moment as a function of
    // t = 2z), so the Wronskian ratio closes in Phi = (log phi)' and its
    // derivatives: q_1 = -t + 2 Phi + 2 Phi''/Phi',
    // dq_1/dz = -2 + 4 Phi' + 4 (Phi''' Phi' - Phi''^2)/Phi'^2.
    auto d = sf::phi_derivs(p);
    const Real &phi = d[0], &p1 = d[1], &p2 = d[2], &p3 = d[3];
    Real z = p.t / 2;
    Real q1 = -p.t + 2 * phi + 2 * p2 / p1;
    Real dq1 = -2 + 4 * p1 + 4 * (p3 * p1 - p2 * p2) / (p1 * p1);
    Real alpha1 = q1 / 2 + p.t / 2;
    Real beta1 = -dq1 / 8 - q1 * q1 / 8 - z * q1 / 4 + p.lambda / 4 + Real(1) / 2;
    return {alpha1, beta1};
}

}  // namespace freud::lag
