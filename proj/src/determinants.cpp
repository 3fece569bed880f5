#include "freud/determinants.hpp"

#include "freud/central_diff.hpp"
#include "freud/eigen_support.hpp"
#include "freud/moments.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

namespace freud::dets {

namespace {

Matrix hankel_matrix(int n, const Params& p, int lambda_shift) {
    Matrix M(n, n);
    // Entry (j,k) depends on j+k only; compute each shifted mu_0 once.
    std::vector<Real> mu(static_cast<size_t>(2 * n - 1));
    for (int s = 0; s <= 2 * n - 2; ++s)
        mu[static_cast<size_t>(s)] = moments::mu0({p.t, p.lambda + lambda_shift + s});
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) M(j, k) = mu[static_cast<size_t>(j + k)];
    return M;
}

}  // namespace

TauValue tau(int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("tau: n must be >= 0");
    check_params(p);
    if (n == 0) return {0, p, Real(1), Real(0)};
    Matrix M = hankel_matrix(n, p, 0);
    Eigen::FullPivLU<Matrix> lu(M);
    Real log_value(0);
    for (int i = 0; i < n; ++i) log_value += log(abs(lu.matrixLU()(i, i)));
    return {n, p, lu.determinant(), log_value};
}

std::vector<Real> log_tau_table(int N, const Params& p, int lambda_shift) {
    check_params(p);
    std::vector<Real> out(static_cast<size_t>(N) + 1, Real(0));
    if (N == 0) return out;
    Matrix M = hankel_matrix(N, p, lambda_shift);
    Eigen::LLT<Matrix> llt(M);
    if (llt.info() != Eigen::Success)
        throw PrecisionError("log_tau_table: Cholesky breakdown, moment Hankel lost positivity");
    Matrix L = llt.matrixL();
    Real acc(0);
    for (int m = 1; m <= N; ++m) {
        acc += 2 * log(L(m - 1, m - 1));
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

HnValue hn(int n, const Params& p, const PrecisionContext& ctx) {
    if (n < 0) throw std::invalid_argument("hn: n must be >= 0");
    if (n == 0) return {0, p, Real(0)};
    Real v = central_diff(
        [&](const Real& t) { return log_tau_table(n, {t, p.lambda}).back(); }, p.t, 1, ctx);
    return {n, p, v};
}

Real sigma_residual(int n, const Params& p, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("sigma_residual: n must be >= 1");
    auto d = derivatives_upto(
        [&](const Real& t) { return log_tau_table(n, {t, p.lambda}).back(); }, p.t, 3, ctx);
    const Real &H = d[1], &H1 = d[2], &H2 = d[3];
    Real res = H2 * H2 - (p.t * H1 - H) * (p.t * H1 - H) / 4 +
               H1 * (2 * H1 - n) * (2 * H1 - n - p.lambda);
    return abs(res);
}

Real log_tau_wronskian(int n, const Params& p, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("log_tau_wronskian: n must be >= 1");
    auto d = derivatives_upto([&](const Real& t) { return moments::mu0({t, p.lambda}); }, p.t,
                              2 * n - 2, ctx);
    Matrix W(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) W(j, k) = d[static_cast<size_t>(j + k)];
    Eigen::FullPivLU<Matrix> lu(W);
    Real log_value(0);
    for (int i = 0; i < n; ++i) log_value += log(abs(lu.matrixLU()(i, i)));
    return log_value;
}

Real hn_asymptotic(int n, const Params& p) {
    return n * p.t / 2 + n * p.lambda / p.t +
           2 * n * p.lambda * (n - p.lambda) / (p.t * p.t * p.t);
}

}  // namespace freud::dets
