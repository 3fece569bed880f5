#include "freud/recurrence.hpp"

#include "freud/central_diff.hpp"
#include "freud/determinants.hpp"
#include "freud/eigen_support.hpp"
#include "freud/moments.hpp"
#include "freud/special_functions.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace freud::rec {

namespace {

// Cholesky of the full-moment Gram matrix [mu_(j+k)]. Lower factor
// diagonal carries the norms: h_n = L_nn^2.
Vector hankel_chol_diag(int N, const Params& p) {
    check_params(p);
    Matrix M(N + 1, N + 1);
    std::vector<Real> mu(static_cast<size_t>(2 * N) + 1);
    for (int s = 0; s <= 2 * N; ++s) mu[static_cast<size_t>(s)] = moments::moment(s, p);
    for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) M(j, k) = mu[static_cast<size_t>(j + k)];
    Eigen::LLT<Matrix> llt(M);
    if (llt.info() != Eigen::Success)
        throw PrecisionError("beta_hankel: Cholesky breakdown, raise the working precision");
    return Matrix(llt.matrixL()).diagonal();
}

Real lambda_family_log_ratio(int n, const Real& t, const Real& lambda) {
    // Lambda_n(t): log of the tau ratio whose t-derivative is beta_n.
    if (n % 2 == 0) {
        int m = n / 2;
        return dets::log_tau_table(m, {t, lambda}, 1)[static_cast<size_t>(m)] -
               dets::log_tau_table(m, {t, lambda}, 0)[static_cast<size_t>(m)];
    }
    int m = (n - 1) / 2;
    return dets::log_tau_table(m + 1, {t, lambda}, 0)[static_cast<size_t>(m + 1)] -
           dets::log_tau_table(m, {t, lambda}, 1)[static_cast<size_t>(m)];
}

}  // namespace

std::vector<Real> beta_hankel_table(int N, const Params& p) {
    Vector d = hankel_chol_diag(N, p);
    std::vector<Real> beta(static_cast<size_t>(N) + 1, Real(0));
    for (int n = 1; n <= N; ++n) {
        Real r = d(n) / d(n - 1);
        beta[static_cast<size_t>(n)] = r * r;
    }
    return beta;
}

Real beta_hankel(int n, const Params& p) {
    if (n < 1) throw std::invalid_argument("beta_hankel: n must be >= 1");
    return beta_hankel_table(n, p)[static_cast<size_t>(n)];
}

std::vector<Real> norm_table_hankel(int N, const Params& p) {
    Vector d = hankel_chol_diag(N, p);
    std::vector<Real> h(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) h[static_cast<size_t>(n)] = d(n) * d(n);
    return h;
}

std::vector<Real> beta_tau_table(int N, const Params& p, const PrecisionContext& ctx) {
    check_params(p);
    const Real& h = ctx.deriv_step;
    const int Mmax = N / 2 + 1;
    // One pair of Cholesky log-tau tables per stencil node, all beta_n
    // assembled from the same four fills.
    std::array<Real, 4> nodes = {p.t - 2 * h, p.t - h, p.t + h, p.t + 2 * h};
    std::array<Real, 4> w = {Real(1) / (12 * h), Real(-8) / (12 * h), Real(8) / (12 * h),
                             Real(-1) / (12 * h)};
    std::array<std::vector<Real>, 4> lt0, lt1;
    for (size_t s = 0; s < 4; ++s) {
        lt0[s] = dets::log_tau_table(Mmax, {nodes[s], p.lambda}, 0);
        lt1[s] = dets::log_tau_table(Mmax, {nodes[s], p.lambda}, 1);
    }
    std::vector<Real> beta(static_cast<size_t>(N) + 1, Real(0));
    for (int n = 1; n <= N; ++n) {
        Real acc(0);
        if (n % 2 == 0) {
            size_t m = static_cast<size_t>(n / 2);
            for (size_t s = 0; s < 4; ++s) acc += w[s] * (lt1[s][m] - lt0[s][m]);
        } else {
            size_t m = static_cast<size_t>((n - 1) / 2);
            for (size_t s = 0; s < 4; ++s) acc += w[s] * (lt0[s][m + 1] - lt1[s][m]);
        }
        beta[static_cast<size_t>(n)] = acc;
    }
    return beta;
}

Real beta_tau(int n, const Params& p, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("beta_tau: n must be >= 1");
    return beta_tau_table(n, p, ctx)[static_cast<size_t>(n)];
}

int agreement_digits(const Real& a, const Real& b, const PrecisionContext& ctx) {
    Real scale = std::max(abs(a), abs(b));
    if (scale == 0) return ctx.digits;
    Real rel = abs(a - b) / scale;
    if (rel == 0) return ctx.digits;
    double lg = -static_cast<double>(log10(rel));
    int est = static_cast<int>(std::floor(lg));
    return std::max(0, std::min(ctx.digits, est));
}

BetaTable beta_dp1(int N, const Params& p, const PrecisionContext& ctx) {
    if (N < 1) throw std::invalid_argument("beta_dp1: N must be >= 1");
    check_params(p);
    BetaTable tbl;
    tbl.params = p;
    tbl.N = N;
    tbl.method = "dp1-iteration";
    tbl.beta.assign(static_cast<size_t>(N) + 1, Real(0));
    tbl.est_digits.assign(static_cast<size_t>(N) + 1, ctx.digits);
    std::vector<Real> ref = beta_hankel_table(N, p);
    tbl.beta[1] = sf::big_phi(p);
    if (N >= 1) tbl.est_digits[1] = agreement_digits(tbl.beta[1], ref[1], ctx);
    for (int n = 1; n < N; ++n) {
        Real forcing = Real(2 * n + (2 * p.lambda + 1) * (1 - (n % 2 == 0 ? 1 : -1)));
        Real bn = tbl.beta[static_cast<size_t>(n)];
        if (bn <= 0) {
            tbl.truncated_at = n;
            tbl.truncation_reason = "beta_" + std::to_string(n) + " <= 0: iteration lost positivity";
            tbl.beta.resize(static_cast<size_t>(n) + 1);
            tbl.est_digits.resize(static_cast<size_t>(n) + 1);
            tbl.N = n;
            return tbl;
        }
        Real next = p.t / 2 + forcing / (8 * bn) - bn - tbl.beta[static_cast<size_t>(n - 1)];
        tbl.beta[static_cast<size_t>(n + 1)] = next;
        int est = agreement_digits(next, ref[static_cast<size_t>(n + 1)], ctx);
        tbl.est_digits[static_cast<size_t>(n + 1)] = est;
        if (next <= 0 || est < 5) {
            tbl.truncated_at = n + 1;
            tbl.truncation_reason = next <= 0
                                        ? "beta_" + std::to_string(n + 1) + " <= 0: iteration lost positivity"
                                        : "beta_" + std::to_string(n + 1) +
                                              ": accuracy estimate fell below 5 digits";
            tbl.beta.resize(static_cast<size_t>(n + 1) + 1);
            tbl.est_digits.resize(static_cast<size_t>(n + 1) + 1);
            tbl.N = n + 1;
            return tbl;
        }
    }
    return tbl;
}

Real beta_closed(int n, const Params& p) {
    check_params(p);
    Real phi = sf::big_phi(p);
    const Real &t = p.t, &l = p.lambda;
    // Delta = 2 Phi^2 - t Phi - (lambda+1) = -2 Phi beta_2 < 0, never zero.
    Real delta = 2 * phi * phi - t * phi - (l + 1);
    switch (n) {
        case 1:
            return phi;
        case 2:
            if (delta == 0) throw std::domain_error("beta_closed: vanishing denominator");
            return -delta / (2 * phi);
        case 3:
            if (delta == 0) throw std::domain_error("beta_closed: vanishing denominator");
            return -phi / delta - (l + 1) / (2 * phi);
        case 4: {
            Real denom = 2 * (l + 2) * phi * phi - (l + 1) * t * phi - (l + 1) * (l + 1);
            if (delta == 0 || denom == 0)
                throw std::domain_error("beta_closed: vanishing denominator");
            return t / (2 * (l + 2)) + phi / delta +
                   ((l + 1) * (t * t + 2 * l + 4) * phi + (l + 1) * (l + 1) * t) /
                       (2 * (l + 2) * denom);
        }
        default:
            throw std::invalid_argument("beta_closed: n must be in 1..4");
    }
}

Real dp1_residual(int n, const Params& p, const std::vector<Real>& beta) {
    if (n < 1 || beta.size() < static_cast<size_t>(n) + 2)
        throw std::invalid_argument("dp1_residual: table too short");
    Real forcing = Real(2 * n + (2 * p.lambda + 1) * (1 - (n % 2 == 0 ? 1 : -1)));
    return abs(beta[static_cast<size_t>(n + 1)] + beta[static_cast<size_t>(n)] +
               beta[static_cast<size_t>(n - 1)] - p.t / 2 -
               forcing / (8 * beta[static_cast<size_t>(n)]));
}

Real pIV_residual(int n, const Params& p, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("pIV_residual: n must be >= 1");
    check_params(p);
    auto d = derivatives_upto(
        [&](const Real& t) { return lambda_family_log_ratio(n, t, p.lambda); }, p.t, 3, ctx);
    const Real &b = d[1], &b1 = d[2], &b2 = d[3];
    Real A, B;
    if (n % 2 == 0) {
        int m = n / 2;
        A = -2 * p.lambda - m - 1;
        B = Real(-2 * m * m);
    } else {
        int m = (n - 1) / 2;
        A = p.lambda - m;
        Real s = p.lambda + m + 1;
        B = -2 * s * s;
    }
    Real rhs = b1 * b1 / (2 * b) + Real(3) / 2 * b * b * b - p.t * b * b +
               (p.t * p.t / 8 - A / 2) * b + B / (16 * b);
    return abs(b2 - rhs);
}

std::pair<Real, Real> backlund_residual(int n, const Params& p, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("backlund_residual: n must be >= 1");
    std::vector<Real> ref = beta_hankel_table(n + 1, p);
    Real bn = ref[static_cast<size_t>(n)];
    Real dbn = central_diff(
        [&](const Real& t) {
            return beta_hankel_table(n, {t, p.lambda})[static_cast<size_t>(n)];
        },
        p.t, 1, ctx);
    Real gamma_n = Real(n) / 2 + (2 * p.lambda + 1) * (1 - (n % 2 == 0 ? 1 : -1)) / 4;
    Real up = dbn / (2 * bn) - bn / 2 + p.t / 4 + gamma_n / (4 * bn);
    Real down = -dbn / (2 * bn) - bn / 2 + p.t / 4 + gamma_n / (4 * bn);
    Real res_up = abs(ref[static_cast<size_t>(n + 1)] - up);
    Real res_down =
        n >= 2 ? abs(ref[static_cast<size_t>(n - 1)] - down) : abs(Real(0) - down);
    return {res_up, res_down};
}

Real beta_asymptotic(int n, const Params& p) {
    const Real &t = p.t, &l = p.lambda;
    Real t3 = t * t * t;
    if (n % 2 == 0) {
        int m = n / 2;
        return Real(m) / t - 2 * m * (2 * l - m + 1) / t3;
    }
    int m = (n - 1) / 2;
    return t / 2 + (l - m) / t - 2 * (l * l - 4 * l * m + m * m - l - m) / t3;
}

Real string_reduction_residual(int n, const Real& t) {
    if (n < 1) throw std::invalid_argument("string_reduction_residual: n must be >= 1");
    Params p{t, Real(-1) / 2};
    std::vector<Real> beta = beta_hankel_table(n + 1, p);
    Real qm = 2 * beta[static_cast<size_t>(n - 1)];
    Real q = 2 * beta[static_cast<size_t>(n)];
    Real qp = 2 * beta[static_cast<size_t>(n + 1)];
    return abs(q * (qm + q + qp) - t * q - n);
}

}  // namespace freud::rec
