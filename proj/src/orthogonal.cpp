#include "freud/orthogonal.hpp"

#include "freud/eigen_support.hpp"
#include "freud/moments.hpp"
#include "freud/recurrence.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace freud::poly {

std::vector<Poly> generate(int N, const Params& p, const std::vector<Real>& beta) {
    check_params(p);
    if (beta.size() < static_cast<size_t>(std::max(0, N)))
        throw std::invalid_argument("generate: beta table too short");
    std::vector<Poly> S;
    S.reserve(static_cast<size_t>(N) + 1);
    S.push_back(Poly::one());
    if (N >= 1) S.push_back(Poly::monomial(1));
    for (int n = 1; n < N; ++n)
        S.push_back(S[static_cast<size_t>(n)].mul_x() -
                    beta[static_cast<size_t>(n)] * S[static_cast<size_t>(n - 1)]);
    return S;
}

Real eval(const Poly& s, const Real& x) { return s.eval(x); }

Poly derivative(const Poly& s) { return s.derivative(); }

NormTable norms(int N, const Params& p, const std::vector<Real>& beta) {
    if (beta.size() < static_cast<size_t>(N) + 1)
        throw std::invalid_argument("norms: beta table too short");
    NormTable t;
    t.params = p;
    t.h.resize(static_cast<size_t>(N) + 1);
    t.h[0] = moments::mu0(p);
    for (int n = 1; n <= N; ++n)
        t.h[static_cast<size_t>(n)] = beta[static_cast<size_t>(n)] * t.h[static_cast<size_t>(n - 1)];
    return t;
}

Real integrate_poly(const Poly& q, const Params& p) {
    if (q.parity() == 1) return Real(0);
    Real acc(0);
    for (size_t j = 0; j < q.terms(); ++j)
        acc += q.c(j) * moments::moment(static_cast<int>(2 * j), p);
    return acc;
}

ResidualReport gram_check(int N, const Params& p, const PrecisionContext& ctx) {
    ResidualReport rep;
    rep.name = "gram-orthogonality";
    std::vector<Real> beta = rec::beta_hankel_table(std::max(1, N), p);
    std::vector<Poly> S = generate(N, p, beta);
    NormTable h = norms(N, p, beta);
    for (int m = 0; m <= N; ++m) {
        for (int n = m; n <= N; ++n) {
            if ((m + n) % 2 == 1) continue;  // odd product integrates to 0 exactly
            Real g = integrate_poly(S[static_cast<size_t>(m)] * S[static_cast<size_t>(n)], p);
            Real scale = sqrt(h.h[static_cast<size_t>(m)] * h.h[static_cast<size_t>(n)]);
            Real r = (m == n) ? (g - h.h[static_cast<size_t>(m)]) / scale : g / scale;
            rep.absorb(r, "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")");
        }
    }
    rep.finish(pow(Real(10), -(ctx.digits - 10)));
    return rep;
}

namespace {

std::vector<Real> jacobi_eigenvalues(int N, const std::vector<Real>& beta) {
    Vector diag = Vector::Zero(N);
    Vector sub(N - 1 >= 0 ? N - 1 : 0);
    for (int k = 1; k < N; ++k) sub(k - 1) = sqrt(beta[static_cast<size_t>(k)]);
    Eigen::SelfAdjointEigenSolver<Matrix> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw PrecisionError("jacobi_eigenvalues: tridiagonal QR did not converge");
    std::vector<Real> x(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) x[static_cast<size_t>(i)] = es.eigenvalues()(i);
    std::sort(x.begin(), x.end());
    // Spectrum is symmetric about 0; average the +- pairs so the
    // symmetry holds exactly in the output.
    for (int i = 0; i < N / 2; ++i) {
        Real v = (x[static_cast<size_t>(i)] - x[static_cast<size_t>(N - 1 - i)]) / 2;
        x[static_cast<size_t>(i)] = v;
        x[static_cast<size_t>(N - 1 - i)] = -v;
    }
    if (N % 2 == 1) x[static_cast<size_t>(N / 2)] = 0;
    return x;
}

}  // namespace

std::pair<std::vector<Real>, std::vector<Real>> gauss_rule(int N, const Params& p,
                                                           const std::vector<Real>& beta) {
    if (N < 1) throw std::invalid_argument("gauss_rule: N must be >= 1");
    if (beta.size() < static_cast<size_t>(N) + 1)
        throw std::invalid_argument("gauss_rule: beta table too short");
    std::vector<Real> x = jacobi_eigenvalues(N, beta);
    Real mu_0 = moments::mu0(p);
    // Christoffel weights: w_i = 1 / sum_(k<N) phat_k(x_i)^2 with the
    // orthonormal phat; equivalent to the eigenvector formula.
    std::vector<Real> w(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        const Real& xi = x[static_cast<size_t>(i)];
        Real pk_prev(0), pk = 1 / sqrt(mu_0), sum = pk * pk;
        for (int k = 0; k + 1 < N; ++k) {
            // phat_(k+1) = (x phat_k - sqrt(beta_k) phat_(k-1)) / sqrt(beta_(k+1))
            Real num = xi * pk - (k >= 1 ? sqrt(beta[static_cast<size_t>(k)]) * pk_prev : Real(0));
            Real pk_next = num / sqrt(beta[static_cast<size_t>(k + 1)]);
            pk_prev = pk;
            pk = pk_next;
            sum += pk * pk;
        }
        w[static_cast<size_t>(i)] = 1 / sum;
    }
    return {x, w};
}

std::vector<Real> zeros(int n, const Params& p, const std::vector<Real>& beta) {
    if (n < 1) throw std::invalid_argument("zeros: n must be >= 1");
    if (beta.size() < static_cast<size_t>(n))
        throw std::invalid_argument("zeros: beta table too short");
    (void)p;
    return jacobi_eigenvalues(n, beta);
}

}  // namespace freud::poly
