#include "freud/verify.hpp"

#include "freud/determinants.hpp"
#include "freud/laguerre.hpp"
#include "freud/orthogonal.hpp"
#include "freud/recurrence.hpp"
#include "freud/special_functions.hpp"
#include "freud/structure.hpp"

#include <algorithm>
#include <string>

namespace freud::verify {

namespace {

std::string at_n(int n) { return "n=" + std::to_string(n); }

Real coeff_gap(const poly::Poly& a, const poly::Poly& b) {
    poly::Poly d = a - b;
    Real scale = std::max(Real(1), std::max(a.max_abs_coeff(), b.max_abs_coeff()));
    return d.max_abs_coeff() / scale;
}

Real rel_gap(const Real& a, const Real& b) {
    Real scale = std::max(Real(1), std::max(abs(a), abs(b)));
    return abs(a - b) / scale;
}

}  // namespace

std::vector<ResidualReport> run_suite(const Options& opt) {
    check_params(opt.p);
    const Params& p = opt.p;
    const PrecisionContext& ctx = opt.ctx;
    const int N = std::max(2, opt.n_max);
    const Real tol = pow(Real(10), opt.tolerance_exponent);

    std::vector<Real> beta = rec::beta_hankel_table(N + 2, p);
    std::vector<ResidualReport> out;

    {
        ResidualReport r;
        r.name = "phi-riccati";
        r.absorb(sf::riccati_residual(p, ctx), "t=" + p.t.str(4));
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "string-equation";
        for (int n = 1; n <= N; ++n) r.absorb(rec::dp1_residual(n, p, beta), at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "painleve-iv";
        for (int n = 1; n <= N; ++n) r.absorb(rec::pIV_residual(n, p, ctx), at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "sigma-form";
        for (int n = 1; n <= N; ++n) r.absorb(dets::sigma_residual(n, p, ctx), at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "backlund";
        for (int n = 1; n <= N; ++n) {
            auto [up, down] = rec::backlund_residual(n, p, ctx);
            r.absorb(up, at_n(n) + "+");
            r.absorb(down, at_n(n) + "-");
        }
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "ladder-dde";
        for (int n = 1; n <= N; ++n)
            r.absorb(structure::dde_residual(n, p, ctx).max_residual, at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        // Convention check: closed-form ladder coefficients against the
        // integral oracle. Decides the parity offset in B_n.
        ResidualReport r;
        r.name = "ladder-oracle";
        for (int n = 1; n <= N; ++n) {
            structure::LadderPair closed = structure::ladder(n, p, beta);
            structure::LadderPair oracle = structure::ladder_oracle(n, p);
            r.absorb(coeff_gap(closed.A, oracle.A), at_n(n) + ":A");
            r.absorb(coeff_gap(closed.B, oracle.B), at_n(n) + ":B");
        }
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "differential-equation";
        for (int n = 1; n <= N; ++n)
            r.absorb(structure::ode_residual(n, p, ctx).max_residual, at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "shohat-quasi";
        for (int n = 4; n <= N; ++n) r.absorb(structure::shohat_quasi_residual(n, p), at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "shohat-ladder-match";
        for (int n = 4; n <= N; ++n) {
            structure::LadderPair direct = structure::ladder(n, p, beta);
            structure::LadderPair rebuilt = structure::shohat_reconstruct(n, p, beta);
            r.absorb(coeff_gap(direct.A, rebuilt.A), at_n(n) + ":A");
            r.absorb(coeff_gap(direct.B, rebuilt.B), at_n(n) + ":B");
        }
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport r;
        r.name = "lemma-b-sum";
        for (int n = 1; n <= N; ++n) r.absorb(structure::lemma_b_sum_residual(n, p), at_n(n));
        r.finish(tol);
        out.push_back(r);
    }
    {
        // Convention check: the four independent beta routes agree.
        ResidualReport r;
        r.name = "beta-cross-route";
        std::vector<Real> tau_route = rec::beta_tau_table(N, p, ctx);
        rec::BetaTable dp1 = rec::beta_dp1(N, p, ctx);
        for (int n = 1; n <= N; ++n) {
            size_t k = static_cast<size_t>(n);
            r.absorb(rel_gap(beta[k], tau_route[k]), at_n(n) + ":tau");
            if (n <= 4) r.absorb(rel_gap(beta[k], rec::beta_closed(n, p)), at_n(n) + ":closed");
            if (!dp1.truncated_at || n < *dp1.truncated_at)
                r.absorb(rel_gap(beta[k], dp1.beta[k]), at_n(n) + ":dp1");
        }
        r.finish(tol);
        out.push_back(r);
    }
    {
        ResidualReport sym = lag::symmetrization_check(N, p, ctx);
        sym.finish(tol);
        out.push_back(sym);
    }
    {
        ResidualReport gram = poly::gram_check(N, p, ctx);
        gram.name = "gram";
        gram.finish(tol);
        out.push_back(gram);
    }
    {
        // Convention check: Laguerre recurrence coefficients from moments
        // against the parabolic-cylinder log-derivative route.
        ResidualReport r;
        r.name = "laguerre-log-derivative";
        lag::LaguerrePolySet set = lag::laguerre_recurrence(2, p.t, p.lambda);
        r.absorb(rel_gap(set.alpha[0], lag::alpha0_log_derivative(p, ctx)), "alpha_0");
        auto [a1, b1] = lag::alpha1_beta1_log_derivative(p);
        r.absorb(rel_gap(set.alpha[1], a1), "alpha_1");
        r.absorb(rel_gap(set.beta[1], b1), "beta_1");
        r.finish(tol);
        out.push_back(r);
    }
    return out;
}

bool all_pass(const std::vector<ResidualReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace freud::verify
