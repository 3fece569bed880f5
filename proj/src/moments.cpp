#include "freud/moments.hpp"

#include "freud/quadrature.hpp"
#include "freud/special_functions.hpp"

#include <stdexcept>

namespace freud::moments {

Real mu0(const Params& p) {
    check_params(p);
    return sf::gamma(p.lambda + 1) * pow(Real(2), -(p.lambda + 1) / 2) * exp(p.t * p.t / 8) *
           sf::pcf_d(-p.lambda - 1, -p.t / sqrt(Real(2)));
}

Real moment(int k, const Params& p) {
    if (k < 0) throw std::invalid_argument("moment: k must be >= 0");
    check_params(p);
    if (k % 2 == 1) return Real(0);
    return mu0({p.t, p.lambda + k / 2});
}

Real moment_oracle(int k, const Params& p, const PrecisionContext& ctx) {
    if (k < 0) throw std::invalid_argument("moment_oracle: k must be >= 0");
    check_params(p);
    if (k % 2 == 1) return Real(0);
    // int_R x^(2n) |x|^(2l+1) e^(-x^4+tx^2) dx = int_0^inf y^(n+l) e^(-y^2+ty) dy.
    Real power = p.lambda + k / 2;
    // Truncate where y^2 - t y >= R; the discarded tail is below e^(-R).
    Real R = (ctx.working_digits() + 10) * log(Real(10));
    Real Y = (p.t + sqrt(p.t * p.t + 4 * R)) / 2;
    return integrate([&](const Real& y) { return pow(y, power) * exp(-y * y + p.t * y); },
                     Real(0), Y, ctx);
}

Real half_line_moment(int k, const Params& p) {
    if (k < 0) throw std::invalid_argument("half_line_moment: k must be >= 0");
    return mu0({p.t, p.lambda + k});
}

MomentSequence moment_sequence(int N, const Params& p, MomentSequence::Method method,
                               const PrecisionContext& ctx) {
    MomentSequence seq;
    seq.params = p;
    seq.method = method;
    seq.mu.resize(static_cast<size_t>(2 * N) + 1, Real(0));
    for (int k = 0; k <= 2 * N; k += 2)
        seq.mu[static_cast<size_t>(k)] =
            method == MomentSequence::Method::closed_form ? moment(k, p) : moment_oracle(k, p, ctx);
    return seq;
}

}  // namespace freud::moments
