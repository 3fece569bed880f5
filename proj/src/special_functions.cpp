#include "freud/special_functions.hpp"

#include "freud/central_diff.hpp"
#include "freud/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace freud::sf {

namespace {

bool is_nonpositive_integer(const Real& x) {
    return x <= 0 && x == floor(x);
}

Real const_pi() { return boost::math::constants::pi<Real>(); }

}  // namespace

Real gamma(const Real& x) {
    if (is_nonpositive_integer(x)) throw std::domain_error("gamma: pole at nonpositive integer");
    return boost::multiprecision::tgamma(x);
}

Real lgamma(const Real& x) {
    if (is_nonpositive_integer(x)) throw std::domain_error("lgamma: pole at nonpositive integer");
    return boost::multiprecision::lgamma(x);
}

Real recip_gamma(const Real& x) {
    if (is_nonpositive_integer(x)) return Real(0);
    return 1 / boost::multiprecision::tgamma(x);
}

Real erf(const Real& x) { return boost::multiprecision::erf(x); }

Real erfc(const Real& x) { return boost::multiprecision::erfc(x); }

Real kummer_m(const Real& a, const Real& b, const Real& z) {
    if (is_nonpositive_integer(b)) throw std::domain_error("kummer_m: b at nonpositive integer");
    // All-positive series when a > 0, z > 0; otherwise at most a bounded
    // prefix alternates, absorbed by the caller's precision elevation.
    Real sum(1), term(1);
    for (int k = 0; k < 1000000; ++k) {
        term *= (a + k) * z / ((b + k) * (k + 1));
        sum += term;
        if (abs(term) < abs(sum) * std::numeric_limits<Real>::epsilon() && k > 2) break;
    }
    return sum;
}

Real pcf_d(const Real& nu, const Real& z) {
    // D_nu(z) = 2^(nu/2) sqrt(pi) e^(-z^2/4)
    //   [ M(-nu/2, 1/2, z^2/2)/gamma((1-nu)/2)
    //     - sqrt2 z M((1-nu)/2, 3/2, z^2/2)/gamma(-nu/2) ].
    // For z > 0 the two terms cancel to ~e^(-z^2/2) of their size; run
    // that regime at elevated precision sized by the cancellation.
    double zd = static_cast<double>(z);
    double nud = static_cast<double>(nu);
    int extra = 10;
    if (zd > 0) extra += static_cast<int>(zd * zd / (2 * 2.302585) + std::abs(nud) * std::log10(1.0 + zd)) + 10;
    if (nud < 0 && zd <= 0) extra += static_cast<int>(std::abs(nud) * std::log10(1.0 - zd + 1.0)) + 5;
    Real result;
    {
        PrecisionGuard guard(Real::default_precision() + static_cast<unsigned>(extra));
        Real nu_w = promote(nu), z_w = promote(z);
        Real half(Real(1) / 2);
        Real zz = z_w * z_w / 2;
        Real term1 = kummer_m(-nu_w / 2, half, zz) * recip_gamma((1 - nu_w) / 2);
        Real term2 = sqrt(Real(2)) * z_w * kummer_m((1 - nu_w) / 2, Real(3) / 2, zz) *
                     recip_gamma(-nu_w / 2);
        result = pow(Real(2), nu_w / 2) * sqrt(const_pi()) * exp(-zz / 2) * (term1 - term2);
    }
    return promote(result);
}

Real pcf_d_integral(const Real& nu, const Real& z, const PrecisionContext& ctx) {
    if (!(nu < 0)) throw std::domain_error("pcf_d_integral: requires nu < 0");
    // Truncate where s^2/2 + z s >= R, R sized to the working precision.
    Real R = (ctx.working_digits() + 10) * log(Real(10));
    Real S = -z + sqrt(z * z + 2 * R);
    Real integral = integrate(
        [&](const Real& s) { return pow(s, -nu - 1) * exp(-s * s / 2 - z * s); }, Real(0), S,
        ctx);
    return exp(-z * z / 4) / gamma(-nu) * integral;
}

Real big_phi(const Params& p) {
    check_params(p);
    Real arg = -p.t / sqrt(Real(2));
    Real denom = pcf_d(-p.lambda - 1, arg);
    if (denom == 0) throw std::domain_error("big_phi: vanishing denominator D_(-lambda-1)");
    return p.t / 2 + sqrt(Real(2)) / 2 * pcf_d(-p.lambda, arg) / denom;
}

Real riccati_residual(const Params& p, const PrecisionContext& ctx) {
    Real phi = big_phi(p);
    Real dphi = central_diff([&](const Real& t) { return big_phi({t, p.lambda}); }, p.t, 1, ctx);
    return abs(dphi + phi * phi - p.t / 2 * phi - (p.lambda + 1) / 2);
}

std::array<Real, 4> phi_derivs(const Params& p) {
    Real phi = big_phi(p);
    Real d1 = -phi * phi + p.t / 2 * phi + (p.lambda + 1) / 2;
    Real d2 = -2 * phi * d1 + phi / 2 + p.t / 2 * d1;
    Real d3 = -2 * d1 * d1 - 2 * phi * d2 + d1 + p.t / 2 * d2;
    return {phi, d1, d2, d3};
}

PhiExpansion phi_expansion(const Real& lambda, int N) {
    if (N < 1) throw std::invalid_argument("phi_expansion: N must be >= 1");
    PhiExpansion e;
    e.lambda = lambda;
    e.a.resize(static_cast<size_t>(N));
    e.a[0] = lambda;
    for (int n = 1; n < N; ++n) {
        // a_(n+1) = 2(2n-1) a_n - 2 sum_(j=1..n) a_j a_(n+1-j)
        Real conv(0);
        for (int j = 1; j <= n; ++j) conv += e.a[static_cast<size_t>(j - 1)] * e.a[static_cast<size_t>(n - j)];
        e.a[static_cast<size_t>(n)] = 2 * (2 * n - 1) * e.a[static_cast<size_t>(n - 1)] - 2 * conv;
    }
    return e;
}

Real phi_asymptotic(const Params& p, int terms) {
    PhiExpansion e = phi_expansion(p.lambda, terms);
    Real sum = p.t / 2;
    Real tp = p.t;  // t^(2n-1)
    for (int n = 1; n <= terms; ++n) {
        sum += e.a[static_cast<size_t>(n - 1)] / tp;
        tp *= p.t * p.t;
    }
    return sum;
}

}  // namespace freud::sf
