#include "freud/special_functions.hpp"
#include "freud/central_diff.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using freud::Params;
using freud::PrecisionContext;
using freud::Real;
namespace sf = freud::sf;

namespace {
Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }
Real pi() { return freud::promote(boost::math::constants::pi<Real>()); }
}  // namespace

TEST_SUITE("special") {
    TEST_CASE("gamma, poles, and the entire reciprocal") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        CHECK(rel(sf::gamma(Real(1) / 2), sqrt(pi())) < Real("1e-75"));
        CHECK(rel(sf::gamma(Real(5)), Real(24)) < Real("1e-75"));
        CHECK_THROWS_AS(sf::gamma(Real(0)), std::domain_error);
        CHECK_THROWS_AS(sf::gamma(Real(-2)), std::domain_error);
        CHECK(sf::recip_gamma(Real(0)) == 0);
        CHECK(sf::recip_gamma(Real(-3)) == 0);
        CHECK(rel(sf::recip_gamma(Real(3)), Real(1) / 2) < Real("1e-75"));
        CHECK(rel(sf::lgamma(Real(10)), log(Real(362880))) < Real("1e-75"));
        CHECK(rel(sf::erf(Real(1)) + sf::erfc(Real(1)), Real(1)) < Real("1e-75"));
    }

    TEST_CASE("Kummer M against elementary closed forms") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        CHECK(sf::kummer_m(Real("0.7"), Real("1.3"), Real(0)) == 1);
        // M(a,a,z) = e^z
        CHECK(rel(sf::kummer_m(Real("1.5"), Real("1.5"), Real(2)), exp(Real(2))) < Real("1e-70"));
        // M(1,2,z) = (e^z - 1)/z
        Real z("0.8");
        CHECK(rel(sf::kummer_m(Real(1), Real(2), z), (exp(z) - 1) / z) < Real("1e-70"));
        // negative argument exercises the alternating series
        CHECK(rel(sf::kummer_m(Real(1), Real(2), -z), (exp(-z) - 1) / (-z)) < Real("1e-70"));
    }

    TEST_CASE("parabolic cylinder special orders") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        for (const Real& z : {Real(-3), Real(-1), Real(0), Real("1.5"), Real("2.5")}) {
            // D_0(z) = e^(-z^2/4), D_1(z) = z e^(-z^2/4)
            CHECK(rel(sf::pcf_d(Real(0), z), exp(-z * z / 4)) < Real("1e-70"));
            CHECK(rel(sf::pcf_d(Real(1), z), z * exp(-z * z / 4)) < Real("1e-70"));
            // D_(-1)(z) = e^(z^2/4) sqrt(pi/2) erfc(z/sqrt2)
            Real d1 = exp(z * z / 4) * sqrt(pi() / 2) * sf::erfc(z / sqrt(Real(2)));
            CHECK(rel(sf::pcf_d(Real(-1), z), d1) < Real("1e-70"));
        }
    }

    TEST_CASE("contiguous recurrence D_(nu+1) - z D_nu + nu D_(nu-1) = 0") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        for (const Real& nu : {Real("-2.3"), Real("-1.5"), Real("-0.7"), Real("0.4"), Real("1.2")})
            for (const Real& z : {Real(-3), Real(-1), Real(0), Real("1.5"), Real("2.5")}) {
                Real up = sf::pcf_d(nu + 1, z);
                Real mid = sf::pcf_d(nu, z);
                Real down = sf::pcf_d(nu - 1, z);
                Real scale = std::max({abs(up), abs(z * mid), abs(nu * down), Real(1)});
                CHECK(abs(up - z * mid + nu * down) / scale < Real("1e-70"));
            }
    }

    TEST_CASE("series form against the integral representation") {
        PrecisionContext ctx = PrecisionContext::make(50);
        for (const Real& nu : {Real("-0.6"), Real("-1.5"), Real("-2.5")})
            for (const Real& z : {Real(-2), Real("-0.5"), Real(1), Real(3)}) {
                Real a = sf::pcf_d(nu, z);
                Real b = sf::pcf_d_integral(nu, z, ctx);
                CHECK(rel(a, b) < Real("1e-45"));
            }
        CHECK_THROWS_AS(sf::pcf_d_integral(Real("0.5"), Real(1), ctx), std::domain_error);
    }

    TEST_CASE("Phi at t = 0 reduces to a Gamma ratio") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        // Phi(0; lambda) = Gamma(lambda/2 + 1) / Gamma((lambda+1)/2)
        CHECK(rel(sf::big_phi({Real(0), Real(0)}), 1 / sqrt(pi())) < Real("1e-70"));
        CHECK(rel(sf::big_phi({Real(0), Real(1)}), sqrt(pi()) / 2) < Real("1e-70"));
        CHECK(rel(sf::big_phi({Real(0), Real("2.5")}),
                  sf::gamma(Real("2.25")) / sf::gamma(Real("1.75"))) < Real("1e-70"));
    }

    TEST_CASE("Riccati residual and the pinned derivative value") {
        PrecisionContext ctx = PrecisionContext::make(50);
        for (const Real& t : {Real(-2), Real(0), Real(2)})
            for (const Real& l : {Real("-0.3"), Real("0.5"), Real(1), Real("2.5")})
                CHECK(sf::riccati_residual({t, l}, ctx) < Real("1e-25"));
        // Phi'(0;0) = (lambda+1)/2 - Phi^2 = 1/2 - 1/pi = 0.1816901138...
        auto phi_of_t = [](const Real& t) { return sf::big_phi({t, Real(0)}); };
        Real dphi = freud::central_diff(phi_of_t, Real(0), 1, ctx);
        CHECK(rel(dphi, Real(1) / 2 - 1 / pi()) < Real("1e-25"));
        CHECK(abs(dphi - Real("0.1816901138")) < Real("1e-10"));
    }

    TEST_CASE("closed-form derivative bundle matches numerical differentiation") {
        PrecisionContext ctx = PrecisionContext::make(50);
        Params p{Real("1.3"), Real("0.5")};
        auto d = sf::phi_derivs(p);
        auto f = [&](const Real& t) { return sf::big_phi({t, p.lambda}); };
        auto num = freud::derivatives_upto(f, p.t, 3, ctx);
        for (int k = 0; k <= 3; ++k) CHECK(rel(d[static_cast<size_t>(k)], num[static_cast<size_t>(k)]) < Real("1e-25"));
    }

    TEST_CASE("large-t expansion coefficients") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        auto e2 = sf::phi_expansion(Real(2), 3);
        CHECK(e2.a[0] == 2);
        CHECK(e2.a[1] == -4);
        CHECK(e2.a[2] == 8);
        auto e25 = sf::phi_expansion(Real("2.5"), 4);
        CHECK(e25.a[3] == Real("-112.5"));
        // lambda = 0: Phi = t/2 exactly in the expansion sense (all a_n = 0)
        auto e0 = sf::phi_expansion(Real(0), 6);
        for (const auto& a : e0.a) CHECK(a == 0);
        // lambda = 1: a_1 = 1 and the tail vanishes (Phi - t/2 = 1/t exactly)
        auto e1 = sf::phi_expansion(Real(1), 5);
        CHECK(e1.a[0] == 1);
        for (size_t j = 1; j < e1.a.size(); ++j) CHECK(e1.a[j] == 0);
    }

    TEST_CASE("truncated expansion approaches Phi at large t") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real(30), Real("2.5")};
        Real exact = sf::big_phi(p);
        Real err3 = abs(sf::phi_asymptotic(p, 3) - exact);
        Real err4 = abs(sf::phi_asymptotic(p, 4) - exact);
        CHECK(err3 < Real("1e-8"));
        CHECK(err4 < err3);  // each extra term gains ~ t^(-2)
    }
}
