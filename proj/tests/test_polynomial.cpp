#include "freud/orthogonal.hpp"
#include "freud/moments.hpp"
#include "freud/recurrence.hpp"

#include <doctest.h>

using freud::Params;
using freud::ParityPoly;
using freud::PrecisionContext;
using freud::Real;
namespace poly = freud::poly;
namespace rec = freud::rec;

namespace {
Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }
}  // namespace

TEST_SUITE("polynomial") {
    TEST_CASE("parity algebra is structural") {
        ParityPoly<Real> even(0, {Real(1), Real(-2)});   // 1 - 2x^2
        ParityPoly<Real> odd(1, {Real(3), Real(1)});     // 3x + x^3
        CHECK(even.degree() == 2);
        CHECK(odd.degree() == 3);
        CHECK_THROWS_AS(even += odd, std::logic_error);
        CHECK((even * odd).parity() == 1);
        CHECK((odd * odd).parity() == 0);
        CHECK((odd * odd).degree() == 6);
        CHECK(even.mul_x().parity() == 1);
        CHECK(even.mul_x().div_x().compressed() == even.compressed());
        CHECK(odd.derivative().parity() == 0);
        // d/dx (3x + x^3) = 3 + 3x^2
        CHECK(odd.derivative().c(0) == 3);
        CHECK(odd.derivative().c(1) == 3);
        CHECK(even.eval(Real(2)) == 1 - 8);
        CHECK(odd.eval(Real(2)) == 6 + 8);
        CHECK(even.coeff_x(1) == 0);
        CHECK(even.coeff_x(2) == -2);
        // dividing an even polynomial with constant term is not exact
        CHECK_THROWS_AS(even.div_x(), std::logic_error);
    }

    TEST_CASE("generated polynomials match the closed forms") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real("1.1"), Real("0.4")};
        auto beta = rec::beta_hankel_table(5, p);
        auto S = poly::generate(5, p, beta);
        REQUIRE(S.size() == 6);
        for (int n = 0; n <= 5; ++n) {
            CHECK(S[static_cast<size_t>(n)].parity() == n % 2);
            CHECK(S[static_cast<size_t>(n)].degree() == n);
            CHECK(S[static_cast<size_t>(n)].coeff_x(n) == 1);  // monic
        }
        const Real &b1 = beta[1], &b2 = beta[2], &b3 = beta[3], &b4 = beta[4];
        // S_2 = x^2 - b1
        CHECK(S[2].coeff_x(0) == -b1);
        // S_3 = x^3 - (b1+b2) x
        CHECK(rel(S[3].coeff_x(1), -(b1 + b2)) < Real("1e-75"));
        // S_4 = x^4 - (b1+b2+b3) x^2 + b1 b3
        CHECK(rel(S[4].coeff_x(2), -(b1 + b2 + b3)) < Real("1e-75"));
        CHECK(rel(S[4].coeff_x(0), b1 * b3) < Real("1e-75"));
        // S_5 = x^5 - (b1+b2+b3+b4) x^3 + (b1 b3 + b1 b4 + b2 b4) x
        CHECK(rel(S[5].coeff_x(3), -(b1 + b2 + b3 + b4)) < Real("1e-75"));
        CHECK(rel(S[5].coeff_x(1), b1 * b3 + b1 * b4 + b2 * b4) < Real("1e-75"));
        // derivative and eval plumbing
        Real x("0.7");
        CHECK(rel(poly::eval(poly::derivative(S[3]), x), 3 * x * x - (b1 + b2)) < Real("1e-70"));
    }

    TEST_CASE("norm table and direct integration") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real("-0.8"), Real("1.5")};
        auto beta = rec::beta_hankel_table(4, p);
        auto S = poly::generate(4, p, beta);
        auto nt = poly::norms(4, p, beta);
        CHECK(rel(nt.h[0], freud::moments::mu0(p)) < Real("1e-70"));
        for (int n = 1; n <= 4; ++n)
            CHECK(rel(nt.h[static_cast<size_t>(n)],
                      beta[static_cast<size_t>(n)] * nt.h[static_cast<size_t>(n - 1)]) <
                  Real("1e-70"));
        // h_2 by moment summation of S_2^2
        CHECK(rel(poly::integrate_poly(S[2] * S[2], p), nt.h[2]) < Real("1e-70"));
        // odd parity integrates to exactly zero
        CHECK(poly::integrate_poly(S[3], p) == 0);
        CHECK(poly::integrate_poly(S[2] * S[3], p) == 0);
    }

    TEST_CASE("Gram matrix is diagonal to working accuracy") {
        PrecisionContext ctx = PrecisionContext::make(50);
        for (const Params& p : {Params{Real(2), Real("-0.3")}, Params{Real(-2), Real("2.5")}}) {
            auto rep = poly::gram_check(8, p, ctx);
            CHECK(rep.pass);
            CHECK(rep.max_residual < Real("1e-30"));
        }
    }

    TEST_CASE("Gauss rules: closed small cases and moment exactness") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real("0.9"), Real("0.5")};
        auto beta = rec::beta_hankel_table(10, p);
        Real mu0 = freud::moments::mu0(p);
        auto [x1, w1] = poly::gauss_rule(1, p, beta);
        CHECK(x1[0] == 0);
        CHECK(rel(w1[0], mu0) < Real("1e-65"));
        auto [x2, w2] = poly::gauss_rule(2, p, beta);
        CHECK(rel(x2[1], sqrt(beta[1])) < Real("1e-65"));
        CHECK(x2[0] == -x2[1]);
        CHECK(rel(w2[0], mu0 / 2) < Real("1e-65"));
        CHECK(rel(w2[1], mu0 / 2) < Real("1e-65"));
        // N-point rule integrates mu_0..mu_(2N-2) exactly
        for (int N : {5, 10}) {
            auto [x, w] = poly::gauss_rule(N, p, beta);
            for (int k = 0; k <= 2 * N - 2; k += 2) {
                Real quad(0);
                for (size_t i = 0; i < x.size(); ++i) quad += w[i] * pow(x[i], k);
                CHECK(rel(quad, freud::moments::moment(k, p)) < Real("1e-30"));
            }
        }
    }

    TEST_CASE("zeros are symmetric, interlacing, and zeros of S_n") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real(-2), Real("2.5")};
        auto beta = rec::beta_hankel_table(13, p);
        auto S = poly::generate(12, p, beta);
        for (int n : {5, 11, 12}) {
            auto z = poly::zeros(n, p, beta);
            REQUIRE(z.size() == static_cast<size_t>(n));
            for (size_t i = 0; i + 1 < z.size(); ++i) CHECK(z[i] < z[i + 1]);
            for (size_t i = 0; i < z.size(); ++i) CHECK(z[i] == -z[z.size() - 1 - i]);
            // residual of S_n at its computed zeros, scaled by the derivative
            for (const Real& zi : z) {
                Real num = poly::eval(S[static_cast<size_t>(n)], zi);
                Real den = std::max(Real(1), abs(poly::eval(poly::derivative(S[static_cast<size_t>(n)]), zi)));
                CHECK(abs(num) / den < Real("1e-60"));
            }
        }
        for (int n = 1; n <= 11; ++n) {
            auto inner = poly::zeros(n, p, beta);
            auto outer = poly::zeros(n + 1, p, beta);
            for (size_t i = 0; i < inner.size(); ++i) {
                CHECK(outer[i] < inner[i]);
                CHECK(inner[i] < outer[i + 1]);
            }
        }
    }
}
