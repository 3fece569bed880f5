#include "freud/recurrence.hpp"
#include "freud/special_functions.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using freud::Params;
using freud::PrecisionContext;
using freud::Real;
namespace rec = freud::rec;

namespace {
Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }
Real pi() { return freud::promote(boost::math::constants::pi<Real>()); }
}  // namespace

TEST_SUITE("recurrence") {
    TEST_CASE("origin values against the Gamma-moment oracle") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real(0), Real(0)};
        auto beta = rec::beta_hankel_table(6, p);
        // frozen from an independent 60-digit Cholesky of the Gamma moments
        const char* pinned[] = {
            "0.564189583547756286948079451560772585844050629328998856844086",
            "0.322037341905001726701004290109800005554724098732194707262818",
            "0.66638805094179855878605906867899401559898508580033438068032",
            "0.512201754633877849763804992430178111954174304347867568973461",
            "0.773765864730062110518983733577027548696477154084144531881316",
            "0.652603295137817934232095510097259162647684215732134351485261"};
        for (int n = 1; n <= 6; ++n)
            CHECK(abs(beta[static_cast<size_t>(n)] - Real(pinned[n - 1])) < Real("1e-55"));
        // closed consequences of the Gamma values
        CHECK(rel(beta[1], 1 / sqrt(pi())) < Real("1e-70"));
        CHECK(rel(beta[2], (pi() - 2) / (2 * sqrt(pi()))) < Real("1e-70"));
        CHECK(rel(beta[3], (4 - pi()) * sqrt(pi()) / (2 * (pi() - 2))) < Real("1e-70"));
        CHECK(rel(beta[1] + beta[2], sqrt(pi()) / 2) < Real("1e-70"));
    }

    TEST_CASE("four routes agree") {
        PrecisionContext ctx = PrecisionContext::make(50);
        for (const Params& p : {Params{Real("1.3"), Real("0.5")}, Params{Real(-2), Real("-0.3")}}) {
            auto hankel = rec::beta_hankel_table(12, p);
            auto tau = rec::beta_tau_table(12, p, ctx);
            auto dp1 = rec::beta_dp1(12, p, ctx);
            CHECK(!dp1.truncated_at.has_value());
            for (int n = 1; n <= 12; ++n) {
                size_t k = static_cast<size_t>(n);
                CHECK(rel(hankel[k], tau[k]) < Real("1e-35"));
                CHECK(rel(hankel[k], dp1.beta[k]) < Real("1e-15"));
                CHECK(dp1.est_digits[k] >= 15);
                if (n <= 4) CHECK(rel(hankel[k], rec::beta_closed(n, p)) < Real("1e-40"));
            }
            CHECK(rel(rec::beta_hankel(3, p), hankel[3]) < Real("1e-70"));
            CHECK(rel(rec::beta_tau(2, p, ctx), tau[2]) < Real("1e-60"));
        }
    }

    TEST_CASE("beta_1 is Phi") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        Params p{Real("-1.7"), Real("2.5")};
        CHECK(rel(rec::beta_closed(1, p), freud::sf::big_phi(p)) < Real("1e-75"));
        CHECK(rel(rec::beta_hankel(1, p), freud::sf::big_phi(p)) < Real("1e-70"));
    }

    TEST_CASE("forward iteration truncates honestly at low precision") {
        PrecisionContext ctx = PrecisionContext::make(16);
        auto bt = rec::beta_dp1(80, {Real(2), Real("0.5")}, ctx);
        REQUIRE(bt.truncated_at.has_value());
        int cut = *bt.truncated_at;
        CHECK(cut >= 10);
        CHECK(cut <= 80);
        CHECK(bt.beta.size() == static_cast<size_t>(cut) + 1);
        CHECK(bt.N == cut);
        CHECK(!bt.truncation_reason.empty());
        for (int n = 1; n < cut; ++n) CHECK(bt.est_digits[static_cast<size_t>(n)] >= 5);
        PrecisionContext::make(50);  // restore ambient for later cases
    }

    TEST_CASE("string-equation residual over Hankel betas") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        for (const Params& p : {Params{Real(2), Real("2.5")}, Params{Real(-2), Real("-0.3")}}) {
            auto beta = rec::beta_hankel_table(13, p);
            for (int n = 1; n <= 12; ++n) CHECK(abs(rec::dp1_residual(n, p, beta)) < Real("1e-25"));
        }
    }

    TEST_CASE("continuous Painleve residual in t") {
        PrecisionContext ctx = PrecisionContext::make(50);
        Params p{Real("0.5"), Real("0.5")};
        for (int n : {1, 2, 3}) CHECK(rec::pIV_residual(n, p, ctx) < Real("1e-30"));
    }

    TEST_CASE("Backlund ladder in both directions") {
        PrecisionContext ctx = PrecisionContext::make(50);
        for (const Params& p : {Params{Real("0.8"), Real(1)}, Params{Real(-2), Real("2.5")}})
            for (int n = 1; n <= 4; ++n) {
                auto [up, down] = rec::backlund_residual(n, p, ctx);
                CHECK(up < Real("1e-35"));
                CHECK(down < Real("1e-35"));  // n = 1 checks the beta_0 = 0 endpoint
            }
    }

    TEST_CASE("large-t asymptotics") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        CHECK(rec::beta_asymptotic(1, {Real(50), Real(0)}) == 25);
        CHECK(abs(rec::beta_asymptotic(2, {Real(50), Real(1)}) - Real("0.019968")) < Real("1e-74"));
        CHECK(abs(rec::beta_asymptotic(3, {Real(50), Real(0)}) - Real("24.98")) < Real("1e-74"));
        // the actual coefficients sit on these asymptotes
        CHECK(abs(rec::beta_hankel(1, {Real(50), Real(0)}) - 25) < Real("1e-8"));
        CHECK(abs(rec::beta_hankel(2, {Real(50), Real(1)}) - Real("0.019968")) < Real("1e-5"));
        CHECK(abs(rec::beta_hankel(3, {Real(50), Real(0)}) - Real("24.98")) < Real("1e-5"));
    }

    TEST_CASE("lambda = -1/2 collapses to the classical string equation") {
        PrecisionContext ctx = PrecisionContext::make(50);
        (void)ctx;
        for (const Real& t : {Real("0.7"), Real(2)})
            for (int n = 1; n <= 8; ++n)
                CHECK(rec::string_reduction_residual(n, t) < Real("1e-30"));
    }

    TEST_CASE("agreement estimator") {
        PrecisionContext ctx = PrecisionContext::make(50);
        int d = rec::agreement_digits(Real(1), Real(1) + Real("1e-20"), ctx);
        CHECK(d >= 19);
        CHECK(d <= 21);
        CHECK(rec::agreement_digits(Real(1), Real(1), ctx) == 50);
        CHECK(rec::agreement_digits(Real(1), Real(2), ctx) == 0);
    }
}
