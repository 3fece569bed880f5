// freud: extended-precision tables and identity verification for the
// generalized Freud weight |x|^(2*lambda+1) exp(-x^4 + t x^2).

#include "freud/determinants.hpp"
#include "freud/moments.hpp"
#include "freud/orthogonal.hpp"
#include "freud/precision.hpp"
#include "freud/recurrence.hpp"
#include "freud/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using freud::Params;
using freud::PrecisionContext;
using freud::PrecisionError;
using freud::Real;
using json = nlohmann::ordered_json;

struct Common {
    std::string t = "0";
    std::string lambda = "0";
    int n_max = 6;
    int digits = 50;
    std::string format = "csv";
    std::string method = "all";
    int tolerance_exponent = -12;
};

// digits-5 significant figures, scientific; the trailing guard digits are
// noise and printing them would invite false bit-compat expectations.
std::string format_real(const Real& x, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(std::max(digits - 5, 1) - 1) << x;
    return os.str();
}

Real parse_real(const std::string& s) { return Real(s); }

struct BetaColumn {
    std::string method;
    std::vector<Real> value;      // index n, [0] unused
    std::vector<int> est_digits;  // -1 where no independent estimate exists
};

std::vector<BetaColumn> beta_columns(const std::string& method, int n_max, const Params& p,
                                     const PrecisionContext& ctx) {
    bool all = method == "all";
    std::vector<Real> hankel = freud::rec::beta_hankel_table(n_max, p);
    std::vector<Real> tau;
    if (all || method == "hankel" || method == "tau")
        tau = freud::rec::beta_tau_table(n_max, p, ctx);

    std::vector<BetaColumn> cols;
    auto est_vs = [&](const std::vector<Real>& v, const std::vector<Real>& ref, int n) {
        return freud::rec::agreement_digits(v[static_cast<size_t>(n)],
                                            ref[static_cast<size_t>(n)], ctx);
    };
    if (all || method == "hankel") {
        BetaColumn c{"hankel", hankel, std::vector<int>(hankel.size(), -1)};
        for (int n = 1; n <= n_max; ++n) c.est_digits[static_cast<size_t>(n)] = est_vs(hankel, tau, n);
        cols.push_back(std::move(c));
    }
    if (all || method == "tau") {
        BetaColumn c{"tau", tau, std::vector<int>(tau.size(), -1)};
        for (int n = 1; n <= n_max; ++n) c.est_digits[static_cast<size_t>(n)] = est_vs(tau, hankel, n);
        cols.push_back(std::move(c));
    }
    if (all || method == "dp1") {
        // A truncated table keeps its short length; emit loops skip past it.
        freud::rec::BetaTable bt = freud::rec::beta_dp1(n_max, p, ctx);
        cols.push_back(BetaColumn{"dp1", bt.beta, bt.est_digits});
    }
    if (all || method == "closed") {
        BetaColumn c{"closed", std::vector<Real>(static_cast<size_t>(n_max) + 1, Real(0)),
                     std::vector<int>(static_cast<size_t>(n_max) + 1, -1)};
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            c.value[static_cast<size_t>(n)] = freud::rec::beta_closed(n, p);
            c.est_digits[static_cast<size_t>(n)] = est_vs(c.value, hankel, n);
        }
        cols.push_back(std::move(c));
    }
    if (cols.empty()) throw std::invalid_argument("unknown method " + method);
    return cols;
}

int cmd_beta(const Common& c) {
    PrecisionContext ctx = PrecisionContext::make(static_cast<unsigned>(c.digits));
    Params p{parse_real(c.t), parse_real(c.lambda)};
    auto cols = beta_columns(c.method, c.n_max, p, ctx);
    if (c.format == "csv") {
        std::cout << "n,method,value,est_digits\n";
        for (int n = 1; n <= c.n_max; ++n)
            for (const auto& col : cols) {
                size_t k = static_cast<size_t>(n);
                if (col.method == "closed" && n > 4) continue;
                if (k >= col.value.size()) continue;
                std::cout << n << ',' << col.method << ',' << format_real(col.value[k], c.digits)
                          << ',' << col.est_digits[k] << '\n';
            }
    } else {
        json doc;
        doc["params"] = {{"t", c.t}, {"lambda", c.lambda}, {"digits", c.digits},
                         {"n_max", c.n_max}};
        doc["entries"] = json::array();
        for (int n = 1; n <= c.n_max; ++n)
            for (const auto& col : cols) {
                size_t k = static_cast<size_t>(n);
                if (col.method == "closed" && n > 4) continue;
                if (k >= col.value.size()) continue;
                doc["entries"].push_back({{"n", n},
                                          {"method", col.method},
                                          {"value", format_real(col.value[k], c.digits)},
                                          {"est_digits", col.est_digits[k]}});
            }
        doc["residuals"] = json::array();
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_poly(const Common& c) {
    PrecisionContext ctx = PrecisionContext::make(static_cast<unsigned>(c.digits));
    (void)ctx;
    Params p{parse_real(c.t), parse_real(c.lambda)};
    std::vector<Real> beta = freud::rec::beta_hankel_table(std::max(1, c.n_max), p);
    auto S = freud::poly::generate(c.n_max, p, beta);
    if (c.format == "csv") {
        std::cout << "n,k,value\n";
        for (int n = 0; n <= c.n_max; ++n) {
            auto dense = S[static_cast<size_t>(n)].to_dense();
            for (size_t k = 0; k < dense.size(); ++k)
                std::cout << n << ',' << k << ',' << format_real(dense[k], c.digits) << '\n';
        }
    } else {
        json doc;
        doc["params"] = {{"t", c.t}, {"lambda", c.lambda}, {"digits", c.digits},
                         {"n_max", c.n_max}};
        doc["entries"] = json::array();
        for (int n = 0; n <= c.n_max; ++n) {
            auto dense = S[static_cast<size_t>(n)].to_dense();
            for (size_t k = 0; k < dense.size(); ++k)
                doc["entries"].push_back({{"n", n},
                                          {"k", k},
                                          {"value", format_real(dense[k], c.digits)}});
        }
        doc["residuals"] = json::array();
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const Common& c) {
    freud::verify::Options opt;
    opt.ctx = PrecisionContext::make(static_cast<unsigned>(c.digits));
    opt.p = Params{parse_real(c.t), parse_real(c.lambda)};
    opt.n_max = c.n_max;
    opt.tolerance_exponent = c.tolerance_exponent;
    auto reports = freud::verify::run_suite(opt);
    if (c.format == "csv") {
        std::cout << "name,max_residual,tolerance,pass\n";
        for (const auto& r : reports)
            std::cout << r.name << ',' << format_real(r.max_residual, c.digits) << ','
                      << format_real(r.tolerance, c.digits) << ',' << (r.pass ? 1 : 0) << '\n';
    } else {
        json doc;
        doc["params"] = {{"t", c.t}, {"lambda", c.lambda}, {"digits", c.digits},
                         {"n_max", c.n_max}};
        doc["entries"] = json::array();
        doc["residuals"] = json::array();
        for (const auto& r : reports)
            doc["residuals"].push_back({{"name", r.name},
                                        {"max_residual", format_real(r.max_residual, c.digits)},
                                        {"tolerance", format_real(r.tolerance, c.digits)},
                                        {"pass", r.pass}});
        std::cout << doc.dump(2) << '\n';
    }
    return freud::verify::all_pass(reports) ? 0 : 1;
}

int cmd_table(const Common& c, const std::vector<std::string>& ts,
              const std::vector<std::string>& lambdas) {
    PrecisionContext ctx = PrecisionContext::make(static_cast<unsigned>(c.digits));
    (void)ctx;
    std::vector<std::string> tg = ts.empty() ? std::vector<std::string>{"-2", "0", "2"} : ts;
    std::vector<std::string> lg =
        lambdas.empty() ? std::vector<std::string>{"-0.3", "0.5", "1", "2.5"} : lambdas;
    std::string method = c.method == "all" ? "hankel" : c.method;

    struct Row {
        std::string t, lambda;
        int n;
        Real value;
    };
    std::vector<Row> rows;
    for (const auto& ts_ : tg)
        for (const auto& ls_ : lg) {
            Params p{parse_real(ts_), parse_real(ls_)};
            std::vector<Real> beta;
            if (method == "hankel")
                beta = freud::rec::beta_hankel_table(c.n_max, p);
            else if (method == "tau")
                beta = freud::rec::beta_tau_table(
                    c.n_max, p, PrecisionContext::make(static_cast<unsigned>(c.digits)));
            else
                throw std::invalid_argument("table supports --method hankel|tau");
            for (int n = 1; n <= c.n_max; ++n)
                rows.push_back({ts_, ls_, n, beta[static_cast<size_t>(n)]});
        }
    // Deterministic (t, lambda, n) ordering by numeric value.
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        Real ta = parse_real(a.t), tb = parse_real(b.t);
        if (ta != tb) return ta < tb;
        Real la = parse_real(a.lambda), lb = parse_real(b.lambda);
        if (la != lb) return la < lb;
        return a.n < b.n;
    });
    if (c.format == "csv") {
        std::cout << "t,lambda,n,method,value,est_digits\n";
        for (const auto& r : rows)
            std::cout << r.t << ',' << r.lambda << ',' << r.n << ',' << method << ','
                      << format_real(r.value, c.digits) << ",-1\n";
    } else {
        json doc;
        doc["params"] = {{"digits", c.digits}, {"n_max", c.n_max}};
        doc["entries"] = json::array();
        for (const auto& r : rows)
            doc["entries"].push_back({{"t", r.t},
                                      {"lambda", r.lambda},
                                      {"n", r.n},
                                      {"method", method},
                                      {"value", format_real(r.value, c.digits)},
                                      {"est_digits", -1}});
        doc["residuals"] = json::array();
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

void add_common(CLI::App* app, Common& c, bool with_method) {
    app->add_option("--t", c.t, "t parameter of the weight");
    app->add_option("--lambda", c.lambda, "lambda parameter (> -1)");
    app->add_option("--n-max", c.n_max, "largest index")->check(CLI::Range(1, 1000000));
    app->add_option("--digits", c.digits, "working decimal digits (>= 16)")
        ->envname("FREUD_DIGITS");
    app->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_method)
        app->add_option("--method", c.method, "beta route")
            ->check(CLI::IsMember({"hankel", "tau", "dp1", "closed", "all"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Freud weight toolkit"};
    app.require_subcommand(1);

    Common cb, cp, cv, ct;
    std::vector<std::string> ts, lambdas;

    CLI::App* beta = app.add_subcommand("beta", "recurrence coefficients beta_n");
    add_common(beta, cb, true);
    CLI::App* poly = app.add_subcommand("poly", "monic polynomial coefficients S_0..S_N");
    add_common(poly, cp, false);
    CLI::App* verify = app.add_subcommand("verify", "run the residual identity suite");
    add_common(verify, cv, false);
    verify->add_option("--tolerance-exponent", cv.tolerance_exponent,
                       "pass iff every residual <= 10^exponent");
    CLI::App* table = app.add_subcommand("table", "beta_n over a (t, lambda) grid");
    add_common(table, ct, true);
    table->add_option("--t-grid", ts, "grid t values (repeatable)");
    table->add_option("--lambda-grid", lambdas, "grid lambda values (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (beta->parsed()) return cmd_beta(cb);
        if (poly->parsed()) return cmd_poly(cp);
        if (verify->parsed()) return cmd_verify(cv);
        if (table->parsed()) return cmd_table(ct, ts, lambdas);
    } catch (const PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
