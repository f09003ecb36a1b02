// Command-line surface for the quasi-Jacobi form kernel: expression
// parsing, derivations, brackets, dimension tables, Eisenstein forms,
// series data and the batch verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 numeric domain error.

#include "qjf/analytic.hpp"
#include "qjf/brackets.hpp"
#include "qjf/calculus.hpp"
#include "qjf/dimensions.hpp"
#include "qjf/io.hpp"
#include "qjf/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

struct GlobalOptions {
    bool as_json = false;
    bool as_csv = false;
    std::string out_file;
    double tol = 1e-8;
    int n_q = 30;
    int n_z = 20;
};

struct Output {
    std::ostringstream text;
    std::vector<json> records;

    void emit(const GlobalOptions& g)
    {
        std::string payload;
        if (g.as_json) {
            std::ostringstream js;
            for (const auto& r : records)
                js << r.dump() << "\n";
            payload = js.str();
        } else {
            payload = text.str();
        }
        if (g.out_file.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(g.out_file);
            if (!f)
                throw std::runtime_error("cannot open output file " + g.out_file);
            f << payload;
        }
    }
};

qjf::AlgebraId algebra_from_name(const std::string& name)
{
    if (name == "js")
        return qjf::AlgebraId::JS;
    if (name == "js0inf")
        return qjf::AlgebraId::JS0inf;
    if (name == "jsinf0")
        return qjf::AlgebraId::JSinf0;
    if (name == "jsinf")
        return qjf::AlgebraId::JSinf;
    throw CLI::ValidationError("--algebra", "unknown algebra '" + name + "'");
}

qjf::BracketFamily family_from_name(const std::string& name)
{
    if (name == "rc")
        return qjf::BracketFamily::RC;
    if (name == "rcd")
        return qjf::BracketFamily::RCd;
    if (name == "tv")
        return qjf::BracketFamily::TV;
    throw CLI::ValidationError("--family", "unknown bracket family '" + name + "'");
}

std::string monomial_name(const qjf::Monomial& m)
{
    return qjf::to_string(qjf::Form::monomial(m));
}

void run_dims(Output& out, const GlobalOptions& g, const std::string& algebra, int kmax,
              const std::string& route)
{
    const qjf::AlgebraId which = algebra_from_name(algebra);
    if (route == "all") {
        const auto table = qjf::dimension_table(which, kmax);
        bool all_agree = true;
        if (g.as_csv) {
            out.text << "k,enumeration,series,closed,eq28,alcuin,agree\n";
        } else if (!g.as_json) {
            out.text << "k\tenum\tseries\tclosed" << (which == qjf::AlgebraId::JS ? "\teq28\talcuin" : "")
                     << "\tagree\n";
        }
        for (const auto& r : table) {
            all_agree = all_agree && r.agree;
            if (g.as_json) {
                json rec{{"command", "dims"},
                         {"inputs", {{"algebra", algebra}, {"k", r.k}}},
                         {"result",
                          {{"enumeration", r.enumeration},
                           {"series", r.series},
                           {"closed", r.closed_thm51}}},
                         {"pass", r.agree}};
                if (r.eq28)
                    rec["result"]["eq28"] = *r.eq28;
                if (r.alcuin)
                    rec["result"]["alcuin"] = *r.alcuin;
                out.records.push_back(rec);
            } else {
                const char sep = g.as_csv ? ',' : '\t';
                out.text << r.k << sep << r.enumeration << sep << r.series << sep << r.closed_thm51;
                if (which == qjf::AlgebraId::JS)
                    out.text << sep << *r.eq28 << sep << *r.alcuin;
                else if (g.as_csv)
                    out.text << sep << sep;
                out.text << sep << (r.agree ? "yes" : "NO") << "\n";
            }
        }
        if (!g.as_json && !g.as_csv)
            out.text << (all_agree ? "all routes agree\n" : "ROUTE DISAGREEMENT\n");
        if (!all_agree)
            throw std::runtime_error("dimension routes disagree");
        return;
    }
    const auto series = qjf::dims_by_series(which, kmax);
    if (g.as_csv)
        out.text << "k,dim\n";
    for (int k = 0; k <= kmax; ++k) {
        if (g.as_json) {
            out.records.push_back(json{{"command", "dims"},
                                       {"inputs", {{"algebra", algebra}, {"k", k}}},
                                       {"result", series[static_cast<std::size_t>(k)]}});
        } else {
            out.text << k << (g.as_csv ? "," : "\t") << series[static_cast<std::size_t>(k)] << "\n";
        }
    }
}

void run_series(Output& out, const GlobalOptions& g, const std::string& what, int k, int terms)
{
    if (what == "ek") {
        if (k < 2 || k % 2 != 0)
            throw CLI::ValidationError("--k", "ek needs an even weight >= 2");
        // e_k = pi^k * sum_n coeff(n) q^n with exact rational coefficients.
        const qjf::Rational lead = [&] {
            qjf::Rational b = 1; // |B_k| 2^k / k!
            // Bernoulli via the generating recurrence.
            std::vector<qjf::Rational> bern{1};
            for (int m = 1; m <= k; ++m) {
                qjf::Rational acc(0);
                for (int j = 0; j < m; ++j)
                    acc += qjf::Rational(qjf::binomial(m + 1, j)) * bern[static_cast<std::size_t>(j)];
                bern.push_back(-acc / qjf::Rational(m + 1));
            }
            b = abs(bern[static_cast<std::size_t>(k)]);
            return qjf::Rational(qjf::Integer(1) << k) * b / qjf::Rational(qjf::factorial(k));
        }();
        const qjf::Rational bk = [&] {
            std::vector<qjf::Rational> bern{1};
            for (int m = 1; m <= k; ++m) {
                qjf::Rational acc(0);
                for (int j = 0; j < m; ++j)
                    acc += qjf::Rational(qjf::binomial(m + 1, j)) * bern[static_cast<std::size_t>(j)];
                bern.push_back(-acc / qjf::Rational(m + 1));
            }
            return bern[static_cast<std::size_t>(k)];
        }();
        if (!g.as_json)
            out.text << "e_" << k << " = pi^" << k << " * sum_n a(n) q^n\n";
        for (int n = 0; n <= terms; ++n) {
            qjf::Rational a = lead;
            if (n > 0) {
                qjf::Integer sig = 0;
                for (int d = 1; d <= n; ++d)
                    if (n % d == 0) {
                        qjf::Integer p = 1;
                        for (int i = 0; i < k - 1; ++i)
                            p *= d;
                        sig += p;
                    }
                a = lead * (qjf::Rational(-2 * k) / bk) * qjf::Rational(sig);
            }
            if (g.as_json)
                out.records.push_back(json{{"command", "series"},
                                           {"inputs", {{"what", what}, {"k", k}, {"n", n}}},
                                           {"result", qjf::to_string(a)}});
            else
                out.text << n << "\t" << qjf::to_string(a) << "\n";
        }
        return;
    }
    if (what != "wp" && what != "e1")
        throw CLI::ValidationError("--what", "expected ek, wp or e1");
    // Laurent coefficients as exact forms in the generators.
    if (!g.as_json)
        out.text << (what == "wp" ? "wp(tau,z) = z^-2 + sum (2n+1) e_{2n+2} z^2n\n"
                                  : "E1(tau,z) = z^-1 - sum e_{2n+2} z^(2n+1)\n");
    for (int n = 0; n <= terms; ++n) {
        int order;
        qjf::Form coeff;
        if (what == "wp") {
            order = n == 0 ? -2 : 2 * n;
            coeff = n == 0 ? qjf::Form(1)
                           : qjf::Scalar(2 * n + 1) * qjf::eisenstein(2 * n + 2);
        } else {
            order = n == 0 ? -1 : 2 * n - 1;
            coeff = n == 0 ? qjf::Form(1) : -qjf::eisenstein(2 * n);
        }
        if (g.as_json)
            out.records.push_back(json{{"command", "series"},
                                       {"inputs", {{"what", what}, {"order", order}}},
                                       {"result", qjf::to_string(coeff)}});
        else
            out.text << "z^" << order << "\t" << qjf::to_string(coeff) << "\n";
    }
}

int run_verify(Output& out, const GlobalOptions& g, const std::string& suite_name,
               std::uint64_t seed)
{
    const auto suite = qjf::verify::suite_from_name(suite_name);
    if (!suite)
        throw CLI::ValidationError("--suite", "unknown suite '" + suite_name + "'");
    qjf::verify::Options opt;
    opt.seed = seed;
    opt.tol = g.tol;
    opt.n_q = g.n_q;
    opt.n_z = g.n_z;
    const auto results = qjf::verify::run_suite(*suite, opt);
    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass)
            ++failures;
        if (g.as_json) {
            json rec{{"command", "verify"},
                     {"inputs",
                      {{"suite", suite_name},
                       {"seed", seed},
                       {"tol", g.tol},
                       {"nq", g.n_q},
                       {"nz", g.n_z}}},
                     {"check", r.name},
                     {"pass", r.pass}};
            if (!r.detail.empty())
                rec["detail"] = r.detail;
            if (r.residual)
                rec["residual"] = *r.residual;
            out.records.push_back(rec);
        } else {
            out.text << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty())
                out.text << "  [" << r.detail << "]";
            out.text << "\n";
        }
    }
    if (!g.as_json)
        out.text << results.size() - static_cast<std::size_t>(failures) << "/" << results.size()
                 << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact kernel for quasi-Jacobi singular forms of index zero"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags (--json, --tol, ...) may follow the subcommand

    GlobalOptions g;
    app.add_flag("--json", g.as_json, "emit one JSON record per result");
    app.add_flag("--csv", g.as_csv, "emit CSV (dimension tables)");
    app.add_option("--out", g.out_file, "write output to FILE instead of stdout");
    app.add_option("--tol", g.tol, "numeric tolerance")->envname("QJF_TOL");
    app.add_option("--nq", g.n_q, "Fourier truncation")->envname("QJF_NQ");
    app.add_option("--nz", g.n_z, "Laurent truncation")->envname("QJF_NZ");

    std::string expr1, expr2, op, family_name, algebra = "js", suite = "all", what;
    int n = 0, kmax = 12, k = 0, terms = 10, j1 = 0, j2 = 0, order = 2;
    std::uint64_t seed = 12345;
    std::string route = "series";

    auto* cmd_parse = app.add_subcommand("parse", "parse an expression and print its canonical form");
    cmd_parse->add_option("expr", expr1)->required();

    auto* cmd_derive = app.add_subcommand("derive", "apply a derivation");
    cmd_derive->add_option("--op", op, "dz|dtau|ob|delta|theta|d")->required();
    cmd_derive->add_option("expr", expr1)->required();

    auto* cmd_bracket = app.add_subcommand("bracket", "bracket of two forms");
    cmd_bracket->add_option("--family", family_name, "rc|rcd|tv")->required();
    cmd_bracket->add_option("--n", n)->required();
    cmd_bracket->add_option("expr1", expr1)->required();
    cmd_bracket->add_option("expr2", expr2)->required();

    auto* cmd_depth = app.add_subcommand("depth", "weight and double depth of a form");
    cmd_depth->add_option("expr", expr1)->required();

    auto* cmd_qop = app.add_subcommand("qop", "depth-expansion coefficient Q_{j1,j2}");
    cmd_qop->add_option("j1", j1)->required();
    cmd_qop->add_option("j2", j2)->required();
    cmd_qop->add_option("expr", expr1)->required();

    auto* cmd_dims = app.add_subcommand("dims", "graded dimensions");
    cmd_dims->add_option("--algebra", algebra, "js|js0inf|jsinf0|jsinf");
    cmd_dims->add_option("--kmax", kmax);
    cmd_dims->add_option("--route", route, "series (default) or all");

    auto* cmd_basis = app.add_subcommand("basis", "monomial basis of a graded piece");
    cmd_basis->add_option("--k", k)->required();
    cmd_basis->add_option("--algebra", algebra);

    auto* cmd_eis = app.add_subcommand("eisenstein", "Eisenstein form of even weight k");
    cmd_eis->add_option("--k", k)->required();

    auto* cmd_star = app.add_subcommand("star", "truncated star product coefficients");
    cmd_star->add_option("--family", family_name, "rc|rcd|tv")->required();
    cmd_star->add_option("--order", order)->required();
    cmd_star->add_option("expr1", expr1)->required();
    cmd_star->add_option("expr2", expr2)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "identities|stability|associativity|dimensions|analytic|all");
    cmd_verify->add_option("--seed", seed);

    auto* cmd_series = app.add_subcommand("series", "expansion coefficients");
    cmd_series->add_option("--what", what, "ek|wp|e1")->required();
    cmd_series->add_option("--k", k);
    cmd_series->add_option("--terms", terms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    try {
        int status = 0;
        auto print_form = [&](const std::string& command, const qjf::Form& f,
                              std::initializer_list<std::pair<std::string, std::string>> inputs) {
            if (g.as_json) {
                json in;
                for (const auto& [key, value] : inputs)
                    in[key] = value;
                out.records.push_back(
                    json{{"command", command}, {"inputs", in}, {"result", qjf::to_string(f)}});
            } else {
                out.text << qjf::to_string(f) << "\n";
            }
        };

        if (*cmd_parse) {
            print_form("parse", qjf::parse_form(expr1), {{"expr", expr1}});
        } else if (*cmd_derive) {
            const qjf::Form f = qjf::parse_form(expr1);
            qjf::Form r;
            if (op == "dz")
                r = qjf::dz(f);
            else if (op == "dtau")
                r = qjf::dtau(f);
            else if (op == "ob")
                r = qjf::oberdieck(f);
            else if (op == "delta")
                r = qjf::delta(f);
            else if (op == "theta")
                r = qjf::theta(f);
            else if (op == "d")
                r = qjf::d_deriv(f);
            else
                throw CLI::ValidationError("--op", "unknown derivation '" + op + "'");
            print_form("derive", r, {{"op", op}, {"expr", expr1}});
        } else if (*cmd_bracket) {
            const qjf::Form r =
                qjf::bracket(family_from_name(family_name), n, qjf::parse_form(expr1), qjf::parse_form(expr2));
            print_form("bracket", r,
                       {{"family", family_name}, {"n", std::to_string(n)}, {"expr1", expr1}, {"expr2", expr2}});
        } else if (*cmd_depth) {
            const qjf::Form f = qjf::parse_form(expr1);
            if (f.is_zero())
                throw std::invalid_argument("depth undefined for zero");
            const auto p = qjf::profile(f);
            if (g.as_json) {
                json rec{{"command", "depth"},
                         {"inputs", {{"expr", expr1}}},
                         {"result", {{"depth", {p.depth.first, p.depth.second}}}}};
                rec["result"]["weight"] = p.weight ? json(*p.weight) : json(nullptr);
                out.records.push_back(rec);
            } else {
                out.text << "weight ";
                if (p.weight)
                    out.text << *p.weight;
                else
                    out.text << "mixed";
                out.text << "  depth (" << p.depth.first << ", " << p.depth.second << ")\n";
            }
        } else if (*cmd_qop) {
            print_form("qop", qjf::q_op(j1, j2, qjf::parse_form(expr1)),
                       {{"j1", std::to_string(j1)}, {"j2", std::to_string(j2)}, {"expr", expr1}});
        } else if (*cmd_dims) {
            run_dims(out, g, algebra, kmax, route);
        } else if (*cmd_basis) {
            for (const auto& m : qjf::basis_monomials(k, algebra_from_name(algebra))) {
                if (g.as_json)
                    out.records.push_back(json{{"command", "basis"},
                                               {"inputs", {{"algebra", algebra}, {"k", k}}},
                                               {"result", monomial_name(m)}});
                else
                    out.text << monomial_name(m) << "\n";
            }
        } else if (*cmd_eis) {
            print_form("eisenstein", qjf::eisenstein(k), {{"k", std::to_string(k)}});
        } else if (*cmd_star) {
            const auto s = qjf::star_truncated(order, qjf::parse_form(expr1), qjf::parse_form(expr2),
                                               family_from_name(family_name));
            for (int i = 0; i <= s.order(); ++i) {
                if (g.as_json)
                    out.records.push_back(json{{"command", "star"},
                                               {"inputs",
                                                {{"family", family_name},
                                                 {"order", i},
                                                 {"expr1", expr1},
                                                 {"expr2", expr2}}},
                                               {"result", qjf::to_string(s.at(i))}});
                else
                    out.text << "hbar^" << i << "\t" << qjf::to_string(s.at(i)) << "\n";
            }
        } else if (*cmd_verify) {
            status = run_verify(out, g, suite, seed);
        } else if (*cmd_series) {
            run_series(out, g, what, k, terms);
        }

        out.emit(g);
        return status;
    } catch (const qjf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qjf::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
