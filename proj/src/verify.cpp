#include "qjf/verify.hpp"

#include "qjf/brackets.hpp"
#include "qjf/calculus.hpp"
#include "qjf/dimensions.hpp"
#include "qjf/io.hpp"
#include "qjf/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qjf::verify {

namespace {

constexpr double kPi = std::numbers::pi;

Form gen(Gen g)
{
    return Form::generator(g);
}

Scalar frac(long long num, long long den)
{
    return Scalar(Rational(num, den));
}

std::string fmt_residual(double r)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << r;
    return os.str();
}

class Reporter {
public:
    void exact(const std::string& name, bool ok, const std::string& detail = "")
    {
        results_.push_back({name, ok, detail, std::nullopt});
    }

    void bounded(const std::string& name, double residual, double bound)
    {
        results_.push_back({name, residual <= bound,
                            "residual " + fmt_residual(residual) + " (bound " + fmt_residual(bound) + ")",
                            residual});
    }

    std::vector<CheckResult> take()
    {
        std::sort(results_.begin(), results_.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        return std::move(results_);
    }

    void append(std::vector<CheckResult> more)
    {
        for (auto& r : more)
            results_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult> results_;
};

// ---------------------------------------------------------------------------
// identities suite
// ---------------------------------------------------------------------------

void check_exact_identities(Reporter& rep)
{
    const Form P = gen(Gen::P), Pz = gen(Gen::Pz), E4 = gen(Gen::E4);
    const Form E1 = gen(Gen::E1), E2 = gen(Gen::E2);
    const Form& e6 = e6_form();

    rep.exact("identities.ramanujan_e4", dtau(E4) == E4 * E2 - frac(7, 2) * e6);
    rep.exact("identities.ramanujan_e6",
              dtau(e6) == frac(3, 2) * (e6 * E2) - frac(15, 7) * (E4 * E4));
    rep.exact("identities.ob_wp", oberdieck(P) == Scalar(-2) * (P * P) + Scalar(20) * E4);
    rep.exact("identities.ob_wpz", oberdieck(Pz) == Scalar(-3) * (P * Pz));
    rep.exact("identities.ob_e4", oberdieck(E4) == Scalar(-14) * e6);
    rep.exact("identities.ob_e1", oberdieck(E1) == frac(1, 2) * Pz - E1 * E2);
    rep.exact("identities.ob_e2", oberdieck(E2) == -(E2 * E2) - Scalar(5) * E4);
    rep.exact("identities.e8", eisenstein(8) == frac(3, 7) * (E4 * E4));
    rep.exact("identities.eq6_closure",
              (Pz * Pz - Scalar(4) * (P * P * P) + Scalar(60) * (E4 * P) + Scalar(140) * e6)
                  .is_zero());
}

void check_derivation_algebra(Reporter& rep, const Options& opt)
{
    const int weights[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

    bool leibniz_ok = true;
    for (int i = 0; i < 50 && leibniz_ok; ++i) {
        const Form f = random_homogeneous(weights[i % 10], AlgebraId::JSinf, opt.seed + 2 * i);
        const Form g = random_homogeneous(weights[(i * 3 + 1) % 10], AlgebraId::JSinf, opt.seed + 2 * i + 1);
        const Form fg = f * g;
        leibniz_ok = leibniz_ok && dz(fg) == dz(f) * g + f * dz(g);
        leibniz_ok = leibniz_ok && dtau(fg) == dtau(f) * g + f * dtau(g);
        leibniz_ok = leibniz_ok && d_deriv(fg) == d_deriv(f) * g + f * d_deriv(g);
        leibniz_ok = leibniz_ok && theta(fg) == theta(f) * g + f * theta(g);
    }
    rep.exact("identities.leibniz", leibniz_ok, "dz, dtau, d, theta on 50 random pairs");

    bool ob_leibniz = true;
    for (int i = 0; i < 20 && ob_leibniz; ++i) {
        const Form f = random_homogeneous(weights[i % 10], AlgebraId::JSinf, opt.seed + 101 + i);
        const Form g = random_homogeneous(weights[(i * 7 + 2) % 10], AlgebraId::JSinf, opt.seed + 301 + i);
        ob_leibniz = oberdieck(f * g) == oberdieck(f) * g + f * oberdieck(g);
    }
    rep.exact("identities.ob_leibniz", ob_leibniz, "graded Leibniz on 20 homogeneous pairs");

    bool commute = true;
    for (int gi = 0; gi < 5; ++gi) {
        const Form g = gen(static_cast<Gen>(gi));
        commute = commute && dtau(dz(g)) == dz(dtau(g));
    }
    for (int i = 0; i < 20 && commute; ++i) {
        Form f = random_homogeneous(weights[i % 10], AlgebraId::JSinf, opt.seed + 401 + i);
        if (i % 3 == 0) // mix weights as well
            f += random_homogeneous(weights[(i + 4) % 10], AlgebraId::JSinf, opt.seed + 501 + i);
        commute = dtau(dz(f)) == dz(dtau(f));
    }
    rep.exact("identities.commutation", commute, "generators and 20 random forms");

    bool dtheta = true, dthetap = true, theta_routes = true, d_routes = true;
    const Form E1 = gen(Gen::E1), E2 = gen(Gen::E2);
    for (int i = 0; i < 20; ++i) {
        Form f = random_homogeneous(weights[(i * 3) % 10], AlgebraId::JSinf, opt.seed + 601 + i);
        if (i % 2 == 1)
            f += random_homogeneous(weights[(i + 5) % 10], AlgebraId::JSinf, opt.seed + 701 + i);
        dtheta = dtheta && delta(theta(f)) - theta(delta(f)) == theta(f);
        const Form tp = frac(1, 4) * oberdieck(f);
        const Form tpd = frac(1, 4) * oberdieck(delta(f));
        dthetap = dthetap && delta(tp) - tpd == tp;
        theta_routes = theta_routes && theta(f) == frac(1, 4) * (oberdieck(f) - E1 * dz(f));
        d_routes = d_routes && d_deriv(f) == frac(1, 4) * oberdieck(f) + frac(1, 2) * (E2 * delta(f));
    }
    rep.exact("identities.delta_theta", dtheta, "delta theta - theta delta = theta, 20 forms");
    rep.exact("identities.delta_thetaprime", dthetap, "with theta' = Ob*/4, 20 forms");
    rep.exact("identities.theta_two_routes", theta_routes);
    rep.exact("identities.d_two_routes", d_routes);
}

bool within_depth_union(const Form& f, int a1, int a2, int b1, int b2)
{
    // Every monomial lies in JS^{<=a1,a2} or in JS^{<=b1,b2}.
    for (const auto& [m, s] : f.terms()) {
        const bool in_a = m.e[4] <= a1 && m.e[3] <= a2;
        const bool in_b = m.e[4] <= b1 && m.e[3] <= b2;
        if (!in_a && !in_b)
            return false;
    }
    return true;
}

void check_depth_and_q_recurrences(Reporter& rep, const Options& opt)
{
    bool depth_ok = true, qdz_ok = true, qdtau_ok = true, eq44_ok = true, lemma22_ok = true;
    const Form E1 = gen(Gen::E1), E2 = gen(Gen::E2);
    const Scalar c = Scalar::c_power(1);

    for (int s1 = 0; s1 <= 3; ++s1)
        for (int s2 = 0; s2 <= 3; ++s2) {
            int produced = 0;
            for (int extra = 0; extra <= 8 && produced < 20; ++extra) {
                const int k = 2 * s1 + s2 + extra;
                if (k > 16)
                    break;
                for (int rep_i = 0; rep_i < 3 && produced < 20; ++rep_i) {
                    Form f;
                    try {
                        f = random_homogeneous_with_depth(
                            k, s1, s2, opt.seed + 1000 * produced + 13 * static_cast<std::uint64_t>(extra));
                    } catch (const std::invalid_argument&) {
                        break; // no corner monomial at this weight
                    }
                    ++produced;

                    const Form fz = dz(f);
                    const Form ft = dtau(f);
                    const Form fo = oberdieck(f);
                    depth_ok = depth_ok && within_depth_union(fz, s1 + 1, s2 - 1, s1, s2);
                    depth_ok = depth_ok && within_depth_union(ft, s1 + 1, s2, s1, s2 + 1);
                    depth_ok = depth_ok && within_depth_union(fo, s1 + 1, s2, s1 + 1, s2);

                    const Form rz = raw_dz(f);
                    const Form rt = raw_dtau(f);
                    for (int j1 = 0; j1 <= s1 + 2; ++j1)
                        for (int j2 = 0; j2 <= s2 + 2; ++j2) {
                            qdz_ok = qdz_ok
                                     && q_op(j1, j2, rz)
                                            == raw_dz(q_op(j1, j2, f))
                                                   + Scalar(j2 + 1) * q_op(j1 - 1, j2 + 1, f);
                            qdtau_ok = qdtau_ok
                                       && q_op(j1, j2, rt)
                                              == raw_dtau(q_op(j1, j2, f)) + dz(q_op(j1, j2 - 1, f))
                                                     + Scalar(k - j1 + 1) * q_op(j1 - 1, j2, f);
                            const Form q = q_op(j1, j2, f);
                            eq44_ok = eq44_ok
                                      && q_op(j1, j2, fo)
                                             == Scalar(4) * dtau(q) + E1 * dz(q)
                                                    - Scalar(k) * (E2 * q)
                                                    + (c * Scalar(j1 + j2 - 1)) * q_op(j1 - 1, j2, f)
                                                    + Scalar(j2 + 1) * (E1 * q_op(j1 - 1, j2 + 1, f));
                        }

                    // Top-corner coefficient: a Jacobi singular form of
                    // weight k - 2 s1 - s2, depth (0,0).
                    const Form top = q_op(s1, s2, f);
                    if (!top.is_zero()) {
                        lemma22_ok = lemma22_ok && top.depth() == std::pair<int, int>{0, 0};
                        lemma22_ok = lemma22_ok && top.weight() == k - 2 * s1 - s2;
                    }
                }
            }
        }

    rep.exact("identities.depth_bounds", depth_ok, "dz, dtau, Ob* on profiles up to (3,3)");
    rep.exact("identities.q_dz_recurrence", qdz_ok);
    rep.exact("identities.q_dtau_recurrence", qdtau_ok);
    rep.exact("identities.eq44_ob_expansion", eq44_ok);
    rep.exact("identities.lemma22_top_coefficient", lemma22_ok);
}

void check_table2_stability(Reporter& rep, const Options& opt)
{
    const Form P = gen(Gen::P), E1 = gen(Gen::E1), E4 = gen(Gen::E4);

    bool yes_rows = true;
    for (int i = 0; i < 10; ++i) {
        const int even_k = 4 + 2 * (i % 5); // 4..12
        const Form m = random_modular(even_k, opt.seed + i);
        yes_rows = yes_rows && is_modular(dz(m)) && is_modular(oberdieck(m));
        const Form q = random_quasimodular(2 + 2 * (i % 6), opt.seed + 40 + i);
        yes_rows = yes_rows && dz(q).is_zero() && is_quasimodular(dtau(q)) && is_quasimodular(oberdieck(q));
        const Form j = random_homogeneous(2 + (i % 9), AlgebraId::JS, opt.seed + 80 + i);
        yes_rows = yes_rows && dz(j).in_subalgebra(AlgebraId::JS) && oberdieck(j).in_subalgebra(AlgebraId::JS);
        const Form qm = random_homogeneous(2 + (i % 9), AlgebraId::JSinf0, opt.seed + 120 + i);
        yes_rows = yes_rows && dz(qm).in_subalgebra(AlgebraId::JSinf0)
                   && oberdieck(qm).in_subalgebra(AlgebraId::JSinf0);
        const Form any = random_homogeneous(1 + (i % 10), AlgebraId::JSinf, opt.seed + 160 + i);
        yes_rows = yes_rows && dz(any).in_subalgebra(AlgebraId::JSinf)
                   && dtau(any).in_subalgebra(AlgebraId::JSinf);
    }
    rep.exact("identities.table2_stable_rows", yes_rows, "M, M^inf, JS, JS(inf,0), JS(inf) rows");

    bool witnesses = true;
    witnesses = witnesses && !is_modular(dtau(E4));                           // M not dtau-stable
    witnesses = witnesses && !dtau(P).in_subalgebra(AlgebraId::JS);           // JS not dtau-stable
    witnesses = witnesses && !dtau(P).in_subalgebra(AlgebraId::JSinf0);       // JS(inf,0) not dtau-stable
    witnesses = witnesses && !dz(E1).in_subalgebra(AlgebraId::JS0inf);        // JS(0,inf) not dz-stable
    witnesses = witnesses && !dtau(E1).in_subalgebra(AlgebraId::JS0inf);      // nor dtau-stable
    witnesses = witnesses && !oberdieck(E1).in_subalgebra(AlgebraId::JS0inf); // nor Ob*-stable
    rep.exact("identities.table2_counterexamples", witnesses);

    bool ob_js = true;
    for (int i = 0; i < 10; ++i) {
        const Form f = random_homogeneous(2 + (i % 9), AlgebraId::JS, opt.seed + 200 + i);
        const Form of = oberdieck(f);
        ob_js = ob_js && (of.is_zero() || of.depth() == std::pair<int, int>{0, 0});
    }
    rep.exact("identities.ob_preserves_js_depth", ob_js);
}

void identities_suite(Reporter& rep, const Options& opt)
{
    check_exact_identities(rep);
    check_derivation_algebra(rep, opt);
    check_depth_and_q_recurrences(rep, opt);
    check_table2_stability(rep, opt);
}

// ---------------------------------------------------------------------------
// stability suite (brackets)
// ---------------------------------------------------------------------------

std::vector<int> weight_pool(AlgebraId which, int wmax)
{
    std::vector<int> pool;
    for (int k = 1; k <= wmax; ++k)
        if (!basis_monomials(k, which).empty())
            pool.push_back(k);
    return pool;
}

void stability_suite(Reporter& rep, const Options& opt)
{
    struct Claim {
        const char* name;
        BracketFamily family;
        AlgebraId domain;
    };
    const Claim claims[] = {
        {"stability.rc_on_quasielliptic", BracketFamily::RC, AlgebraId::JS0inf},
        {"stability.rcd_on_jacobi", BracketFamily::RCd, AlgebraId::JS},
        {"stability.tv_on_quasimodular", BracketFamily::TV, AlgebraId::JSinf0},
        {"stability.rcd_on_quasimodular", BracketFamily::RCd, AlgebraId::JSinf0},
    };
    for (const auto& claim : claims) {
        const auto pool = weight_pool(claim.domain, 12);
        bool ok = true;
        for (int i = 0; i < 20 && ok; ++i) {
            const int k = pool[static_cast<std::size_t>(i) % pool.size()];
            const int l = pool[static_cast<std::size_t>(i * 5 + 2) % pool.size()];
            const Form f = random_homogeneous(k, claim.domain, opt.seed + 17 * i);
            const Form g = random_homogeneous(l, claim.domain, opt.seed + 17 * i + 5);
            const auto list = bracket_list(claim.family, 4, f, g);
            for (int n = 1; n <= 4; ++n)
                ok = ok && list[static_cast<std::size_t>(n)].in_subalgebra(claim.domain);
        }
        rep.exact(claim.name, ok, "n = 1..4, 20 random homogeneous pairs");
    }

    {
        // {f, E1}_n stays quasimodular as well.
        const auto pool = weight_pool(AlgebraId::JSinf0, 12);
        const Form E1 = gen(Gen::E1);
        bool ok = true;
        for (int i = 0; i < 20 && ok; ++i) {
            const int k = pool[static_cast<std::size_t>(i * 3 + 1) % pool.size()];
            const Form f = random_homogeneous(k, AlgebraId::JSinf0, opt.seed + 900 + i);
            const auto list = bracket_list(BracketFamily::TV, 4, f, E1);
            for (int n = 1; n <= 4; ++n)
                ok = ok && list[static_cast<std::size_t>(n)].in_subalgebra(AlgebraId::JSinf0);
        }
        rep.exact("stability.tv_with_e1", ok, "{f, E1}_n for quasimodular f");
    }

    {
        const Form P = gen(Gen::P), E4 = gen(Gen::E4), E1 = gen(Gen::E1);
        const Form w_rc = rc_bracket(1, E4, P);
        const Form w_rcd = rc_d_bracket(1, E1, E4);
        const Form w_tv = transvectant(1, E4, P);
        bool ok = !w_rc.in_subalgebra(AlgebraId::JSinf0) && !w_rc.in_subalgebra(AlgebraId::JS)
                  && !w_rcd.in_subalgebra(AlgebraId::JS0inf)
                  && !w_tv.in_subalgebra(AlgebraId::JS0inf);
        rep.exact("stability.negative_witnesses", ok,
                  "[e4,wp]_1, [[E1,e4]]_1, {e4,wp}_1 leave the stated subalgebras");
    }

    {
        // On modular forms: RC and RCd coincide, stay modular; TV vanishes.
        const int weights[] = {4, 6, 8, 10, 12};
        bool coincide = true, stay_modular = true, tv_vanish = true;
        for (int i = 0; i < 20; ++i) {
            const int k = weights[i % 5];
            const int l = weights[(i * 2 + 1) % 5];
            const Form f = random_modular(k, opt.seed + 33 * i);
            const Form g = random_modular(l, opt.seed + 33 * i + 11);
            const auto rc = bracket_list(BracketFamily::RC, 4, f, g);
            const auto rcd = bracket_list(BracketFamily::RCd, 4, f, g);
            const auto tv = bracket_list(BracketFamily::TV, 4, f, g);
            for (int n = 1; n <= 4; ++n) {
                coincide = coincide && rc[static_cast<std::size_t>(n)] == rcd[static_cast<std::size_t>(n)];
                stay_modular = stay_modular && is_modular(rc[static_cast<std::size_t>(n)]);
                tv_vanish = tv_vanish && tv[static_cast<std::size_t>(n)].is_zero();
            }
        }
        rep.exact("stability.modular_rc_rcd_coincide", coincide, "20 modular pairs, n = 1..4");
        rep.exact("stability.modular_rc_stays_modular", stay_modular);
        rep.exact("stability.modular_tv_vanishes", tv_vanish);
    }
}

// ---------------------------------------------------------------------------
// associativity suite
// ---------------------------------------------------------------------------

void associativity_suite(Reporter& rep, const Options& opt)
{
    const int weights[] = {1, 2, 3, 4, 5, 6, 7, 8};

    auto all_zero = [](const std::vector<Form>& defect) {
        for (const auto& d : defect)
            if (!d.is_zero())
                return false;
        return true;
    };

    struct Case {
        const char* name;
        BracketFamily family;
        int order;
    };
    const Case cases[] = {
        {"associativity.tv_through_order4", BracketFamily::TV, 4},
        {"associativity.rc_through_order3", BracketFamily::RC, 3},
        {"associativity.rcd_through_order3", BracketFamily::RCd, 3},
    };
    for (const auto& c : cases) {
        bool ok = true;
        for (int i = 0; i < 20 && ok; ++i) {
            const Form f = random_homogeneous(weights[i % 8], AlgebraId::JSinf, opt.seed + 7 * i);
            const Form g = random_homogeneous(weights[(i * 3 + 1) % 8], AlgebraId::JSinf, opt.seed + 7 * i + 2);
            const Form h = random_homogeneous(weights[(i * 5 + 2) % 8], AlgebraId::JSinf, opt.seed + 7 * i + 4);
            ok = all_zero(associativity_defect(c.order, f, g, h, c.family));
        }
        rep.exact(c.name, ok, "20 random homogeneous triples, weights <= 8");
    }

    {
        bool ok = true;
        for (int i = 0; i < 10 && ok; ++i) {
            const Form f = random_homogeneous(weights[(i * 3) % 6], AlgebraId::JSinf, opt.seed + 1200 + i);
            const Form g = random_homogeneous(weights[(i + 2) % 6], AlgebraId::JSinf, opt.seed + 1300 + i);
            for (int n = 0; n <= 3 && ok; ++n)
                ok = tv_recurrence_defect(n, f, g).is_zero();
        }
        ok = ok && tv_recurrence_defect(1, gen(Gen::P), gen(Gen::E1)).is_zero();
        rep.exact("associativity.tv_recurrence", ok, "n <= 3, 10 random pairs");
    }

    {
        bool ok = lemma45_defect(1, gen(Gen::P), gen(Gen::E4)).is_zero()
                  && lemma45_defect(3, gen(Gen::E2), gen(Gen::P)).is_zero();
        for (int i = 0; i < 10 && ok; ++i) {
            const Form f = random_homogeneous(2 + (i % 5), AlgebraId::JSinf0, opt.seed + 1400 + i);
            const Form g = random_homogeneous(2 + ((i * 3 + 1) % 5), AlgebraId::JSinf0, opt.seed + 1500 + i);
            for (int n = 1; n <= 3 && ok; ++n)
                ok = lemma45_defect(n, f, g).is_zero();
        }
        rep.exact("associativity.e1_shuffle_identity", ok, "n <= 3");
    }
}

// ---------------------------------------------------------------------------
// dimensions suite
// ---------------------------------------------------------------------------

void dimensions_suite(Reporter& rep, const Options&)
{
    {
        const long long expected[][2] = {{0, 1}, {1, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 5}, {12, 7}};
        bool ok = true;
        for (const auto& [k, d] : expected) {
            ok = ok && dims_by_enumeration(AlgebraId::JS, static_cast<int>(k)) == d;
            ok = ok && ds_closed(k) == d;
            ok = ok && dims_closed_thm51(AlgebraId::JS, k) == d;
        }
        rep.exact("dimensions.reference_table", ok, "k = 0,1,2,4,...,12 -> 1,0,1,2,...,7");
    }

    {
        bool ok = true;
        for (AlgebraId which : {AlgebraId::JS, AlgebraId::JS0inf, AlgebraId::JSinf0, AlgebraId::JSinf}) {
            const auto series = dims_by_series(which, 100);
            for (int k = 0; k <= 100 && ok; ++k) {
                const long long s = series[static_cast<std::size_t>(k)];
                ok = ok && dims_by_enumeration(which, k) == s && dims_closed_thm51(which, k) == s;
                if (which == AlgebraId::JS)
                    ok = ok && ds_closed(k) == s && ds_via_modular_sum(k) == s;
            }
        }
        rep.exact("dimensions.four_route_agreement", ok, "all four algebras, k <= 100");
    }

    {
        const auto js = dims_by_series(AlgebraId::JS, 100);
        const auto j0 = dims_by_series(AlgebraId::JS0inf, 100);
        const auto jm = dims_by_series(AlgebraId::JSinf0, 100);
        const auto ji = dims_by_series(AlgebraId::JSinf, 100);
        bool ok = true;
        for (std::size_t k = 0; k <= 100; ++k)
            ok = ok && js[k] <= j0[k] && j0[k] <= ji[k] && js[k] <= jm[k] && jm[k] <= ji[k];
        rep.exact("dimensions.subalgebra_monotonicity", ok, "JS <= JS(0,inf), JS(inf,0) <= JS(inf)");
    }

    rep.exact("dimensions.recurrences", ds_recurrences_check(200), "k <= 200");
    rep.exact("dimensions.alcuin_identity", ds_vs_alcuin_check(500), "d(k) = t(k+3), k <= 500");
    rep.exact("dimensions.compact_formulas", compact_formula_check(300), "k <= 300");
}

// ---------------------------------------------------------------------------
// analytic suite
// ---------------------------------------------------------------------------

const std::vector<JacobiGroupElement>& test_elements()
{
    static const std::vector<JacobiGroupElement> elems = [] {
        std::vector<JacobiGroupElement> v;
        v.push_back(JacobiGroupElement::S());
        v.push_back(JacobiGroupElement::T());
        v.push_back(JacobiGroupElement::S() * JacobiGroupElement::T());
        v.push_back(JacobiGroupElement::translation(1, 0));
        v.push_back(JacobiGroupElement::translation(0, 1));
        v.push_back(JacobiGroupElement(0, -1, 1, 0, 1, -1));
        return v;
    }();
    return elems;
}

const std::vector<Complex>& test_taus()
{
    static const std::vector<Complex> taus = {
        {0.0, 2.0}, {0.0, 1.6}, {0.25, 1.4}, {0.0, 1.0}, {-0.35, 1.8}};
    return taus;
}

bool point_evaluable(Complex tau, Complex z, const NumericContext& ctx)
{
    try {
        (void)eval_wp(tau, z, ctx);
        (void)eval_E1(tau, z, ctx);
    } catch (const DomainError&) {
        return false;
    }
    // Keep a margin from the pole as well: series tails there overwhelm
    // the residual bounds long before the hard guards trip.
    const double ratio = std::abs(lattice_reduce(tau, z).z_red) / lattice_min_distance(tau);
    return ratio >= 0.10 && ratio <= 0.50;
}

// Deterministic points within the guards of both (tau, z) and A.(tau, z).
std::vector<SamplePoint> guarded_points(const JacobiGroupElement& A, int count,
                                        const NumericContext& ctx)
{
    std::vector<SamplePoint> pts;
    const auto& taus = test_taus();
    for (int i = 0; pts.size() < static_cast<std::size_t>(count) && i < 8 * count; ++i) {
        const Complex tau = taus[static_cast<std::size_t>(i) % taus.size()];
        const double dmin = lattice_min_distance(tau);
        double rho = 0.30;
        const double angle = 0.4 + 2.39996323 * i; // golden-angle sweep
        for (int attempt = 0; attempt < 6; ++attempt, rho *= 0.6) {
            const Complex z = rho * dmin * Complex(std::cos(angle), 0.8 * std::sin(angle));
            const auto [t2, z2] = group_action(A, tau, z);
            if (point_evaluable(tau, z, ctx) && point_evaluable(t2, z2, ctx)) {
                pts.push_back({tau, z});
                break;
            }
        }
    }
    if (pts.size() < static_cast<std::size_t>(count))
        throw std::logic_error("could not build enough guarded sample points");
    return pts;
}

double contour_coefficient_mismatch(bool wp_series, Complex tau, const NumericContext& ctx)
{
    // Extract Laurent coefficients of the q,w representation by contour
    // sums and compare against the coefficient data of the z-series:
    // wp: z^-2 -> 1, z^(2n) -> (2n+1) e_{2n+2}; E1: z^-1 -> 1,
    // z^(2n+1) -> -e_{2n+2}; all other orders vanish.
    // The radius sits close to the convergence boundary: small radii
    // amplify rounding noise by rho^-order at the high extraction orders.
    const int K = 256;
    const double rho = 0.7 * lattice_min_distance(tau);
    std::vector<Complex> samples(K);
    for (int t = 0; t < K; ++t) {
        const double ang = 2.0 * kPi * t / K;
        const Complex z = rho * Complex(std::cos(ang), std::sin(ang));
        samples[static_cast<std::size_t>(t)] =
            wp_series ? eval_wp_qw(tau, z, ctx) : eval_E1_qw(tau, z, ctx);
    }
    auto coefficient = [&](int order) {
        Complex acc(0.0, 0.0);
        for (int t = 0; t < K; ++t) {
            const double ang = 2.0 * kPi * t / K;
            const Complex zinv = std::polar(1.0 / rho, -ang);
            Complex p(1.0, 0.0);
            for (int j = 0; j < std::abs(order); ++j)
                p *= order >= 0 ? zinv : 1.0 / zinv;
            acc += samples[static_cast<std::size_t>(t)] * p;
        }
        return acc / static_cast<double>(K);
    };
    double worst = 0.0;
    for (int order = -2; order <= 21; ++order) {
        Complex expected(0.0, 0.0);
        if (wp_series) {
            if (order == -2)
                expected = 1.0;
            else if (order > 0 && order % 2 == 0)
                expected = static_cast<double>(order + 1) * eval_eisenstein(order + 2, tau, ctx);
        } else {
            if (order == -1)
                expected = 1.0;
            else if (order > 0 && order % 2 == 1)
                expected = -eval_eisenstein(order + 1, tau, ctx);
        }
        const double scale = std::max(1.0, std::abs(expected));
        worst = std::max(worst, std::abs(coefficient(order) - expected) / scale);
    }
    return worst;
}

void analytic_suite(Reporter& rep, const Options& opt)
{
    const NumericContext ctx = opt.context();
    const double tol = opt.tol;

    {
        // q,w oracle admission: >= 10 Laurent coefficients per series.
        double worst = 0.0;
        for (const Complex tau : {Complex(0.0, 2.0), Complex(0.3, 1.25)}) {
            worst = std::max(worst, contour_coefficient_mismatch(true, tau, ctx));
            worst = std::max(worst, contour_coefficient_mismatch(false, tau, ctx));
        }
        rep.bounded("analytic.qw_oracle_admission", worst, 1e-9);
    }

    {
        double worst = 0.0;
        const auto& elems = test_elements();
        std::vector<SamplePoint> pts = guarded_points(JacobiGroupElement::identity(), 10, ctx);
        for (const auto& A : elems)
            for (const auto& B : elems)
                worst = std::max(worst, cocycle_relation_residual(A, B, pts));
        rep.bounded("analytic.cocycle_relations", worst, 1e-10);
    }

    {
        std::vector<Form> forms;
        for (int gi = 0; gi < 5; ++gi)
            forms.push_back(gen(static_cast<Gen>(gi)));
        for (int i = 0; i < 10; ++i)
            forms.push_back(random_homogeneous(2 + (i * 5) % 7, AlgebraId::JSinf, opt.seed + 71 * i));
        double worst = 0.0;
        for (const auto& A : test_elements()) {
            const auto pts = guarded_points(A, 5, ctx);
            for (const auto& f : forms)
                worst = std::max(worst, transformation_residual(f, A, pts, ctx));
        }
        rep.bounded("analytic.transformation_law", worst, tol);
    }

    {
        // Dual representation agreement, including translated points that
        // exercise periodicity and quasi-periodicity.
        std::vector<SamplePoint> pts;
        for (const Complex tau : {Complex(0.0, 2.0), Complex(0.2, 1.5)}) {
            const double dmin = lattice_min_distance(tau);
            const Complex base(0.31 * dmin, -0.22 * dmin);
            pts.push_back({tau, base});
            pts.push_back({tau, base + 1.0});
            pts.push_back({tau, base + tau});
            pts.push_back({tau, base - 2.0 + tau});
            pts.push_back({tau, Complex(-0.17 * dmin, 0.26 * dmin)});
        }
        const double w1 = dual_representation_residual(DualWhich::Wp, pts, ctx);
        const double w2 = dual_representation_residual(DualWhich::E1, pts, ctx);
        rep.bounded("analytic.dual_representation", std::max(w1, w2), 1e-10);
    }

    {
        // Quasi-periodicity of E1 through the q,w route alone.
        double worst = 0.0;
        for (const Complex tau : {Complex(0.0, 2.0), Complex(0.2, 1.5)}) {
            const Complex z(0.27, -0.4 * tau.imag());
            const Complex a = eval_E1_qw(tau, z + tau, ctx);
            const Complex b = eval_E1_qw(tau, z, ctx);
            worst = std::max(worst, std::abs(a - b + Complex(0.0, 2.0 * kPi)));
            const Complex pa = eval_wp_qw(tau, z + 1.0, ctx);
            const Complex pb = eval_wp_qw(tau, z, ctx);
            worst = std::max(worst, std::abs(pa - pb));
        }
        rep.bounded("analytic.qw_quasi_periodicity", worst, tol);
    }

    {
        const double r = std::abs(eval_eisenstein(6, Complex(0.0, 1.0), ctx));
        rep.bounded("analytic.e6_vanishes_at_i", r, tol);
        const Complex rho(-0.5, std::sqrt(3.0) / 2.0);
        rep.bounded("analytic.e4_vanishes_at_rho", std::abs(eval_eisenstein(4, rho, ctx)), tol);
    }

    {
        double worst = 0.0;
        const auto pts = guarded_points(JacobiGroupElement::identity(), 5, ctx);
        for (const auto& pt : pts) {
            const Complex lhs = eval_form(e6_form(), pt.tau, pt.z, ctx);
            worst = std::max(worst, std::abs(lhs - eval_eisenstein(6, pt.tau, ctx)));
            const Complex e8 = eval_form(eisenstein(8), pt.tau, pt.z, ctx);
            const Complex e4v = eval_eisenstein(4, pt.tau, ctx);
            worst = std::max(worst, std::abs(e8 - 3.0 / 7.0 * e4v * e4v));
            // Weierstrass differential equation across both evaluators.
            const Complex p = eval_wp(pt.tau, pt.z, ctx);
            const Complex pz = eval_wp_z(pt.tau, pt.z, ctx);
            const Complex e6v = eval_eisenstein(6, pt.tau, ctx);
            const Complex closure = pz * pz - 4.0 * p * p * p + 60.0 * e4v * p + 140.0 * e6v;
            worst = std::max(worst, std::abs(closure) / std::max(1.0, std::abs(p * p * p)));
        }
        rep.bounded("analytic.eisenstein_identities", worst, tol);
    }

    {
        // Central finite differences against the symbolic derivations.
        // Residuals are scaled by max(1, |symbolic value|): the stencil
        // error grows with the pole order of the form. Points sit at
        // 0.40 * dmin, where the Laurent tails are negligible, and away
        // from the lattice-reduction seams so tau +/- h cannot switch
        // representatives between the two stencil evaluations.
        const double h = 1e-5;
        std::vector<Form> forms;
        for (int gi = 0; gi < 5; ++gi)
            forms.push_back(gen(static_cast<Gen>(gi)));
        for (int i = 0; i < 5; ++i)
            forms.push_back(random_homogeneous(2 + i, AlgebraId::JSinf, opt.seed + 301 * i));
        double worst_z = 0.0, worst_tau = 0.0;
        for (const Complex tau : {Complex(0.0, 1.9), Complex(0.15, 1.3)}) {
            const double dmin = lattice_min_distance(tau);
            for (const Complex zdir : {Complex(1.0, 0.35), Complex(-0.6, 0.8)}) {
                const Complex z = 0.40 * dmin * zdir / std::abs(zdir);
                for (const auto& f : forms) {
                    const Complex dzf = eval_form(dz(f), tau, z, ctx);
                    const Complex fd_z =
                        (eval_form(f, tau, z + h, ctx) - eval_form(f, tau, z - h, ctx)) / (2.0 * h);
                    worst_z = std::max(worst_z, std::abs(fd_z - dzf) / std::max(1.0, std::abs(dzf)));

                    const Complex dtf = eval_form(dtau(f), tau, z, ctx);
                    const Complex fd_tau = Complex(0.0, -kPi / 2.0)
                                         * (eval_form(f, tau + h, z, ctx) - eval_form(f, tau - h, z, ctx))
                                         / (2.0 * h);
                    worst_tau = std::max(worst_tau, std::abs(fd_tau - dtf) / std::max(1.0, std::abs(dtf)));
                }
            }
        }
        rep.bounded("analytic.finite_difference_dz", worst_z, 1e-6);
        rep.bounded("analytic.finite_difference_dtau", worst_tau, 1e-5);
    }
}

} // namespace

std::optional<Suite> suite_from_name(std::string_view name)
{
    if (name == "identities")
        return Suite::Identities;
    if (name == "stability")
        return Suite::Stability;
    if (name == "associativity")
        return Suite::Associativity;
    if (name == "dimensions")
        return Suite::Dimensions;
    if (name == "analytic")
        return Suite::Analytic;
    if (name == "all")
        return Suite::All;
    return std::nullopt;
}

std::string suite_name(Suite s)
{
    switch (s) {
    case Suite::Identities:
        return "identities";
    case Suite::Stability:
        return "stability";
    case Suite::Associativity:
        return "associativity";
    case Suite::Dimensions:
        return "dimensions";
    case Suite::Analytic:
        return "analytic";
    case Suite::All:
        return "all";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite s, const Options& opt)
{
    Reporter rep;
    switch (s) {
    case Suite::Identities:
        identities_suite(rep, opt);
        break;
    case Suite::Stability:
        stability_suite(rep, opt);
        break;
    case Suite::Associativity:
        associativity_suite(rep, opt);
        break;
    case Suite::Dimensions:
        dimensions_suite(rep, opt);
        break;
    case Suite::Analytic:
        analytic_suite(rep, opt);
        break;
    case Suite::All:
        identities_suite(rep, opt);
        stability_suite(rep, opt);
        associativity_suite(rep, opt);
        dimensions_suite(rep, opt);
        analytic_suite(rep, opt);
        break;
    }
    return rep.take();
}

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace qjf::verify
