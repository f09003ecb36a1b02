#include "qjf/calculus.hpp"

#include "qjf/modular.hpp"

#include "doctest.h"

#include <thread>
#include <vector>

using namespace qjf;

namespace {

const Form P = Form::generator(Gen::P);
const Form Pz = Form::generator(Gen::Pz);
const Form E4 = Form::generator(Gen::E4);
const Form E1 = Form::generator(Gen::E1);
const Form E2 = Form::generator(Gen::E2);

Scalar frac(long long n, long long d)
{
    return Scalar(Rational(n, d));
}

} // namespace

TEST_CASE("dz on the generators")
{
    CHECK(dz(P) == Pz);
    CHECK(dz(Pz) == Scalar(6) * (P * P) - Scalar(30) * E4);
    CHECK(dz(E1) == -P - E2);
    CHECK(dz(E4).is_zero());
    CHECK(dz(E2).is_zero());
    CHECK(weight_of(dz(P * E1)) == 4); // weight raised by one
}

TEST_CASE("dtau on the generators")
{
    CHECK(dtau(E2) == frac(1, 4) * (E2 * E2) - frac(5, 4) * E4);
    CHECK(dtau(P) == frac(-1, 4) * (E1 * Pz + Scalar(2) * (P * P) - Scalar(2) * (E2 * P) - Scalar(20) * E4));
    CHECK(dtau(E4)
          == frac(-1, 10) * (P * P * P) + frac(1, 40) * (Pz * Pz) + frac(3, 2) * (P * E4) + E4 * E2);
    CHECK(Scalar(4) * dtau(E1) == E1 * E2 + P * E1 + frac(1, 2) * Pz);
    CHECK(weight_of(dtau(P)) == 4); // weight raised by two
}

TEST_CASE("raw derivatives undo the normalization")
{
    CHECK(raw_dz(E1) == dz(E1));
    CHECK(raw_dtau(P).scaled(Scalar::c_power(1)) == Scalar(-4) * dtau(P));
    // c-exponent -1 terms appear in raw tau derivatives
    const Form rt = raw_dtau(E2);
    bool has_c_inverse = false;
    for (const auto& [m, s] : rt.terms())
        has_c_inverse = has_c_inverse || s.coeff(-1) != 0;
    CHECK(has_c_inverse);
}

TEST_CASE("Oberdieck derivation catalog")
{
    CHECK(oberdieck(P) == Scalar(-2) * (P * P - Scalar(10) * E4));
    CHECK(oberdieck(Pz) == Scalar(-3) * (P * Pz));
    CHECK(oberdieck(E4) == Scalar(-14) * e6_form());
    CHECK(oberdieck(E1) == frac(1, 2) * Pz - E1 * E2);
    CHECK(oberdieck(E2) == -(E2 * E2) - Scalar(5) * E4);
    CHECK(oberdieck(Form(1)).is_zero());
    CHECK(oberdieck(Form()).is_zero());
}

TEST_CASE("delta halves the weight")
{
    CHECK(delta(E4) == Scalar(2) * E4);
    CHECK(delta(frac(1, 4) * E2) == frac(1, 4) * E2);
    CHECK(delta(Form(1)).is_zero());
    CHECK(delta(P + E4) == P + Scalar(2) * E4); // per weight component
}

TEST_CASE("theta values and both defining routes")
{
    const Form x = frac(1, 4) * E2;
    CHECK(theta(x) == -(x * x) - frac(5, 16) * E4);
    CHECK(theta(E1) == frac(1, 8) * (Pz + Scalar(2) * (P * E1)));
    // On z-independent forms theta is Ob*/4.
    const Form m = random_modular(8, 5);
    CHECK(theta(m) == frac(1, 4) * oberdieck(m));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Form f = random_homogeneous(5, AlgebraId::JSinf, seed);
        CHECK(theta(f) == frac(1, 4) * (oberdieck(f) - E1 * dz(f)));
    }
}

TEST_CASE("d derivation values and both defining routes")
{
    CHECK(d_deriv(E1) == frac(1, 8) * Pz);
    for (int n = 2; n <= 4; ++n)
        CHECK(d_deriv(E1.pow(n)) == frac(n, 8) * (Pz * E1.pow(n - 1)));
    const Form m = random_modular(10, 9);
    CHECK(d_deriv(m) == dtau(m));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Form f = random_homogeneous(6, AlgebraId::JSinf, seed + 50);
        CHECK(d_deriv(f) == frac(1, 4) * oberdieck(f) + frac(1, 2) * (E2 * delta(f)));
    }
}

TEST_CASE("derivations commute: dtau dz = dz dtau")
{
    for (int g = 0; g < 5; ++g) {
        const Form f = Form::generator(static_cast<Gen>(g));
        CHECK(dtau(dz(f)) == dz(dtau(f)));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Form f = random_homogeneous(4 + static_cast<int>(seed % 5), AlgebraId::JSinf, seed);
        CHECK(dtau(dz(f)) == dz(dtau(f)));
    }
}

TEST_CASE("Leibniz rule for all derivations")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Form f = random_homogeneous(2 + static_cast<int>(seed % 6), AlgebraId::JSinf, seed);
        const Form g = random_homogeneous(1 + static_cast<int>((seed * 3) % 7), AlgebraId::JSinf, seed + 77);
        for (auto D : {&dz, &dtau, &d_deriv, &theta, &oberdieck})
            CHECK(D(f * g) == D(f) * g + f * D(g));
    }
}

TEST_CASE("Ramanujan relations through the e6 combination")
{
    const Form& e6 = e6_form();
    CHECK(dtau(E4) == E4 * E2 - frac(7, 2) * e6);
    CHECK(dtau(e6) == frac(3, 2) * (e6 * E2) - frac(15, 7) * (E4 * E4));
    // dz kills the symbolic e6, as it does every modular form.
    CHECK(dz(e6).is_zero());
}

TEST_CASE("Weierstrass equation closure")
{
    CHECK((Pz * Pz - Scalar(4) * P.pow(3) + Scalar(60) * (E4 * P) + Scalar(140) * e6_form()).is_zero());
}

TEST_CASE("eisenstein forms")
{
    CHECK(eisenstein(2) == E2);
    CHECK(eisenstein(4) == E4);
    CHECK(eisenstein(6) == e6_form());
    CHECK(eisenstein(8) == frac(3, 7) * (E4 * E4));
    // Independently derived from zeta values: e10 = (5/11) e4 e6.
    CHECK(eisenstein(10) == frac(5, 11) * (E4 * e6_form()));
    // e4-e6 polynomiality and depth zero persist up the recursion.
    for (int k = 12; k <= 24; k += 2) {
        const Form ek = eisenstein(k);
        CHECK(weight_of(ek) == k);
        CHECK(depth_of(ek) == std::pair<int, int>{0, 0});
        CHECK(is_modular(ek));
        CHECK(dz(ek).is_zero());
    }
    CHECK_THROWS_AS(eisenstein(7), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(0), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(-2), std::invalid_argument);
}

TEST_CASE("eisenstein memo is safe under concurrent access")
{
    std::vector<Form> results(8);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t)
        workers.emplace_back([&results, t] { results[t] = eisenstein(26); });
    for (auto& w : workers)
        w.join();
    for (const auto& r : results)
        CHECK(r == results[0]);
}

TEST_CASE("delta-theta commutators")
{
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Form f = random_homogeneous(3 + static_cast<int>(seed % 5), AlgebraId::JSinf, seed);
        if (seed % 2 == 1)
            f += random_homogeneous(2 + static_cast<int>(seed % 3), AlgebraId::JSinf, seed + 11);
        CHECK(delta(theta(f)) - theta(delta(f)) == theta(f));
        const auto thetap = [](const Form& h) { return frac(1, 4) * oberdieck(h); };
        CHECK(delta(thetap(f)) - thetap(delta(f)) == thetap(f));
    }
}

TEST_CASE("depth bounds of the derivations")
{
    for (int s1 = 0; s1 <= 2; ++s1)
        for (int s2 = 0; s2 <= 2; ++s2) {
            const int k = 6 + 2 * s1 + s2;
            const Form f = random_homogeneous_with_depth(k, s1, s2, 99);
            const Form fz = dz(f), ft = dtau(f), fo = oberdieck(f);
            for (const auto& [m, s] : fz.terms())
                CHECK(((m.e[4] <= s1 + 1 && m.e[3] <= s2 - 1) || (m.e[4] <= s1 && m.e[3] <= s2)));
            for (const auto& [m, s] : ft.terms())
                CHECK(((m.e[4] <= s1 + 1 && m.e[3] <= s2) || (m.e[4] <= s1 && m.e[3] <= s2 + 1)));
            for (const auto& [m, s] : fo.terms())
                CHECK((m.e[4] <= s1 + 1 && m.e[3] <= s2));
        }
}

TEST_CASE("Q-expansion recurrences for raw derivatives and Ob*")
{
    const Scalar c = Scalar::c_power(1);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const int s1 = static_cast<int>(seed % 3), s2 = static_cast<int>((seed + 1) % 3);
        const int k = 5 + 2 * s1 + s2;
        const Form f = random_homogeneous_with_depth(k, s1, s2, seed);
        for (int j1 = 0; j1 <= s1 + 2; ++j1)
            for (int j2 = 0; j2 <= s2 + 2; ++j2) {
                CHECK(q_op(j1, j2, raw_dz(f))
                      == raw_dz(q_op(j1, j2, f)) + Scalar(j2 + 1) * q_op(j1 - 1, j2 + 1, f));
                CHECK(q_op(j1, j2, raw_dtau(f))
                      == raw_dtau(q_op(j1, j2, f)) + dz(q_op(j1, j2 - 1, f))
                             + Scalar(k - j1 + 1) * q_op(j1 - 1, j2, f));
                const Form q = q_op(j1, j2, f);
                CHECK(q_op(j1, j2, oberdieck(f))
                      == Scalar(4) * dtau(q) + E1 * dz(q) - Scalar(k) * (E2 * q)
                             + (c * Scalar(j1 + j2 - 1)) * q_op(j1 - 1, j2, f)
                             + Scalar(j2 + 1) * (E1 * q_op(j1 - 1, j2 + 1, f)));
            }
    }
}

TEST_CASE("stability table of the subalgebras under derivation")
{
    // M and JS and JS(inf,0) are dz- and Ob*-stable but not dtau-stable;
    // JS(0,inf) is stable under none of the three; quasimodular forms and
    // the full algebra are stable under all.
    const Form m = random_modular(12, 3);
    CHECK(is_modular(dz(m)));
    CHECK(is_modular(oberdieck(m)));
    CHECK_FALSE(is_modular(dtau(E4)));

    const Form j = random_homogeneous(7, AlgebraId::JS, 4);
    CHECK(dz(j).in_subalgebra(AlgebraId::JS));
    CHECK(oberdieck(j).in_subalgebra(AlgebraId::JS));
    CHECK_FALSE(dtau(P).in_subalgebra(AlgebraId::JS));

    const Form q = random_quasimodular(8, 5);
    CHECK(dz(q).is_zero());
    CHECK(is_quasimodular(dtau(q)));
    CHECK(is_quasimodular(oberdieck(q)));

    CHECK_FALSE(dz(E1).in_subalgebra(AlgebraId::JS0inf));
    CHECK_FALSE(dtau(E1).in_subalgebra(AlgebraId::JS0inf));
    CHECK_FALSE(oberdieck(E1).in_subalgebra(AlgebraId::JS0inf));

    const Form qm = random_homogeneous(6, AlgebraId::JSinf0, 6);
    CHECK(dz(qm).in_subalgebra(AlgebraId::JSinf0));
    CHECK(oberdieck(qm).in_subalgebra(AlgebraId::JSinf0));
    CHECK_FALSE(dtau(P).in_subalgebra(AlgebraId::JSinf0));
}
