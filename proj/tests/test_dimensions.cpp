#include "qjf/dimensions.hpp"

#include "qjf/modular.hpp"

#include "doctest.h"

using namespace qjf;

TEST_CASE("reference dimension table for Jacobi singular forms")
{
    const long long expected[][2] = {{0, 1}, {1, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 5}, {12, 7}};
    for (const auto& [k, d] : expected) {
        CHECK(dims_by_enumeration(AlgebraId::JS, static_cast<int>(k)) == d);
        CHECK(ds_closed(k) == d);
        CHECK(dims_closed_thm51(AlgebraId::JS, k) == d);
    }
    CHECK(dims_by_enumeration(AlgebraId::JS, 6) == 3);
    CHECK(dims_by_enumeration(AlgebraId::JS, 5) == 1);
    CHECK(dims_by_enumeration(AlgebraId::JSinf, 0) == 1);
}

TEST_CASE("quasielliptic-type series starts 1,1,2,3,5,6,9")
{
    const auto d = dims_by_series(AlgebraId::JS0inf, 6);
    const long long expected[] = {1, 1, 2, 3, 5, 6, 9};
    for (int k = 0; k <= 6; ++k)
        CHECK(d[static_cast<std::size_t>(k)] == expected[k]);
}

TEST_CASE("nearest-integer closed form")
{
    CHECK(ds_closed(12) == 7);
    CHECK(ds_closed(1) == 0);
    CHECK(ds_closed(37) == dims_by_enumeration(AlgebraId::JS, 37));
    CHECK(ds_closed(0) == 1);
}

TEST_CASE("four-route agreement for all algebras up to weight 100")
{
    for (AlgebraId which : {AlgebraId::JS, AlgebraId::JS0inf, AlgebraId::JSinf0, AlgebraId::JSinf}) {
        const auto series = dims_by_series(which, 100);
        for (int k = 0; k <= 100; ++k) {
            CAPTURE(static_cast<int>(which));
            CAPTURE(k);
            CHECK(dims_by_enumeration(which, k) == series[static_cast<std::size_t>(k)]);
            CHECK(dims_closed_thm51(which, k) == series[static_cast<std::size_t>(k)]);
        }
    }
    for (int k = 0; k <= 100; ++k) {
        CHECK(ds_closed(k) == dims_by_enumeration(AlgebraId::JS, k));
        CHECK(ds_via_modular_sum(k) == dims_by_enumeration(AlgebraId::JS, k));
    }
}

TEST_CASE("recurrences")
{
    CHECK(ds_recurrences_check(200));
    CHECK(ds_closed(3) == ds_closed(0));
    CHECK(ds_closed(3) == 1);
    CHECK(ds_closed(13) == 5);
}

TEST_CASE("Alcuin sequence identity")
{
    CHECK(alcuin(15) == 7);
    CHECK(alcuin(3) == 1);
    CHECK(alcuin(0) == 0);
    CHECK(ds_vs_alcuin_check(500));
}

TEST_CASE("compact formulas for the quasielliptic-type dimensions")
{
    // k = 0: ||3*36/144|| = ||0.75|| = 1; k = 1: ||4*4*10/144|| = 1.
    const auto d = dims_by_series(AlgebraId::JS0inf, 1);
    CHECK(d[0] == 1);
    CHECK(d[1] == 1);
    CHECK(compact_formula_check(300));
}

TEST_CASE("modular dimension helper")
{
    CHECK(modular_dim(0) == 1);
    CHECK(modular_dim(2) == 0);
    CHECK(modular_dim(4) == 1);
    CHECK(modular_dim(12) == 2);
    CHECK(modular_dim(14) == 1);
    CHECK(modular_dim(-10) == -1); // combinatorial extension: d(j+12) = d(j) + 1
    for (int j = -40; j <= 60; ++j)
        CHECK(modular_dim(j + 12) == modular_dim(j) + 1);
    // Matches the size of the expanded modular monomial basis.
    for (int k = 0; k <= 40; k += 2)
        CHECK(modular_dim(k) == static_cast<long long>(modular_basis(k).size()));
}

TEST_CASE("subalgebra monotonicity")
{
    const auto js = dims_by_series(AlgebraId::JS, 60);
    const auto a = dims_by_series(AlgebraId::JS0inf, 60);
    const auto b = dims_by_series(AlgebraId::JSinf0, 60);
    const auto full = dims_by_series(AlgebraId::JSinf, 60);
    for (std::size_t k = 0; k <= 60; ++k) {
        CHECK(js[k] <= a[k]);
        CHECK(js[k] <= b[k]);
        CHECK(a[k] <= full[k]);
        CHECK(b[k] <= full[k]);
    }
}

TEST_CASE("nearest integer convention rounds halves down")
{
    CHECK(nearest_int(Rational(1, 2)) == 0);
    CHECK(nearest_int(Rational(3, 2)) == 1);
    CHECK(nearest_int(Rational(-1, 2)) == -1);
    CHECK(nearest_int(Rational(3, 4)) == 1);
    CHECK(nearest_int(Rational(10, 9)) == 1);
    CHECK(nearest_int(Rational(7)) == 7);
}

TEST_CASE("dimension report table")
{
    const auto table = dimension_table(AlgebraId::JS, 20);
    CHECK(table.size() == 21);
    for (const auto& r : table) {
        CHECK(r.agree);
        CHECK(r.eq28.has_value());
        CHECK(r.alcuin.has_value());
    }
    const auto t2 = dimension_table(AlgebraId::JSinf, 20);
    for (const auto& r : t2) {
        CHECK(r.agree);
        CHECK_FALSE(r.eq28.has_value());
    }
}
