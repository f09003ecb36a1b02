#include "qjf/io.hpp"

#include "doctest.h"

using namespace qjf;

namespace {

const Form P = Form::generator(Gen::P);
const Form Pz = Form::generator(Gen::Pz);
const Form E4 = Form::generator(Gen::E4);

} // namespace

TEST_CASE("parse basic expressions")
{
    CHECK(parse_form("P^2*E4 - 3*Pz") == P * P * E4 - Scalar(3) * Pz);
    CHECK(parse_form("1/140") == Form(Scalar(Rational(1, 140))));
    CHECK(parse_form("c") == Form(Scalar::c_power(1)));
    CHECK(parse_form("c^-2") == Form(Scalar::c_power(-2)));
    CHECK(parse_form("(P + E4)^2") == (P + E4) * (P + E4));
    CHECK(parse_form("0") == Form());
    CHECK(parse_form(" - P ") == -P);
}

TEST_CASE("precedence: ^ over * over unary minus over binary")
{
    CHECK(parse_form("-2*P") == Scalar(-2) * P);
    CHECK(parse_form("-P^2") == -(P * P));
    CHECK(parse_form("2*P^2") == Scalar(2) * (P * P));
    CHECK(parse_form("1 - 2*P") == Form(1) - Scalar(2) * P);
    CHECK(parse_form("3/7*E4^2") == Scalar(Rational(3, 7)) * (E4 * E4));
}

TEST_CASE("parse errors carry positions")
{
    CHECK_THROWS_AS(parse_form("Q"), ParseError);
    try {
        parse_form("P + Q4");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_form("P +"), ParseError);
    CHECK_THROWS_AS(parse_form("(P"), ParseError);
    CHECK_THROWS_AS(parse_form("1/0"), ParseError);
    CHECK_THROWS_AS(parse_form("P^-1"), ParseError);
    CHECK_THROWS_AS(parse_form("P P"), ParseError);
}

TEST_CASE("printing is canonical and round-trips")
{
    CHECK(to_string(Form()) == "0");
    CHECK(to_string(P) == "P");
    CHECK(to_string(-P) == "-P");
    CHECK(to_string(Scalar(Rational(1, 35)) * (P * P * P) - Scalar(Rational(3, 7)) * (P * E4))
          == "1/35*P^3 - 3/7*P*E4");
    CHECK(to_string(Form(Scalar::c_power(1, Rational(-2)))) == "-2*c");
    CHECK(to_string(P.scaled(Scalar::c_power(-1))) == "c^-1*P");
    CHECK(to_string(P.scaled(Scalar::c_power(2) + Scalar(1))) == "(1 + c^2)*P");

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Form f = random_homogeneous(1 + static_cast<int>(seed % 9), AlgebraId::JSinf, seed);
        if (seed % 3 == 0)
            f += random_homogeneous(2 + static_cast<int>(seed % 5), AlgebraId::JSinf, seed + 1000);
        if (seed % 4 == 0)
            f = f.scaled(Scalar::c_power(static_cast<int>(seed % 5) - 2, Rational(3, 4)));
        if (seed % 5 == 0)
            f += Form(Scalar::c_power(1) + Scalar(Rational(-7, 2)));
        CAPTURE(to_string(f));
        CHECK(parse_form(to_string(f)) == f);
    }
}
