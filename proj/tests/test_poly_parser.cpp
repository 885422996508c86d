#include <doctest.h>

#include "chom/parser.hpp"
#include "helpers.hpp"

using namespace chom;
using testutil::random_rat;
using testutil::var;

TEST_CASE("parse_poly: basic expressions") {
    std::vector<std::string> xy{"x", "y"};
    Poly x = var(0, 2), y = var(1, 2);

    CHECK(parse_poly("y^2 - x^3", xy) == y * y - x * x * x);
    CHECK(parse_poly("x*(x + 1)", xy) == x * x + x);
    CHECK(parse_poly("2*x + 3*y", xy) == x.scaled(2) + y.scaled(3));
    CHECK(parse_poly("-x^2", xy) == -(x * x));
    CHECK(parse_poly("(-x)^2", xy) == x * x);
    CHECK(parse_poly("x^2^3", xy) == x.pow(8));  // right-associative exponent
    CHECK(parse_poly("7", xy) == Poly::constant(7, 2));
    CHECK(parse_poly("x - x", xy).is_zero());
}

TEST_CASE("parse_poly: errors carry positions") {
    std::vector<std::string> xy{"x", "y"};
    try {
        parse_poly("x^", xy);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 2);
    }
    try {
        parse_poly("x + z*y", xy);
        FAIL("expected UnknownVariable");
    } catch (const UnknownVariable& e) {
        CHECK(e.name == "z");
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_poly("x + ", xy), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x", xy), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x y", xy), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^y", xy), SyntaxError);  // exponent must be an integer
}

TEST_CASE("print / parse round trip") {
    std::mt19937 rng(5);
    std::vector<std::string> names{"x", "y", "z"};
    std::uniform_int_distribution<int> nterms(0, 5), expo(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = Poly::constant(0, 3);
        for (int t = 0, n = nterms(rng); t < n; ++t) {
            Exponents e{static_cast<unsigned>(expo(rng)), static_cast<unsigned>(expo(rng)),
                        static_cast<unsigned>(expo(rng))};
            p = p + Poly::monomial(e, random_rat(rng));
        }
        std::string s = poly_to_string(p, names);
        CHECK(parse_poly(s, names) == p);
    }
}

TEST_CASE("monomials_of_weight: order and content") {
    // weights (1,1), w=2: descending lex
    auto m = monomials_of_weight({1, 1}, 2);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == Exponents{2, 0});
    CHECK(m[1] == Exponents{1, 1});
    CHECK(m[2] == Exponents{0, 2});

    // weights (2,3), w=6: x^3 and y^2
    auto c = monomials_of_weight({2, 3}, 6);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Exponents{3, 0});
    CHECK(c[1] == Exponents{0, 2});

    CHECK(monomials_of_weight({2}, 3).empty());
}

TEST_CASE("poly derivative and weight") {
    Poly x = var(0, 2), y = var(1, 2);
    Poly f = y * y - x * x * x;
    CHECK(f.derivative(0) == -(x * x).scaled(3));
    CHECK(f.derivative(1) == y.scaled(2));
    CHECK(f.weight({2, 3}) == 6);
    CHECK_FALSE((x + y * y).weight({1, 1}).has_value());
    CHECK_FALSE(Poly().weight({1, 1}).has_value());
}
