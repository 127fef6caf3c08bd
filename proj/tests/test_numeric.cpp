#include <doctest.h>
#include <residua/numeric.hpp>

using namespace residua;

TEST_CASE("rational round-trip text form") {
    CHECK(to_string(rat(3)) == "3");
    CHECK(to_string(rat(-3)) == "-3");
    CHECK(to_string(rat(1, 2)) == "1/2");
    CHECK(to_string(rat(-4, 6)) == "-2/3");
    CHECK(to_string(rat(0)) == "0");

    CHECK(parse_rational("3") == rat(3));
    CHECK(parse_rational("-3") == rat(-3));
    CHECK(parse_rational("1/2") == rat(1, 2));
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK(parse_rational("+7/3") == rat(7, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("x"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("1/"), std::domain_error);
    CHECK_THROWS_AS(parse_rational(""), std::domain_error);
    CHECK_THROWS_AS(parse_rational("1.5"), std::domain_error);
}

TEST_CASE("integrality predicates") {
    CHECK(is_integer(rat(4, 2)));
    CHECK(!is_integer(rat(1, 2)));
    CHECK(is_half_integer(rat(3, 2)));
    CHECK(is_half_integer(rat(-1, 2)));
    CHECK(!is_half_integer(rat(2)));
    CHECK(!is_half_integer(rat(1, 3)));
}

TEST_CASE("floor and sign") {
    CHECK(floor_int(rat(7, 2)) == 3);
    CHECK(floor_int(rat(-7, 2)) == -4);
    CHECK(floor_int(rat(-4, 2)) == -2);
    CHECK(floor_int(rat(0)) == 0);
    CHECK(rat_sign(rat(-1, 5)) == -1);
    CHECK(rat_sign(rat(0)) == 0);
    CHECK(rat_sign(rat(2)) == 1);
    CHECK(rat_abs(rat(-3, 4)) == rat(3, 4));
}

TEST_CASE("powers and binomials") {
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), 0) == rat(1));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(-2, 3), -3) == rat(-27, 8));
    CHECK_THROWS_AS(rat_pow(rat(0), -1), std::domain_error);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("large values stay exact") {
    Rat big = rat_pow(rat(10), 30) + rat(1, 3);
    CHECK(big.denominator() == 3);
    CHECK(to_string(big) == "3000000000000000000000000000001/3");
    CHECK(to_double(rat(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("mixed rational and integer comparisons terminate and are correct") {
    // Without the namespace-level overloads these expressions would recurse
    // through boost::rational's reversed candidates under C++20.
    const Rat half = rat(1, 2);
    CHECK(rat(0) == 0);
    CHECK(0 == rat(0));
    CHECK(half != 0);
    CHECK(0 != half);
    CHECK(rat(3) == 3);
    CHECK(rat(3) == 3L);
    CHECK(rat(3) == std::size_t{3});
    CHECK(rat(-7) == -7);
    CHECK(half != 1);
    CHECK(rat(4, 2) == 2);
}
