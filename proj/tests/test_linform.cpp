#include <doctest.h>
#include <residua/linform.hpp>

using namespace residua;

namespace {
const std::vector<std::string> kNames = {"k1", "k2"};

LinForm form(const Rat& c1, const Rat& c2, const Rat& c0 = Rat(0)) {
    LinForm f(2);
    f.coeff[0] = c1;
    f.coeff[1] = c2;
    f.constant = c0;
    return f;
}
}  // namespace

TEST_CASE("rendering") {
    CHECK(to_string(form(rat(1), rat(-2)), kNames) == "k1 - 2*k2");
    CHECK(to_string(form(rat(-1), rat(0), rat(1, 2)), kNames) == "-k1 + 1/2");
    CHECK(to_string(form(rat(0), rat(0)), kNames) == "0");
    CHECK(to_string(form(rat(3, 2), rat(1), rat(-1)), kNames) == "3/2*k1 + k2 - 1");
    CHECK(to_string(LinForm::constant_form(2, rat(-2)), kNames) == "-2");
}

TEST_CASE("arithmetic and evaluation") {
    LinForm a = form(rat(1), rat(2), rat(3));
    LinForm b = form(rat(1, 2), rat(-1));
    CHECK(to_string(a + b, kNames) == "3/2*k1 + k2 + 3");
    CHECK(to_string(a - b, kNames) == "1/2*k1 + 3*k2 + 3");
    CHECK(to_string(a * rat(-2), kNames) == "-2*k1 - 4*k2 - 6");
    CHECK((a - a).is_zero());
    CHECK(a.eval({rat(1), rat(1, 2)}) == rat(5));
    CHECK_THROWS_AS(a.eval({rat(1)}), std::domain_error);
}

TEST_CASE("substitution composes parameter changes") {
    // k1 -> 2*f1, k2 -> 2*f2 (three-parameter target to exercise shape change)
    LinForm a = form(rat(1), rat(-1), rat(5));
    std::vector<LinForm> images = {LinForm::unit(3, 0, rat(2)), LinForm::unit(3, 1, rat(2))};
    LinForm r = a.substitute(images);
    CHECK(r.nparams() == 3);
    CHECK(r.eval({rat(1), rat(2), rat(99)}) == rat(2) - rat(4) + rat(5));

    // k2 -> k2/2 rescaling in place
    std::vector<LinForm> half = {LinForm::unit(2, 0), LinForm::unit(2, 1, rat(1, 2))};
    CHECK(to_string(a.substitute(half), kNames) == "k1 - 1/2*k2 + 5");
}

TEST_CASE("normalization and proportionality") {
    LinForm a = form(rat(-2), rat(4), rat(-6));
    CHECK(to_string(a.normalized(), kNames) == "k1 - 2*k2 + 3");
    CHECK(to_string(a.sign_canonical(), kNames) == "2*k1 - 4*k2 + 6");
    CHECK(form(rat(0), rat(0)).normalized().is_zero());

    auto r = proportional_ratio(form(rat(1), rat(-2)), form(rat(-3), rat(6)));
    REQUIRE(r.has_value());
    CHECK(*r == rat(-1, 3));
    CHECK(!proportional_ratio(form(rat(1), rat(-2)), form(rat(1), rat(2))).has_value());
    CHECK(!proportional_ratio(form(rat(1), rat(-2), rat(1)), form(rat(1), rat(-2))).has_value());
    // constant-only divisor
    auto c = proportional_ratio(LinForm::constant_form(2, rat(3)), LinForm::constant_form(2, rat(2)));
    REQUIRE(c.has_value());
    CHECK(*c == rat(3, 2));
    CHECK_THROWS_AS(proportional_ratio(a, LinForm(2)), std::domain_error);
}

TEST_CASE("ordering is lexicographic on (coeff, constant)") {
    CHECK(form(rat(1), rat(0)) < form(rat(1), rat(1)));
    CHECK(form(rat(0), rat(5), rat(9)) < form(rat(1), rat(-5)));
    CHECK(form(rat(1), rat(1)) < form(rat(1), rat(1), rat(1)));
}
