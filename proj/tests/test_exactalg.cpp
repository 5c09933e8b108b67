#include "abelrat/errors.hpp"
#include "abelrat/io.hpp"
#include "abelrat/ratpoly.hpp"
#include "abelrat/realroots.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace abelrat;
using namespace abelrat::testing;

namespace {

RatPoly P(const std::string& s) { return parse_polynomial(s); }
Rational Q(const std::string& s) { return parse_rational(s); }

const RatPoly kP2 = P("4/3*t^6 - 7*t^4 + 23/3*t^2 + 2*t");
const RatPoly kP2red = P("4/3*t^5 - 7*t^3 + 23/3*t + 2");

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(to_string(frac(4, -6)) == "-2/3");
    CHECK(to_string(frac(-4, 2)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("6/4") == frac(3, 2));
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK(simplest_between(Q("1/3"), Q("1/2")) == Q("1/2"));
    CHECK(simplest_between(Q("-7/5"), Q("-6/5")) == Q("-4/3"));
    CHECK(simplest_between(Q("-3/2"), Q("-1/2")) == Q("-1"));
    CHECK(floor_of(Q("-3/2")) == -2);
    CHECK(ceil_of(Q("-3/2")) == -1);
    CHECK(pow_int(Q("2/3"), -2) == Q("9/4"));
}

TEST_CASE("polynomial ring operations") {
    CHECK(P("t^2 + t").derivative() == P("2*t + 1"));
    CHECK(P("t - 1") * P("t + 1") == P("t^2 - 1"));
    CHECK(kP2.derivative() == P("8*t^5 - 28*t^3 + 46/3*t + 2"));
    CHECK(kP2.derivative().eval(Rational(-1)) == Q("20/3"));
    CHECK(kP2.derivative().eval(Rational(-2)) == Q("-182/3"));
    CHECK(kP2.derivative().eval(Q("3/2")) == Q("-35/4"));
    CHECK(RatPoly().degree() == kZeroDegree);
    CHECK(RatPoly().is_zero());
    CHECK_THROWS_AS(RatPoly().lc(), Error);
    CHECK(P("t^2 + 1").compose_monomial(Rational(2), 3) == P("4*t^6 + 1"));
    CHECK(P("t^2").compose(P("t + 1")) == P("t^2 + 2*t + 1"));
    CHECK(P("t^2 + 2*t").reversed(3) == P("2*t^2 + t"));

    auto [q, r] = divrem(P("t^3 + 2*t + 5"), P("t^2 + 1"));
    CHECK(q == P("t"));
    CHECK(r == P("t + 5"));
    CHECK_THROWS_AS(divrem(P("t"), RatPoly()), DivisionByZeroPoly);
}

TEST_CASE("gcd") {
    CHECK(gcd(P("t^2 - 1"), P("t^2 - 2*t + 1")) == P("t - 1"));
    CHECK(gcd(P("3*t^4 + t"), RatPoly::constant(1)) == RatPoly::constant(1));
    CHECK(gcd(kP2red, kP2red.derivative()) == RatPoly::constant(1));
    CHECK_THROWS_AS(gcd(RatPoly(), RatPoly()), ZeroInput);

    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        RatPoly a = random_poly(rng, 3), b = random_poly(rng, 2);
        auto x = xgcd(a, b);
        CHECK(x.s * a + x.t * b == x.g);
        CHECK(divides_exactly(x.g, a));
        CHECK(divides_exactly(x.g, b));
    }
}

TEST_CASE("resultant") {
    CHECK(resultant(P("t - 1"), P("t + 1")) == 2);
    CHECK(resultant(P("t^2 - 2"), P("t^2 - 2")) == 0);
    Rational r = resultant(kP2red, kP2red.derivative());
    CHECK(r != 0);
    CHECK(r == sylvester_resultant(kP2red, kP2red.derivative()));
    CHECK_THROWS_AS(resultant(RatPoly(), P("t")), ZeroInput);

    Rng rng(12);
    for (int i = 0; i < 150; ++i) {
        RatPoly a = random_poly(rng, 1 + i % 5), b = random_poly(rng, 1 + (i / 5) % 4);
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("squarefree decomposition and power part") {
    auto d = squarefree_decompose(P("(t - 1)^2*(t + 2)"));
    REQUIRE(d.size() == 2);
    CHECK(d[0].factor == P("t + 2"));
    CHECK(d[0].multiplicity == 1);
    CHECK(d[1].factor == P("t - 1"));
    CHECK(d[1].multiplicity == 2);
    auto d9 = squarefree_decompose(P("t^9"));
    REQUIRE(d9.size() == 1);
    CHECK(d9[0].factor == P("t"));
    CHECK(d9[0].multiplicity == 9);
    for (const auto& part : squarefree_decompose(kP2)) CHECK(part.multiplicity == 1);

    CHECK(power_part(P("t^9"), 2) == P("t^4"));
    CHECK(power_part(P("t^2 + 1"), 3) == RatPoly::constant(1));
    CHECK(power_part(P("(t - 1)^4*(t + 2)^3"), 2) == P("(t - 1)^2*(t + 2)"));
    CHECK(divides_exactly(P("(t - 1)^2*(t + 2)").pow(2), P("(t - 1)^4*(t + 2)^3")));
    CHECK_THROWS_AS(squarefree_decompose(RatPoly()), ZeroInput);
    CHECK_THROWS_AS(power_part(RatPoly(), 2), ZeroInput);
}

TEST_CASE("real roots") {
    CHECK(real_root_count(P("2*t^2 - 3*t - 1")) == 2);
    CHECK(real_root_count(P("t^2 + 1")) == 0);
    CHECK(real_root_count(kP2red) == 5);
    CHECK(real_root_count(P("(t - 1)^3*(t + 1)")) == 2);
    CHECK(real_root_count(P("t^2 - 1"), Rational(-1), Rational(1)) == 1);

    auto one = isolate_real_roots(P("t - 3/2"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].lo <= Q("3/2"));
    CHECK(Q("3/2") <= one[0].hi);

    auto two = isolate_real_roots(P("2*t^2 - 3*t - 1"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].hi <= two[1].lo);
    for (const auto& iv : two) {
        const RatPoly q = P("2*t^2 - 3*t - 1");
        CHECK(sgn(q.eval(iv.lo)) * sgn(q.eval(iv.hi)) <= 0);
    }
    CHECK(isolate_real_roots(P("t^2 + 1")).empty());
    CHECK_THROWS_AS(isolate_real_roots(P("(t - 1)^2")), NotSquarefree);

    auto roots = rational_roots(P("(t + 2)*(t + 1)*(2*t - 3)*(2*t^2 - 3*t - 1)"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -2);
    CHECK(roots[1] == -1);
    CHECK(roots[2] == Q("3/2"));

    const Rational eps = frac(1, 1000000);
    for (const auto& iv : isolate_real_roots(kP2red)) {
        RootInterval f = refine_root(kP2red, iv, eps);
        CHECK(f.width() < eps);
        if (!f.exact()) CHECK(sgn(kP2red.eval(f.lo)) * sgn(kP2red.eval(f.hi)) < 0);
    }
}

TEST_CASE("descartes bound") {
    CHECK(descartes_bound(P("t^3 - t")) == std::pair<int, int>{1, 1});
    CHECK(descartes_bound(kP2red) == std::pair<int, int>{2, 3});
    CHECK(descartes_bound(RatPoly::constant(5)) == std::pair<int, int>{0, 0});
    CHECK(descartes_bound(kP2red).first == sign_variations(kP2red.coeffs()));
}

TEST_CASE("interpolation and cauchy bound") {
    std::vector<Rational> xs{0, 1, 2, 3}, ys;
    for (const auto& x : xs) ys.push_back(kP2red.truncate(4).eval(x));
    CHECK(interpolate(xs, ys) == kP2red.truncate(4));
    for (const auto& iv : isolate_real_roots(kP2red)) {
        CHECK(abs_value(iv.lo) <= cauchy_bound(kP2red) + 1);
        CHECK(abs_value(iv.hi) <= cauchy_bound(kP2red) + 1);
    }
}

TEST_CASE("expression printing round trip") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        RatPoly p = random_poly(rng, i % 7);
        CHECK(parse_polynomial(p.str()) == p);
    }
}
