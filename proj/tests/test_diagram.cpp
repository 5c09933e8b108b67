#include "abelrat/diagram.hpp"
#include "abelrat/errors.hpp"
#include "abelrat/io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace abelrat;
using namespace abelrat::testing;

namespace {

RatPoly P(const std::string& s) { return parse_polynomial(s); }

AbelEquation example71() { return AbelEquation(2, 4, 6, P("23/3*t"), P("-7*t^5"), P("4/3*t^9")); }

// Monomial coefficients of the given degrees (a1, a2, a3).
AbelEquation with_degrees(int n1, int n2, int n3, int a1, int a2, int a3) {
    return AbelEquation(n1, n2, n3, RatPoly::monomial(1, a1), RatPoly::monomial(1, a2), RatPoly::monomial(1, a3));
}

}  // namespace

TEST_CASE("equation validation") {
    CHECK_THROWS_WITH_AS(AbelEquation(1, 3, 4, P("t"), P("t"), P("t")), "exponents must satisfy 1 < n1",
                         InvalidEquation);
    CHECK_THROWS_AS(AbelEquation(2, 2, 4, P("t"), P("t"), P("t")), InvalidEquation);
    CHECK_THROWS_AS(AbelEquation(2, 3, 4, P("t"), RatPoly(), P("t")), InvalidEquation);
    AbelEquation eq = example71();
    CHECK(eq.a(Term::A3) == 9);
    CHECK(eq.a(Term::Deriv) == -1);
    CHECK(eq.n(Term::Deriv) == 1);
    CHECK(eq.alpha(Term::A3) == frac(4, 3));
}

TEST_CASE("order functions") {
    AbelEquation eq = example71();
    CHECK(phi(eq, Term::Deriv, 2) == 3);
    CHECK(phi(eq, Term::A3, 2) == 3);
    CHECK(phi(eq, Term::A1, 2) == 3);
    VertexSet v = vertex_set(eq);
    CHECK(v.Qpartial.a == -1);
    CHECK(v.Qpartial.n == 1);
    CHECK(v.Q3.a == 9);
    CHECK(v.Q3.n == 6);
}

TEST_CASE("candidate degrees") {
    CandidateDegrees cd = candidate_degrees(example71());
    for (const Rational* q : {&cd.r32, &cd.r31, &cd.r21, &cd.r3d, &cd.r2d, &cd.r1d}) CHECK(*q == 2);
    CHECK(cd.r0 == frac(9, 2));
    CHECK(cd.gamma == std::set<int>{2});

    CHECK(candidate_degrees(with_degrees(2, 3, 4, 0, 0, 0)).gamma.empty());

    CandidateDegrees c2 = candidate_degrees(with_degrees(2, 3, 5, 0, 1, 5));
    CHECK(c2.r32 == 2);
    CHECK(c2.r31 == frac(5, 3));
    CHECK(c2.r21 == 1);
    CHECK(c2.r3d == frac(3, 2));
    CHECK(c2.r2d == 1);
    CHECK(c2.r1d == 1);
    CHECK(c2.r0 == frac(5, 2));
    CHECK(c2.gamma == std::set<int>{1, 2});
}

TEST_CASE("edge profiles") {
    AbelEquation eq = example71();
    auto p = edge_profile(eq, 2);
    REQUIRE(p);
    CHECK(p->tie.label() == "{3,2,1,∂}");
    CHECK(p->edge_poly == P("4/3*t^6 - 7*t^4 + 23/3*t^2 + 2*t"));
    CHECK(p->e_r == 1);
    CHECK(p->reduced_poly == P("4/3*t^5 - 7*t^3 + 23/3*t + 2"));
    CHECK(p->Or == 3);
    CHECK(classify_tie(*p, eq) == TieKind::T321d);

    auto p1 = edge_profile(eq, 1);
    CHECK_FALSE(p1);
    CHECK(phi(eq, Term::A3, 1) == -3);
    CHECK(phi(eq, Term::A2, 1) == -1);
    CHECK(phi(eq, Term::A1, 1) == 1);
    CHECK(phi(eq, Term::Deriv, 1) == 2);

    AbelEquation e2 = with_degrees(2, 3, 5, 0, 1, 5);
    CHECK_FALSE(edge_profile(e2, 1));
    CHECK_FALSE(edge_profile(e2, 2));
    CHECK(admissible_profiles(e2).empty());

    AbelEquation c1 = with_degrees(2, 3, 4, 0, 3, 5);
    auto pc = edge_profile(c1, 2);
    REQUIRE(pc);
    CHECK(classify_tie(*pc, c1) == TieKind::T32d);
    CHECK(std::string(tie_kind_label(TieKind::T32d)) == "{3,2,∂}");

    AbelEquation t32 = with_degrees(2, 3, 4, 0, 2, 3);
    auto p32 = edge_profile(t32, 1);
    REQUIRE(p32);
    CHECK(p32->tie.label() == "{3,2}");
    CHECK(classify_tie(*p32, t32) == TieKind::T32);
    CHECK(is_binomial_with_derivative(TieSet{Term::A3, Term::Deriv}));
    CHECK_FALSE(is_binomial_with_derivative(TieSet{Term::A3, Term::A2}));
}

TEST_CASE("diagram properties on random equations") {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        auto n = random_exponents(rng, 7);
        std::uniform_int_distribution<int> deg(0, 12);
        AbelEquation eq(n[0], n[1], n[2], random_poly(rng, deg(rng)), random_poly(rng, deg(rng)),
                        random_poly(rng, deg(rng)));
        CandidateDegrees cd = candidate_degrees(eq);
        // convexity
        CHECK(std::min(cd.r32, cd.r21) <= cd.r31);
        CHECK(cd.r31 <= std::max(cd.r32, cd.r21));

        std::vector<int> got;
        auto profiles = admissible_profiles(eq);
        for (const auto& p : profiles) {
            got.push_back(p.r);
            CHECK(p.tie.size() >= 2);
            CHECK(p.tie.size() <= 4);
            int mn = *std::min_element(p.phis.begin(), p.phis.end());
            for (Term t : kAllTerms) {
                CHECK((p.phis[static_cast<int>(t)] == mn) == p.tie.has(t));
                if (t != Term::Deriv)
                    CHECK(eq.n3() * p.r - phi(eq, t, p.r) == eq.a(t) + (eq.n3() - eq.n(t)) * p.r);
            }
            CHECK(p.reduced_poly.coeff(0) != 0);
            (void)classify_tie(p, eq);
            RatPoly full;
            for (Term t : kCoefficientTerms)
                if (p.tie.has(t)) full += RatPoly::monomial(eq.alpha(t), eq.n(t));
            if (p.tie.has(Term::Deriv)) full += RatPoly::monomial(Rational(p.r), 1);
            CHECK(full == p.edge_poly);
        }
        CHECK(got == brute_admissible_degrees(eq));
        // distinct admissible degrees share at most one vertex
        for (std::size_t a = 0; a < profiles.size(); ++a)
            for (std::size_t b = a + 1; b < profiles.size(); ++b) {
                int shared = 0;
                for (Term t : kAllTerms) shared += profiles[a].tie.has(t) && profiles[b].tie.has(t);
                CHECK(shared <= 1);
            }
    }
}
