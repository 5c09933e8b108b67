#include "abelrat/diagram.hpp"

#include "abelrat/errors.hpp"

#include <algorithm>

namespace abelrat {

const char* term_label(Term t) {
    switch (t) {
        case Term::A3: return "3";
        case Term::A2: return "2";
        case Term::A1: return "1";
        case Term::Deriv: return "∂";
    }
    return "?";
}

TieSet::TieSet(std::initializer_list<Term> terms) {
    for (Term t : terms) add(t);
}

int TieSet::size() const { return __builtin_popcount(bits_); }

std::vector<Term> TieSet::members() const {
    std::vector<Term> out;
    for (Term t : kAllTerms)
        if (has(t)) out.push_back(t);
    return out;
}

std::string TieSet::label() const {
    std::string s = "{";
    bool first = true;
    for (Term t : members()) {
        if (!first) s += ",";
        s += term_label(t);
        first = false;
    }
    return s + "}";
}

AbelEquation::AbelEquation(int n1, int n2, int n3, RatPoly A1, RatPoly A2, RatPoly A3)
    : n_{n3, n2, n1}, A_{std::move(A3), std::move(A2), std::move(A1)} {
    if (!(1 < n1)) throw InvalidEquation("exponents must satisfy 1 < n1");
    if (!(n1 < n2 && n2 < n3)) throw InvalidEquation("exponents must satisfy n1 < n2 < n3");
    for (int i = 0; i < 3; ++i)
        if (A_[static_cast<std::size_t>(i)].is_zero())
            throw InvalidEquation(std::string("coefficients must be nonzero (A") + std::to_string(3 - i) + " = 0)");
}

int AbelEquation::n(Term t) const {
    if (t == Term::Deriv) return 1;
    return n_[static_cast<std::size_t>(t)];
}

int AbelEquation::a(Term t) const {
    if (t == Term::Deriv) return -1;
    return A_[static_cast<std::size_t>(t)].degree();
}

const Rational& AbelEquation::alpha(Term t) const {
    if (t == Term::Deriv) throw Error("alpha is undefined for the derivative term");
    return A_[static_cast<std::size_t>(t)].lc();
}

const RatPoly& AbelEquation::A(Term t) const {
    if (t == Term::Deriv) throw Error("no coefficient for the derivative term");
    return A_[static_cast<std::size_t>(t)];
}

VertexSet vertex_set(const AbelEquation& eq) {
    VertexSet v;
    v.Q3 = {eq.a(Term::A3), eq.n3()};
    v.Q2 = {eq.a(Term::A2), eq.n2()};
    v.Q1 = {eq.a(Term::A1), eq.n1()};
    return v;
}

int phi(const AbelEquation& eq, Term ell, int r) {
    if (ell == Term::Deriv) return r + 1;
    return eq.n(ell) * r - eq.a(ell);
}

namespace {

Rational ratio(const AbelEquation& eq, Term i, Term j) {
    return frac(eq.a(i) - eq.a(j), eq.n(i) - eq.n(j));
}

}  // namespace

CandidateDegrees candidate_degrees(const AbelEquation& eq) {
    CandidateDegrees cd;
    cd.r32 = ratio(eq, Term::A3, Term::A2);
    cd.r31 = ratio(eq, Term::A3, Term::A1);
    cd.r21 = ratio(eq, Term::A2, Term::A1);
    cd.r3d = ratio(eq, Term::A3, Term::Deriv);
    cd.r2d = ratio(eq, Term::A2, Term::Deriv);
    cd.r1d = ratio(eq, Term::A1, Term::Deriv);
    cd.r0 = frac(eq.a(Term::A3), eq.n3() - eq.n2());
    for (const Rational* q : {&cd.r32, &cd.r31, &cd.r21, &cd.r3d, &cd.r2d, &cd.r1d}) {
        if (is_integer(*q) && *q > 0 && *q <= cd.r0) cd.gamma.insert(static_cast<int>(q->get_num().get_si()));
    }
    return cd;
}

std::optional<EdgeProfile> edge_profile(const AbelEquation& eq, int r) {
    if (r < 1) throw Error("edge_profile: r must be positive");
    EdgeProfile p;
    p.r = r;
    for (Term t : kAllTerms) p.phis[static_cast<std::size_t>(t)] = phi(eq, t, r);
    p.Or = *std::min_element(p.phis.begin(), p.phis.end());
    for (Term t : kAllTerms)
        if (p.phis[static_cast<std::size_t>(t)] == p.Or) p.tie.add(t);
    if (p.tie.size() < 2) return std::nullopt;
    for (Term t : kCoefficientTerms)
        if (p.tie.has(t)) p.edge_poly += RatPoly::monomial(eq.alpha(t), eq.n(t));
    if (p.tie.has(Term::Deriv)) p.edge_poly += RatPoly::monomial(Rational(r), 1);
    p.e_r = p.edge_poly.valuation();
    p.reduced_poly = p.edge_poly.drop_low(p.e_r);
    return p;
}

std::vector<EdgeProfile> admissible_profiles(const AbelEquation& eq) {
    std::vector<EdgeProfile> out;
    for (int r : candidate_degrees(eq).gamma)
        if (auto p = edge_profile(eq, r)) out.push_back(std::move(*p));
    return out;
}

const char* tie_kind_label(TieKind k) {
    switch (k) {
        case TieKind::T32: return "{3,2}";
        case TieKind::T321: return "{3,2,1}";
        case TieKind::T32d: return "{3,2,∂}";
        case TieKind::T321d: return "{3,2,1,∂}";
        case TieKind::T31: return "{3,1}";
        case TieKind::T31d: return "{3,1,∂}";
        case TieKind::T21: return "{2,1}";
        case TieKind::T21d: return "{2,1,∂}";
        case TieKind::T3d: return "{3,∂}";
        case TieKind::T2d: return "{2,∂}";
        case TieKind::T1d: return "{1,∂}";
    }
    return "?";
}

namespace {

void require(bool ok, const std::string& what, const EdgeProfile& p) {
    if (!ok)
        throw InternalInconsistency("dominance relation " + what + " fails at r = " + std::to_string(p.r) +
                                    " with tie " + p.tie.label());
}

// Rows of the tie-dominance table: the relations forced when r equals the given ratio.
void check_row(Term i, Term j, const CandidateDegrees& c, const EdgeProfile& p) {
    auto key = [](Term x, Term y) {
        int a = static_cast<int>(x), b = static_cast<int>(y);
        return a < b ? a * 4 + b : b * 4 + a;
    };
    const int k = key(i, j);
    if (k == key(Term::A3, Term::A2)) {
        require(c.r32 <= c.r3d, "r32 <= r3d", p);
        require(c.r32 <= c.r2d, "r32 <= r2d", p);
        require(c.r32 <= c.r31 && c.r31 <= c.r21, "r32 <= r31 <= r21", p);
    } else if (k == key(Term::A3, Term::A1)) {
        require(c.r31 <= c.r3d, "r31 <= r3d", p);
        require(c.r31 <= c.r1d, "r31 <= r1d", p);
        require(c.r21 <= c.r31 && c.r31 <= c.r32, "r21 <= r31 <= r32", p);
    } else if (k == key(Term::A2, Term::A1)) {
        require(c.r21 <= c.r2d, "r21 <= r2d", p);
        require(c.r21 <= c.r1d, "r21 <= r1d", p);
        require(c.r32 <= c.r31 && c.r31 <= c.r21, "r32 <= r31 <= r21", p);
    } else if (k == key(Term::A3, Term::Deriv)) {
        require(c.r3d <= c.r32, "r3d <= r32", p);
        require(c.r3d <= c.r31, "r3d <= r31", p);
        require(c.r2d <= c.r3d, "r2d <= r3d", p);
        require(c.r1d <= c.r3d, "r1d <= r3d", p);
    } else if (k == key(Term::A2, Term::Deriv)) {
        require(c.r32 <= c.r2d, "r32 <= r2d", p);
        require(c.r3d <= c.r2d, "r3d <= r2d", p);
        require(c.r1d <= c.r2d, "r1d <= r2d", p);
        require(c.r2d <= c.r21, "r2d <= r21", p);
    } else {
        require(c.r31 <= c.r1d, "r31 <= r1d", p);
        require(c.r3d <= c.r1d, "r3d <= r1d", p);
        require(c.r21 <= c.r1d, "r21 <= r1d", p);
        require(c.r2d <= c.r1d, "r2d <= r1d", p);
    }
}

}  // namespace

TieKind classify_tie(const EdgeProfile& profile, const AbelEquation& eq) {
    const TieSet& t = profile.tie;
    if (t.size() < 2) throw InternalInconsistency("classify_tie on a non-admissible profile");
    for (Term x : kAllTerms) {
        bool in = profile.phis[static_cast<std::size_t>(x)] == profile.Or;
        if (in != t.has(x) || phi(eq, x, profile.r) != profile.phis[static_cast<std::size_t>(x)])
            throw InternalInconsistency("tie set disagrees with the order functions");
    }
    CandidateDegrees c = candidate_degrees(eq);
    auto members = t.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Rational rij = frac(eq.a(members[i]) - eq.a(members[j]), eq.n(members[i]) - eq.n(members[j]));
            require(rij == profile.r, "tie ratio equals r", profile);
            check_row(members[i], members[j], c, profile);
        }
    const bool h3 = t.has(Term::A3), h2 = t.has(Term::A2), h1 = t.has(Term::A1), hd = t.has(Term::Deriv);
    if (h3 && h2 && h1 && hd) return TieKind::T321d;
    if (h3 && h2 && h1) return TieKind::T321;
    if (h3 && h2 && hd) return TieKind::T32d;
    if (h3 && h1 && hd) return TieKind::T31d;
    if (h2 && h1 && hd) return TieKind::T21d;
    if (h3 && h2) return TieKind::T32;
    if (h3 && h1) return TieKind::T31;
    if (h2 && h1) return TieKind::T21;
    if (h3) return TieKind::T3d;
    if (h2) return TieKind::T2d;
    return TieKind::T1d;
}

bool is_binomial_with_derivative(TieSet t) { return t.size() == 2 && t.has(Term::Deriv); }

}  // namespace abelrat
