#include "abelrat/structure.hpp"

#include "abelrat/errors.hpp"

#include <sstream>

namespace abelrat {

const char* pair_case_label(PairCase c) {
    switch (c) {
        case PairCase::C1: return "C1";
        case PairCase::C2a: return "C2a";
        case PairCase::C2b: return "C2b";
        case PairCase::C3a: return "C3a";
        case PairCase::C3b: return "C3b";
        case PairCase::C3c: return "C3c";
        case PairCase::None: return "none";
    }
    return "?";
}

namespace {

std::string ledger(const AbelEquation& eq, int d, int d2) {
    std::ostringstream os;
    os << "d = " << d << ", deg p2 = " << d2 << ", (a1, a2, a3) = (" << eq.a(Term::A1) << ", " << eq.a(Term::A2)
       << ", " << eq.a(Term::A3) << "), (n1, n2, n3) = (" << eq.n1() << ", " << eq.n2() << ", " << eq.n3() << ")";
    return os.str();
}

}  // namespace

PairClass classify_pair(const AbelEquation& eq, int deg_p1, int deg_p2) {
    if (deg_p1 < 1 || deg_p2 < 1) throw Error("classify_pair: degrees must be positive");
    PairClass pc;
    pc.d = std::max(deg_p1, deg_p2);
    pc.d2 = std::min(deg_p1, deg_p2);
    const int d = pc.d, d2 = pc.d2;
    const int n1 = eq.n1(), n2 = eq.n2(), n3 = eq.n3();
    const int a1 = eq.a(Term::A1), a2 = eq.a(Term::A2), a3 = eq.a(Term::A3);
    const std::string info = ledger(eq, d, d2);
    auto fail = [&](const std::string& why) -> void { throw ClassificationFailure(why + " [" + info + "]"); };
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) fail("expected " + what);
        pc.constraints.push_back(what);
    };

    auto prof = edge_profile(eq, d);
    if (!prof) fail("degree d is not edge-admissible");
    pc.tie_at_d = prof->tie;
    const CandidateDegrees cd = candidate_degrees(eq);
    const int c1 = (n1 - 1) * d - 1, c2 = (n2 - 1) * d - 1, c3 = (n3 - 1) * d - 1;

    if (a1 < c1 && a2 == c2) {
        pc.kind = PairCase::C1;
        pc.constraints = {"a1 < (n1-1)d-1", "a2 = (n2-1)d-1"};
        require(a3 == c3, "a3 = (n3-1)d-1");
        require(pc.tie_at_d == TieSet({Term::A3, Term::A2, Term::Deriv}), "T_d = {3,2,∂}");
        require(d2 == d, "deg p2 = d");
    } else if (a1 > c1 && a2 == a1 + (n2 - n1) * d) {
        pc.constraints = {"a1 > (n1-1)d-1", "a2 = a1+(n2-n1)d"};
        if ((n3 - n2) * d <= a3 && a3 < a1 + (n3 - n1) * d) {
            pc.kind = PairCase::C2a;
            pc.constraints.push_back("(n3-n2)d <= a3 < a1+(n3-n1)d");
            require(pc.tie_at_d == TieSet({Term::A2, Term::A1}), "T_d = {2,1}");
            require(Rational(d2) == cd.r32 && d2 < d, "deg p2 = r32 < d");
        } else if (a3 == a1 + (n3 - n1) * d) {
            pc.kind = PairCase::C2b;
            pc.constraints.push_back("a3 = a1+(n3-n1)d");
            require(pc.tie_at_d == TieSet({Term::A3, Term::A2, Term::A1}), "T_d = {3,2,1}");
            require(d2 == d, "deg p2 = d");
        } else {
            fail("case C2 with a3 outside both subcases");
        }
    } else if (a1 == c1 && a2 <= c2) {
        pc.constraints = {"a1 = (n1-1)d-1", "a2 <= (n2-1)d-1"};
        if (a2 == c2 && a3 < c3) {
            pc.kind = PairCase::C3a;
            pc.constraints.push_back("a2 = (n2-1)d-1, a3 < (n3-1)d-1");
            require(pc.tie_at_d == TieSet({Term::A2, Term::A1, Term::Deriv}), "T_d = {2,1,∂}");
            require(cd.r32 <= d2 && d2 <= d && Rational(d) <= cd.r0, "r32 <= deg p2 <= d <= r0");
        } else if (a2 < c2 && a3 == c3) {
            pc.kind = PairCase::C3b;
            pc.constraints.push_back("a2 < (n2-1)d-1, a3 = (n3-1)d-1");
            require(pc.tie_at_d == TieSet({Term::A3, Term::A1, Term::Deriv}), "T_d = {3,1,∂}");
            require(d2 == d, "deg p2 = d");
        } else if (a2 == c2 && a3 == c3) {
            pc.kind = PairCase::C3c;
            pc.constraints.push_back("a2 = (n2-1)d-1, a3 = (n3-1)d-1");
            require(pc.tie_at_d == TieSet({Term::A3, Term::A2, Term::A1, Term::Deriv}), "T_d = {3,2,1,∂}");
            require(d2 == d, "deg p2 = d");
        } else {
            fail("case C3 with binomial tie {1,∂}");
        }
    } else {
        fail("none of C1, C2, C3 holds");
    }

    if (d2 == d) {
        if (pc.kind == PairCase::C1 || pc.kind == PairCase::C2a || pc.kind == PairCase::C2b)
            require(a1 < a2 && a2 < a3, "a1 < a2 < a3");
        else
            require(a1 < a3 && a2 < a3, "a1 < a3 and a2 < a3");
    }
    return pc;
}

PairClass classify_pair(const AbelEquation& eq, const RationalSolution& s1, const RationalSolution& s2) {
    if (&s1 == &s2 || (s1.r == s2.r && s1.context->modulus == s2.context->modulus &&
                       s1.denominator.coeffs.size() == s2.denominator.coeffs.size()))
        throw Error("classify_pair: the two solutions must be distinct");
    return classify_pair(eq, s1.r, s2.r);
}

long per_degree_bound(const EdgeProfile& profile, FieldMode mode) {
    if (mode == FieldMode::Real) return 2L * (profile.tie.size() - 1);
    return profile.reduced_poly.degree();
}

BoundReport count_bound(const AbelEquation& eq, const SolutionSet& sols, FieldMode mode) {
    BoundReport br;
    br.mode = mode;
    br.applies = sols.nd.holds;
    br.realized = mode == FieldMode::Real ? sols.count_real : sols.count_complex;
    const bool real = mode == FieldMode::Real;
    auto per_degree_sum = [&]() {
        long s = 0;
        for (const auto& p : admissible_profiles(eq)) s += per_degree_bound(p, mode);
        return s;
    };
    if (br.realized < 2) {
        br.case_label = "per-degree";
        br.bound = per_degree_sum();
        br.sharp = br.bound == br.realized;
        return br;
    }
    const int r = *sols.gamma_sol.rbegin();
    auto prof = edge_profile(eq, r);
    if (!prof) {
        br.case_label = "unclassified";
        br.bound = per_degree_sum();
        br.sharp = br.bound == br.realized;
        return br;
    }
    const int n1 = eq.n1(), n2 = eq.n2(), n3 = eq.n3();
    switch (classify_tie(*prof, eq)) {
        case TieKind::T32d:
            br.case_label = "(a)";
            br.bound = real ? 4 : n3 - 1;
            break;
        case TieKind::T21:
            br.case_label = "(b)";
            br.bound = real ? 5 : n3;
            break;
        case TieKind::T321:
            br.case_label = "(c)";
            br.bound = real ? 4 : n3 - n1;
            break;
        case TieKind::T21d:
            br.case_label = "(d)";
            br.bound = real ? 12 : (n2 - 1) + 2 * (n3 - 1);
            break;
        case TieKind::T31d:
            br.case_label = "(e)";
            br.bound = real ? 4 : n3 - 1;
            break;
        case TieKind::T321d:
            br.case_label = "(f)";
            br.bound = real ? 5 : n3 - 1;
            break;
        case TieKind::T32:
        case TieKind::T31:
            br.case_label = "exactly one";
            br.exactly_one = true;
            br.bound = 1;
            break;
        default:
            br.case_label = "unclassified";
            br.bound = per_degree_sum();
            break;
    }
    br.sharp = br.bound == br.realized;
    return br;
}

std::array<int, 3> three_solution_degrees(int d1, int d2, int d3, int n1, int n2, int n3) {
    if (!(d1 < d2 && d2 < d3)) throw NonIncreasing();
    int A1 = (n1 - 1) * d3 - 1;
    int A2 = A1 + (n2 - n1) * d2;
    int A3 = A2 + (n3 - n2) * d1;
    return {A1, A2, A3};
}

RatPoly delta123(const RatPoly& p1, const RatPoly& p2, const RatPoly& p3, int n1, int n2, int n3) {
    const unsigned k = static_cast<unsigned>(n3 - n2), m = static_cast<unsigned>(n3 - n1);
    RatPoly u1 = p1.pow(k), u2 = p2.pow(k), u3 = p3.pow(k);
    RatPoly v1 = p1.pow(m), v2 = p2.pow(m), v3 = p3.pow(m);
    // expansion along the column of ones
    return (u2 * v3 - u3 * v2) - (u1 * v3 - u3 * v1) + (u1 * v2 - u2 * v1);
}

}  // namespace abelrat
