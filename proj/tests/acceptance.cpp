#include "abelrat/construct.hpp"
#include "abelrat/io.hpp"
#include "abelrat/realroots.hpp"
#include "abelrat/structure.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace abelrat;
using namespace abelrat::testing;

namespace {

// Pinned thresholds.
constexpr double kExampleSeconds = 2.0;
constexpr double kRoundTripSeconds = 60.0;
constexpr int kRoundTripInstances = 200;
constexpr int kThreeSolutionInstances = 50;
constexpr int kBinomialInstances = 20;
constexpr int kKernelCases = 500;
constexpr int kCaseDInstances = 300;
constexpr long kRealHeadlineBound = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RatPoly P(const std::string& s) { return parse_polynomial(s); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

// Every solved instance, kept for the bound checks.
struct Solved {
    std::string source;
    AbelEquation eq;
    SolutionSet complex;
    SolutionSet real;
};
std::vector<Solved> g_pool;

void add_to_pool(const std::string& source, const AbelEquation& eq, const SolutionSet* complex = nullptr) {
    SolutionSet c = complex ? *complex : solve(eq, FieldMode::Complex);
    SolutionSet r = solve(eq, FieldMode::Real);
    g_pool.push_back({source, eq, std::move(c), std::move(r)});
}

bool recovers(const std::vector<RationalSolution>& sols, const RatPoly& p) {
    const Rational C = 1 / p.lc();
    for (const auto& s : sols) {
        if (s.r != p.degree() || s.context->modulus.eval(C) != 0) continue;
        auto child = make_context(RatPoly{Rational(-C), Rational(1)}, "x");
        CtxPoly q = s.denominator.lift_to(child);
        bool same = true;
        for (int k = 0; k <= p.degree(); ++k)
            same = same && q.coeffs[static_cast<std::size_t>(k)].as_rational() == p.coeff(k);
        if (same) return true;
    }
    return false;
}

void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    AbelEquation eq(2, 4, 6, P("23/3*t"), P("-7*t^5"), P("4/3*t^9"));
    SolutionSet s = solve(eq, FieldMode::Real);
    BoundReport br = count_bound(eq, s, FieldMode::Real);
    const double secs = seconds_since(t0);

    CandidateDegrees cd = candidate_degrees(eq);
    o.require(cd.gamma == std::set<int>{2}, "gamma = {2}");
    auto prof = edge_profile(eq, 2);
    o.require(prof.has_value(), "r = 2 edge-admissible");
    if (prof) {
        o.require(prof->tie.label() == "{3,2,1,∂}", "T_2 = {3,2,1,∂}");
        RatPoly f = P("t*(t + 1)*(t + 2)*(2*t - 3)*(2*t^2 - 3*t - 1)");
        o.require(prof->edge_poly.scale(f.lc()) == f.scale(prof->edge_poly.lc()), "P_2 factorization");
    }
    o.require(s.nd.holds, "ND holds");
    o.require(s.count_real == 5 && s.solutions.size() == 4, "five real solutions in four contexts");
    std::vector<RatPoly> rational;
    bool quad = false;
    for (const auto& x : s.solutions) {
        if (auto p = x.rational_denominator()) rational.push_back(*p);
        if (x.context->degree() == 2) {
            quad = x.context->modulus == P("t^2 - 3/2*t - 1/2") && x.real_embeddings == 2 &&
                   x.denominator.degree() == 2 && x.denominator.coeffs[0].is_literal_zero() &&
                   x.denominator.coeffs[1].is_literal_zero() &&
                   (x.denominator.coeffs[2] * ModElement::generator(x.context)).value() == RatPoly::constant(1);
        }
    }
    for (const char* p : {"-1/2*t^2", "-t^2", "2/3*t^2"})
        o.require(std::find(rational.begin(), rational.end(), P(p)) != rational.end(), std::string("p = ") + p);
    o.require(quad, "x = (3 ± √17)/(4t^2) as one context with two real embeddings");
    o.require(br.case_label == "(f)" && br.bound == 5 && br.realized == 5 && br.sharp, "bound (f) 5/5 sharp");
    o.require(secs < kExampleSeconds, "runtime");
    o.detail << "solutions " << s.count_real << ", bound " << br.case_label << " " << br.realized << "/" << br.bound
             << ", " << secs << " s";
}

void criterion2(Outcome& o) {
    RatPoly P2 = P("4/3*t^6 - 7*t^4 + 23/3*t^2 + 2*t");
    RatPoly d = P2.derivative();
    const std::pair<const char*, const char*> spots[] = {{"-2", "-182/3"}, {"-1", "20/3"}, {"3/2", "-35/4"}};
    for (auto [at, want] : spots) {
        Rational x = parse_rational(at), w = parse_rational(want);
        o.require(d.eval(x) == w, std::string("P2'(") + at + ")");
        o.require(horner_derivative(P2.coeffs(), x) == w, std::string("P2'(") + at + ") by Horner");
    }
    // the root of 2C^2 - 3C - 1 in (-1, 0) is (3 - √17)/4
    auto ctx = make_context(P("2*t^2 - 3*t - 1"), "q");
    auto roots = isolate_real_roots(ctx->modulus);
    o.require(roots.size() == 2, "two real roots");
    if (roots.size() == 2) {
        RootInterval iv = refine_root(ctx->modulus, roots[0], frac(1, 100));
        o.require(iv.lo >= -1 && iv.hi <= 0, "root in (-1, 0)");
        o.require(real_root_count(ctx->modulus, Rational(-1), Rational(0)) == 1, "one sign change on (-1, 0)");
    }
    QuadraticSurd C{frac(3, 4), frac(-1, 4), Integer(17)};
    o.require(eval_surd(ctx->modulus, C) == QuadraticSurd{0, 0, Integer(17)}, "(3 - √17)/4 is a root");
    QuadraticSurd want{frac(51, 8), frac(-47, 24), Integer(17)};
    o.require(eval_surd(d, C) == want, "direct surd evaluation");
    // reduction in the quotient ring, then substitution
    ModElement g = ModElement::generator(ctx), acc(ctx, Rational(0));
    for (int k = d.degree(); k >= 0; --k) acc = acc * g + ModElement(ctx, d.coeff(k));
    o.require(acc.value().degree() <= 1, "reduced to a + bC");
    o.require(eval_surd(acc.value(), C) == want, "context evaluation");
    o.detail << "P2'(C) = " << to_string(acc.value().coeff(0)) << " + " << to_string(acc.value().coeff(1)) << " C";
}

void criterion3(Outcome& o) {
    const auto t0 = Clock::now();
    Rng rng(2024);
    int accepted = 0, attempts = 0, recovered = 0, applicable = 0, agree = 0;
    while (accepted < kRoundTripInstances) {
        ++attempts;
        auto inst = try_two_solution_instance(rng);
        if (!inst) continue;
        ++accepted;
        SolutionSet s = solve(inst->eq, FieldMode::Complex, SolveOptions{0, true});
        bool both = recovers(s.solutions, inst->p1) && recovers(s.solutions, inst->p2);
        recovered += both;
        o.require(both, "recovery of both prescribed solutions");
        if (s.oracle_applicable) {
            ++applicable;
            agree += s.oracle_agreement == true;
            o.require(s.oracle_agreement == true, "oracle agreement");
        }
        o.require(s.violations.empty(), "no theorem-level violation");
        add_to_pool("two-solution", inst->eq, &s);
    }
    const double secs = seconds_since(t0);
    o.require(secs < kRoundTripSeconds, "runtime");
    o.detail << recovered << "/" << accepted << " recovered (" << attempts << " attempts), oracle " << agree << "/"
             << applicable << ", " << secs << " s";
}

void criterion4(Outcome& o) {
    Rng rng(7);
    int n = 0, attempts = 0, with_three = 0;
    while (n < kThreeSolutionInstances && attempts < 50 * kThreeSolutionInstances) {
        ++attempts;
        auto inst = try_three_solution_instance(rng);
        if (!inst) continue;
        ++n;
        const auto& p = inst->p;
        const AbelEquation& eq = inst->eq;
        o.require(p[0].degree() < p[1].degree() && p[1].degree() < p[2].degree(), "strictly increasing degrees");
        auto want = three_solution_degrees(p[0].degree(), p[1].degree(), p[2].degree(), eq.n1(), eq.n2(), eq.n3());
        o.require(want == std::array<int, 3>{eq.a(Term::A1), eq.a(Term::A2), eq.a(Term::A3)}, "degree law");
        SolutionSet s = solve(eq, FieldMode::Complex);
        for (const RatPoly& q : p) o.require(recovers(s.solutions, q), "prescribed solution recovered");
        if (s.count_complex >= 3) {
            ++with_three;
            o.require(s.gamma_sol.size() <= 3, "|gamma_sol| <= 3");
        }
        add_to_pool("three-solution", eq, &s);
    }
    o.require(n >= kThreeSolutionInstances, "instance count");
    o.detail << n << " instances (" << attempts << " attempts), " << with_three << " with >= 3 solutions";
}

void criterion6(Outcome& o) {
    Rng rng(99);
    int n = 0, attempts = 0;
    std::map<std::string, int> by_term;
    while (n < kBinomialInstances && attempts < 2000 * kBinomialInstances) {
        ++attempts;
        auto inst = try_binomial_instance(rng);
        if (!inst) continue;
        ++n;
        const AbelEquation& eq = inst->eq;
        const int N = (eq.n(inst->term) - 1) * inst->r;
        ++by_term[std::string("{") + term_label(inst->term) + ",∂}"];
        auto prof = edge_profile(eq, inst->r);
        o.require(prof.has_value(), "profile");
        if (!prof) continue;
        for (const LeadingRoot& lr : leading_roots(*prof, FieldMode::Complex))
            for (const LaurentPrefix& pre : extend_series(eq, *prof, lr, N + 2))
                o.require(pre.resonant_at == N, "resonance at (n_i - 1) r");
        SolutionSet s = solve(eq, FieldMode::Complex);
        o.require(s.gamma_sol.count(inst->r) == 0, "no solution at the binomial degree");
        add_to_pool("binomial", eq, &s);
    }
    o.require(n >= kBinomialInstances, "instance count");
    o.detail << n << " instances:";
    for (auto& [k, v] : by_term) o.detail << " " << k << " x" << v;
}

void criterion7(Outcome& o) {
    Rng rng(77);
    int ok[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < kKernelCases; ++i) {
        // resultant vanishes iff the gcd is nonconstant
        RatPoly a = random_poly(rng, 1 + i % 4), b = random_poly(rng, 1 + (i / 4) % 3);
        if (i % 2 == 0) {
            RatPoly common = random_poly(rng, 1);
            a *= common;
            b *= common;
        }
        bool r0 = resultant(a, b) == 0, g1 = gcd(a, b).degree() > 0;
        ok[0] += r0 == g1;
        o.require(r0 == g1, "resultant-gcd");

        // squarefree reconstruction
        FactoredPoly f = random_factored(rng, 1 + i % 4, 3);
        auto parts = squarefree_decompose(f.poly);
        RatPoly prod = RatPoly::constant(f.lc);
        bool sf_ok = true;
        for (const auto& part : parts) {
            prod *= part.factor.pow(static_cast<unsigned>(part.multiplicity));
            sf_ok = sf_ok && gcd(part.factor, part.factor.derivative()).degree() == 0;
            int want = 0;
            for (auto& [root, m] : f.factors)
                if (m == part.multiplicity) ++want;
            sf_ok = sf_ok && part.factor.degree() == want;
        }
        sf_ok = sf_ok && prod == f.poly;
        ok[1] += sf_ok;
        o.require(sf_ok, "squarefree reconstruction");

        // power part: h^k | f and h is the predicted product
        const int k = 2 + i % 3;
        RatPoly h = power_part(f.poly, k);
        RatPoly want = RatPoly::constant(1);
        for (auto& [root, m] : f.factors)
            want *= RatPoly{Rational(-root), Rational(1)}.pow(static_cast<unsigned>(m / k));
        bool pp_ok = divides_exactly(h.pow(static_cast<unsigned>(k)), f.poly) && h.monic() == want;
        ok[2] += pp_ok;
        o.require(pp_ok, "power_part divisibility");

        // Sturm count vs Descartes bound: inequality and parity on squarefree input without zero root
        RatPoly q = random_split_squarefree(rng, 1 + i % 5) * random_poly(rng, i % 3);
        q = squarefree_part(q);
        if (q.coeff(0) == 0) q = q.drop_low(q.valuation());
        bool sd_ok = true;
        if (q.degree() > 0) {
            Rational R = cauchy_bound(q) + 1;
            int pos = real_root_count(q, Rational(0), R);
            int neg = real_root_count(q.compose_monomial(Rational(-1), 1), Rational(0), R);
            auto [vp, vn] = descartes_bound(q);
            sd_ok = pos <= vp && (vp - pos) % 2 == 0 && neg <= vn && (vn - neg) % 2 == 0 &&
                    pos + neg == real_root_count(q);
        }
        ok[3] += sd_ok;
        o.require(sd_ok, "Sturm vs Descartes");

        // dynamic evaluation: split, invert per branch, recombine
        RatPoly m = random_split_squarefree(rng, 2 + i % 3);
        auto ctx = make_context(m, "m");
        ModElement x(ctx, random_poly(rng, m.degree() - 1));
        auto leaves = run_split(ctx, [&](const ContextPtr& c) {
            ModElement xl = x.lift_to(c);
            if (xl.is_zero()) return ModElement(c, Rational(0));
            return xl.inverse();
        });
        RatPoly mods = RatPoly::constant(1);
        bool de_ok = true;
        for (auto& [c, inv] : leaves) {
            mods *= c->modulus;
            if (!inv.is_literal_zero()) de_ok = de_ok && (x.lift_to(c) * inv).value() == RatPoly::constant(1);
        }
        de_ok = de_ok && mods == m;
        if (leaves.size() == 2)
            de_ok = de_ok && crt_combine(x.lift_to(leaves[0].first), x.lift_to(leaves[1].first), ctx).value() == x.value();
        ok[4] += de_ok;
        o.require(de_ok, "split and recombine");
    }
    o.detail << "resultant-gcd " << ok[0] << ", squarefree " << ok[1] << ", power_part " << ok[2]
             << ", Sturm/Descartes " << ok[3] << ", split " << ok[4] << " of " << kKernelCases;
}

// Tie {2,1,∂} at the top degree: a1 = (n1-1)d-1, a2 = (n2-1)d-1, (n3-n2)d <= a3 < (n3-1)d-1.
void build_case_d_pool() {
    Rng rng(12);
    int made = 0;
    for (int i = 0; made < kCaseDInstances && i < 20 * kCaseDInstances; ++i) {
        auto n = random_exponents(rng, 6);
        const int d = 1 + i % 2;
        const int lo = (n[2] - n[1]) * d, hi = (n[2] - 1) * d - 2;
        if (lo > hi) continue;
        const int a3 = std::uniform_int_distribution<int>(lo, hi)(rng);
        AbelEquation eq(n[0], n[1], n[2], random_poly(rng, (n[0] - 1) * d - 1, 3, 2),
                        random_poly(rng, (n[1] - 1) * d - 1, 3, 2), random_poly(rng, a3, 3, 2));
        auto prof = edge_profile(eq, d);
        if (!prof || classify_tie(*prof, eq) != TieKind::T21d) continue;
        ++made;
        add_to_pool("case-d", eq);
    }
}

void criterion5(Outcome& o) {
    // The bounds are stated under ND. Without ND the report must say the bound is not established;
    // exceedances there are counted, not failed.
    int checked = 0, nd_fail = 0, over = 0, over_without_nd = 0;
    for (const Solved& x : g_pool) {
        for (const SolutionSet* s : {&x.complex, &x.real}) {
            const FieldMode m = s->mode;
            BoundReport br = count_bound(x.eq, *s, m);
            bool ok = br.realized <= br.bound;
            std::map<int, std::pair<int, int>> per;
            for (const auto& sol : s->solutions) {
                per[sol.r].first += sol.context->degree();
                per[sol.r].second += sol.real_embeddings;
            }
            for (auto& [r, cnt] : per) {
                auto prof = edge_profile(x.eq, r);
                ok = ok && prof.has_value();
                if (!prof) continue;
                ok = ok && cnt.first <= prof->reduced_poly.degree();
                if (m == FieldMode::Real) ok = ok && cnt.second <= 2 * (prof->tie.size() - 1);
            }
            ++checked;
            o.require(s->violations.empty(), x.source + " instance has no theorem-level violation");
            if (!s->nd.holds) {
                ++nd_fail;
                over_without_nd += !ok;
                o.require(!br.applies, x.source + " instance without ND reports the bound as not established");
                continue;
            }
            o.require(br.applies, x.source + " instance with ND reports the bound as established");
            if (!ok) ++over;
            o.require(ok, x.source + " instance within bounds (" + field_mode_label(m) + ")");
        }
    }
    o.detail << checked << " solution sets over " << g_pool.size() << " equations, " << checked - nd_fail
             << " with ND: " << over << " over a bound; without ND " << over_without_nd << " of " << nd_fail
             << " exceed the ND bound";
}

void criterion8(Outcome& o) {
    long max_case_d = 0, max_all = 0;
    int case_d = 0;
    for (const Solved& x : g_pool) {
        const long c = x.real.count_real;
        max_all = std::max(max_all, c);
        if (x.source == "case-d") {
            ++case_d;
            max_case_d = std::max(max_case_d, c);
        }
        o.require(c <= kRealHeadlineBound, x.source + " instance real count <= 12");
    }
    o.require(case_d > 0, "case (d) instances generated");
    o.detail << "non-falsification: " << case_d << " case (d) equations, max real count " << max_case_d
             << "; max over all " << g_pool.size() << " equations " << max_all;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const Criterion criteria[] = {
        {1, "five-solution example reproduced", criterion1},
        {2, "derivative values at the nonzero roots", criterion2},
        {3, "two-solution round trip with oracle agreement", criterion3},
        {4, "three-solution degree law", criterion4},
        {6, "binomial ties resonate and carry no solution", criterion6},
        {7, "kernel properties", criterion7},
        {5, "realized counts within every bound", [](Outcome& o) {
             build_case_d_pool();
             criterion5(o);
         }},
        {8, "real count never exceeds 12", criterion8},
    };
    std::map<int, std::string> lines;
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        lines[c.id] = std::string(o.pass ? "PASS" : "FAIL") + "  criterion " + std::to_string(c.id) + ": " + c.name +
                      " | " + o.detail.str();
    }
    for (const auto& [id, line] : lines) std::printf("%s\n", line.c_str());
    return all ? 0 : 1;
}
