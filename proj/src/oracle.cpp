#include "abelrat/errors.hpp"
#include "abelrat/realroots.hpp"
#include "abelrat/solver.hpp"

#include <functional>

namespace abelrat {

namespace {

struct LinearFactor {
    Rational root;
    int multiplicity;
};

// gcd over all t-coefficients of β^(n3-1) T1 + β^(n3-n2) T2 + β^(n3-n1) T3 + A3.
RatPoly beta_gcd(const AbelEquation& eq, const RatPoly& d) {
    RatPoly T1 = d.pow(static_cast<unsigned>(eq.n3() - 2)) * d.derivative();
    RatPoly T2 = eq.A2() * d.pow(static_cast<unsigned>(eq.n3() - eq.n2()));
    RatPoly T3 = eq.A1() * d.pow(static_cast<unsigned>(eq.n3() - eq.n1()));
    const RatPoly& T0 = eq.A3();
    int len = std::max({T1.degree(), T2.degree(), T3.degree(), T0.degree()}) + 1;
    RatPoly g;
    for (int k = 0; k < len; ++k) {
        RatPoly u = RatPoly::monomial(T1.coeff(k), eq.n3() - 1) + RatPoly::monomial(T2.coeff(k), eq.n3() - eq.n2()) +
                    RatPoly::monomial(T3.coeff(k), eq.n3() - eq.n1()) + RatPoly::constant(T0.coeff(k));
        if (u.is_zero()) continue;
        g = g.is_zero() ? u.monic() : gcd(g, u);
        if (g.degree() == 0) return g;
    }
    return g;
}

}  // namespace

OracleOutcome divisor_oracle(const AbelEquation& eq, std::size_t divisor_limit) {
    OracleOutcome out;
    const int k = eq.n3() - eq.n2();
    RatPoly h = power_part(eq.A3(), k);
    std::vector<LinearFactor> factors;
    for (const auto& part : squarefree_decompose(h)) {
        auto roots = rational_roots(part.factor);
        if (static_cast<int>(roots.size()) != part.factor.degree())
            out.reason = "power part of A3 does not split into rational linear factors";
        for (const auto& q : roots) factors.push_back({q, part.multiplicity});
    }
    std::sort(factors.begin(), factors.end(),
              [](const LinearFactor& a, const LinearFactor& b) { return a.root < b.root; });

    const std::set<int> gamma = candidate_degrees(eq).gamma;
    std::vector<RatPoly> divisors;
    std::vector<int> expo(factors.size(), 0);
    bool overflow = false;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int deg) {
        if (overflow) return;
        if (i == factors.size()) {
            if (gamma.count(deg)) {
                RatPoly d = RatPoly::constant(1);
                for (std::size_t j = 0; j < factors.size(); ++j)
                    if (expo[j]) d *= RatPoly{Rational(-factors[j].root), Rational(1)}.pow(static_cast<unsigned>(expo[j]));
                divisors.push_back(d);
                if (divisors.size() > divisor_limit) overflow = true;
            }
            return;
        }
        for (int e = 0; e <= factors[i].multiplicity; ++e) {
            expo[i] = e;
            rec(i + 1, deg + e);
        }
        expo[i] = 0;
    };
    if (!gamma.empty()) rec(0, 0);
    if (overflow) {
        out.reason = "too many candidate divisors";
        return out;
    }
    out.applicable = out.reason.empty();

    int counter = 0;
    for (const RatPoly& d : divisors) {
        RatPoly g = beta_gcd(eq, d);
        if (g.degree() < 1) continue;
        g = squarefree_part(g);
        int v = g.valuation();
        if (v > 0) g = g.drop_low(v);
        if (g.degree() < 1) continue;
        // C = 1/β
        RatPoly cmod = g.reversed(g.degree()).monic();
        std::vector<RatPoly> pieces;
        RatPoly rest = cmod;
        for (const Rational& q : rational_roots(cmod)) {
            RatPoly lin{Rational(-q), Rational(1)};
            pieces.push_back(lin);
            rest = rest / lin;
        }
        if (rest.degree() >= 1) pieces.push_back(rest);
        for (const RatPoly& m : pieces) {
            auto ctx = make_context(m, "oracle." + std::to_string(counter++));
            ModElement invC = ModElement::generator(ctx).inverse();
            CtxPoly p{ctx, {}};
            for (const auto& c : d.coeffs()) p.coeffs.push_back(invC * c);
            for (auto& [branch, ok] : verify_solution(eq, p))
                if (!ok) throw InternalInconsistency("oracle produced a non-solution");
            RationalSolution s;
            s.r = d.degree();
            s.context = ctx;
            s.denominator = p;
            s.real_intervals = isolate_real_roots(m);
            s.real_embeddings = static_cast<int>(s.real_intervals.size());
            s.source = SolutionSource::Oracle;
            out.count_complex += m.degree();
            out.solutions.push_back(std::move(s));
        }
    }
    sort_solutions(out.solutions);
    return out;
}

}  // namespace abelrat
