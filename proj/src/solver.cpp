#include "abelrat/solver.hpp"

#include "abelrat/errors.hpp"
#include "abelrat/realroots.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace abelrat {

std::optional<RatPoly> RationalSolution::rational_denominator() const {
    if (context->degree() != 1) return std::nullopt;
    std::vector<Rational> v;
    for (const auto& c : denominator.coeffs) v.push_back(c.as_rational());
    return RatPoly(std::move(v));
}

const char* root_status_label(RootStatus s) {
    switch (s) {
        case RootStatus::Exhaustive: return "exhaustive";
        case RootStatus::NoRealEmbedding: return "no-real-embedding";
        case RootStatus::MultipleRoot: return "multiple-root";
        case RootStatus::ResonantOpen: return "resonant-open";
    }
    return "?";
}

namespace {

CtxPoly identity_residual(const AbelEquation& eq, const CtxPoly& p) {
    const ContextPtr& ctx = p.ctx;
    CtxPoly lhs = ctx_mul(ctx_pow(p, static_cast<unsigned>(eq.n3() - 2)), ctx_derivative(p));
    lhs = ctx_add(lhs, ctx_poly_from(ctx, eq.A3()));
    lhs = ctx_add(lhs, ctx_mul(ctx_poly_from(ctx, eq.A2()), ctx_pow(p, static_cast<unsigned>(eq.n3() - eq.n2()))));
    lhs = ctx_add(lhs, ctx_mul(ctx_poly_from(ctx, eq.A1()), ctx_pow(p, static_cast<unsigned>(eq.n3() - eq.n1()))));
    return lhs;
}

}  // namespace

bool verify_in_context(const AbelEquation& eq, const CtxPoly& p) {
    if (p.degree() < 1) throw Error("verify_solution: p must be nonconstant");
    CtxPoly res = identity_residual(eq, p);
    for (const auto& c : res.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool power_divides_a3(const AbelEquation& eq, const CtxPoly& p) {
    CtxPoly P = ctx_pow(p, static_cast<unsigned>(eq.n3() - eq.n2()));
    CtxPoly rem = ctx_poly_from(p.ctx, eq.A3());
    const int dP = P.degree();
    if (static_cast<int>(rem.coeffs.size()) - 1 < dP) {
        for (const auto& c : rem.coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    ModElement inv = P.coeffs.back().inverse();
    for (int k = static_cast<int>(rem.coeffs.size()) - 1; k >= dP; --k) {
        ModElement f = rem.coeffs[static_cast<std::size_t>(k)] * inv;
        if (f.is_literal_zero()) continue;
        for (int j = 0; j <= dP; ++j)
            rem.coeffs[static_cast<std::size_t>(k - dP + j)] -= f * P.coeffs[static_cast<std::size_t>(j)];
    }
    for (int k = 0; k < dP; ++k)
        if (!rem.coeffs[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
}

std::vector<std::pair<ContextPtr, bool>> verify_solution(const AbelEquation& eq, const CtxPoly& p) {
    return run_split(p.ctx, [&](const ContextPtr& c) { return verify_in_context(eq, p.lift_to(c)); });
}

bool verify_solution(const AbelEquation& eq, const RatPoly& p) {
    auto ctx = make_context(RatPoly::variable(), "Q");
    return verify_in_context(eq, ctx_poly_from(ctx, p));
}

void sort_solutions(std::vector<RationalSolution>& sols) {
    std::stable_sort(sols.begin(), sols.end(), [](const RationalSolution& a, const RationalSolution& b) {
        if (a.r != b.r) return a.r < b.r;
        return lex_less(a.context->modulus, b.context->modulus);
    });
}

namespace {

RationalSolution make_solution(int r, const CtxPoly& p, SolutionSource src) {
    RationalSolution s;
    s.r = r;
    s.context = p.ctx;
    s.denominator = p;
    s.real_intervals = isolate_real_roots(p.ctx->modulus);
    s.real_embeddings = static_cast<int>(s.real_intervals.size());
    s.source = src;
    return s;
}

std::map<int, std::vector<const RationalSolution*>> by_degree(const std::vector<RationalSolution>& s) {
    std::map<int, std::vector<const RationalSolution*>> out;
    for (const auto& x : s) out[x.r].push_back(&x);
    return out;
}

// Largest factor of g on which the two denominators agree coefficientwise.
RatPoly agreement(const RationalSolution& a, const RationalSolution& b, RatPoly g) {
    std::size_t n = std::max(a.denominator.coeffs.size(), b.denominator.coeffs.size());
    for (std::size_t i = 0; i < n && g.degree() > 0; ++i) {
        RatPoly x = i < a.denominator.coeffs.size() ? a.denominator.coeffs[i].value() : RatPoly();
        RatPoly y = i < b.denominator.coeffs.size() ? b.denominator.coeffs[i].value() : RatPoly();
        RatPoly diff = (x - y) % g;
        if (!diff.is_zero()) g = gcd(g, diff);
    }
    return g;
}

// Factor of the modulus of s whose embeddings match no solution in others.
RatPoly uncovered(const RationalSolution& s, const std::vector<const RationalSolution*>& others) {
    RatPoly rest = s.context->modulus.monic();
    for (const RationalSolution* o : others) {
        if (rest.degree() < 1) break;
        if (o->r != s.r) continue;
        RatPoly g = gcd(rest, o->context->modulus);
        if (g.degree() < 1) continue;
        RatPoly a = agreement(s, *o, g);
        if (a.degree() > 0) rest = rest / a.monic();
    }
    return rest;
}

}  // namespace

bool same_solutions(const std::vector<RationalSolution>& a, const std::vector<RationalSolution>& b, FieldMode mode) {
    auto ga = by_degree(a), gb = by_degree(b);
    auto covered = [mode](const std::vector<const RationalSolution*>& xs,
                          const std::vector<const RationalSolution*>& ys) {
        for (const RationalSolution* x : xs) {
            RatPoly u = uncovered(*x, ys);
            if (u.degree() < 1) continue;
            if (mode == FieldMode::Complex || real_root_count(u) != 0) return false;
        }
        return true;
    };
    std::set<int> degrees;
    for (auto& [r, v] : ga) degrees.insert(r);
    for (auto& [r, v] : gb) degrees.insert(r);
    for (int r : degrees)
        if (!covered(ga[r], gb[r]) || !covered(gb[r], ga[r])) return false;
    return true;
}

namespace {

struct CandidateOutcome {
    std::optional<CtxPoly> accepted;
};

CandidateOutcome try_candidate(const AbelEquation& eq, const LaurentPrefix& prefix, const ContextPtr& ctx,
                               bool allow_short) {
    LaurentPrefix lifted = prefix;
    lifted.context = ctx;
    for (auto& c : lifted.coefficients) c = c.lift_to(ctx);
    auto cand = reciprocal_candidate(lifted, allow_short);
    if (std::holds_alternative<NotRational>(cand)) return {};
    CtxPoly p = std::get<CtxPoly>(cand);
    if (!power_divides_a3(eq, p)) return {};
    if (!verify_in_context(eq, p)) return {};
    return {p};
}

int series_order(const EdgeProfile& prof, const SolveOptions& opts) {
    return std::max(default_series_order(prof.r), opts.max_series_order);
}

RatPoly rational_residual(const AbelEquation& eq, const RatPoly& p) {
    return p.pow(static_cast<unsigned>(eq.n3() - 2)) * p.derivative() + eq.A3() +
           eq.A2() * p.pow(static_cast<unsigned>(eq.n3() - eq.n2())) +
           eq.A1() * p.pow(static_cast<unsigned>(eq.n3() - eq.n1()));
}

// Solutions of degree r with rational leading coefficient 1/C when the coefficient of
// t^(r-N) is free for one N <= r. Works directly on the coefficients of p: the coefficient
// of t^(top-j) in the residual is affine in b_(r-j). The free coefficient is a parameter λ;
// the residual is interpolated in λ and its rational common roots are the solutions.
// nullopt when the family is not settled this way.
std::optional<std::vector<RatPoly>> resolve_resonance(const AbelEquation& eq, int r, const Rational& C) {
    const int top = std::max({(eq.n3() - 1) * r - 1, eq.a(Term::A3), eq.a(Term::A2) + (eq.n3() - eq.n2()) * r,
                              eq.a(Term::A1) + (eq.n3() - eq.n1()) * r});
    const RatPoly lead = RatPoly::monomial(1 / C, r);

    // Steps before the free coefficient do not depend on λ.
    RatPoly head = lead;
    int free_j = 0;
    for (int j = 1; j <= r && !free_j; ++j) {
        const int e = top - j;
        Rational v0 = rational_residual(eq, head).coeff(e);
        Rational L = rational_residual(eq, head + RatPoly::monomial(Rational(1), r - j)).coeff(e) - v0;
        if (L != 0) {
            head += RatPoly::monomial(-v0 / L, r - j);
            continue;
        }
        if (v0 != 0) return std::vector<RatPoly>{};
        free_j = j;
    }
    if (!free_j) {
        std::vector<RatPoly> out;
        if (rational_residual(eq, head).is_zero()) out.push_back(head);
        return out;
    }

    bool settled = true;
    auto complete = [&](const Rational& lam) {
        RatPoly p = head + RatPoly::monomial(lam, r - free_j);
        for (int j = free_j + 1; j <= r; ++j) {
            const int e = top - j;
            Rational v0 = rational_residual(eq, p).coeff(e);
            Rational L = rational_residual(eq, p + RatPoly::monomial(Rational(1), r - j)).coeff(e) - v0;
            if (L == 0) {
                settled = false;  // a second free coefficient
                return p;
            }
            p += RatPoly::monomial(-v0 / L, r - j);
        }
        return p;
    };

    // b_(r-i) has degree at most i/N in λ, so the residual has degree at most top/N.
    const int D = top / free_j + 1;
    std::vector<Rational> xs;
    std::vector<RatPoly> residuals;
    for (int k = 0; k <= D + 2; ++k) {
        xs.emplace_back(k);
        residuals.push_back(rational_residual(eq, complete(Rational(k))));
        if (!settled) return std::nullopt;
    }
    int len = 0;
    for (const auto& R : residuals) len = std::max(len, R.degree() + 1);
    RatPoly g;
    const std::vector<Rational> fit_x(xs.begin(), xs.begin() + D + 1);
    for (int i = 0; i < len; ++i) {
        std::vector<Rational> ys;
        for (const auto& R : residuals) ys.push_back(R.coeff(i));
        RatPoly f = interpolate(fit_x, std::vector<Rational>(ys.begin(), ys.begin() + D + 1));
        for (int k = D + 1; k <= D + 2; ++k)
            if (f.eval(xs[static_cast<std::size_t>(k)]) != ys[static_cast<std::size_t>(k)]) return std::nullopt;
        if (!f.is_zero()) g = g.is_zero() ? f.monic() : gcd(g, f);
    }
    if (g.is_zero()) return std::nullopt;  // a one-parameter family
    std::vector<RatPoly> out;
    for (const Rational& lam : rational_roots(g)) {
        RatPoly p = complete(lam);
        if (rational_residual(eq, p).is_zero()) out.push_back(p);
    }
    return out;
}

struct MultipleRootResult {
    std::vector<RatPoly> solutions;
    bool settled = true;
};

// Rational C of multiplicity > 1 with ∂ outside the tie: every slope vanishes, so b_(r-m)
// is fixed one order lower, by the coefficient of t^(top-m-1), a polynomial in b_(r-m);
// b_0 by the gcd of all residual coefficients. Branches over rational roots; irrational
// roots or an undetermined coefficient leave the result unsettled.
MultipleRootResult resolve_multiple_root(const AbelEquation& eq, int r, const Rational& C) {
    const int top = std::max({(eq.n3() - 1) * r - 1, eq.a(Term::A3), eq.a(Term::A2) + (eq.n3() - eq.n2()) * r,
                              eq.a(Term::A1) + (eq.n3() - eq.n1()) * r});
    MultipleRootResult out;
    std::vector<Rational> xs;
    for (int k = 0; k < eq.n3(); ++k) xs.emplace_back(k);  // the residual has degree <= n3 - 1 in b_(r-m)

    std::function<void(const RatPoly&, int)> descend = [&](const RatPoly& p, int m) {
        if (!out.settled) return;
        if (m > r) {
            if (rational_residual(eq, p).is_zero()) out.solutions.push_back(p);
            return;
        }
        std::vector<RatPoly> residuals;
        for (const Rational& x : xs) residuals.push_back(rational_residual(eq, p + RatPoly::monomial(x, r - m)));
        auto branch = [&](const RatPoly& f) {
            auto roots = rational_roots(f);
            if (static_cast<int>(roots.size()) < squarefree_part(f).degree()) out.settled = false;
            for (const Rational& b : roots) descend(p + RatPoly::monomial(b, r - m), m + 1);
        };
        if (m == r) {
            // last coefficient: every residual coefficient is a polynomial in b_0
            RatPoly g;
            int len = 0;
            for (const auto& R : residuals) len = std::max(len, R.degree() + 1);
            for (int i = 0; i < len; ++i) {
                std::vector<Rational> ys;
                for (const auto& R : residuals) ys.push_back(R.coeff(i));
                RatPoly f = interpolate(xs, ys);
                if (!f.is_zero()) g = g.is_zero() ? f.monic() : gcd(g, f);
            }
            if (g.is_zero()) {
                out.settled = false;
                return;
            }
            branch(g);
            return;
        }
        std::vector<Rational> same, next;
        for (const auto& R : residuals) {
            same.push_back(R.coeff(top - m));
            next.push_back(R.coeff(top - m - 1));
        }
        if (!interpolate(xs, same).is_zero()) {
            // a nonzero slope or an unmet lower-order condition
            if (interpolate(xs, same).degree() > 0) out.settled = false;
            return;
        }
        RatPoly f = interpolate(xs, next);
        if (f.is_zero()) {
            out.settled = false;
            return;
        }
        branch(f);
    };
    descend(RatPoly::monomial(1 / C, r), 1);
    return out;
}

}  // namespace

SolutionSet solve(const AbelEquation& eq, FieldMode mode, const SolveOptions& opts) {
    SolutionSet out;
    out.mode = mode;
    out.nd = check_nd(eq, mode);
    std::set<int> open_degrees;
    std::vector<RationalSolution> found;

    for (const EdgeProfile& prof : admissible_profiles(eq)) {
        const int r = prof.r;
        const int M = series_order(prof, opts);
        for (const LeadingRoot& root : leading_roots(prof, mode)) {
            RootRecord rec;
            rec.r = r;
            rec.modulus = root.context->modulus;
            if (root.flagged_no_real) {
                rec.status = RootStatus::NoRealEmbedding;
                out.roots.push_back(rec);
                continue;
            }
            if (root.multiplicity > 1) {
                rec.status = RootStatus::MultipleRoot;
                // With ∂ tied the divisor at step N is N, so the series is still unique.
                if (!prof.tie.has(Term::Deriv)) {
                    if (root.context->degree() == 1) {
                        const Rational C = -root.context->modulus.coeff(0);
                        MultipleRootResult mr = resolve_multiple_root(eq, r, C);
                        for (const RatPoly& p : mr.solutions) {
                            CtxPoly q{root.context, {}};
                            for (const auto& c : p.coeffs()) q.coeffs.emplace_back(root.context, c);
                            found.push_back(make_solution(r, q, SolutionSource::Series));
                            ++rec.accepted;
                        }
                        if (mr.settled) rec.status = RootStatus::Exhaustive;
                    }
                    if (rec.status == RootStatus::MultipleRoot) open_degrees.insert(r);
                    out.roots.push_back(rec);
                    continue;
                }
            }
            for (const LaurentPrefix& prefix : extend_series(eq, prof, root, M)) {
                bool allow_short = false;
                if (prefix.resonant_at) {
                    rec.resonant_at = prefix.resonant_at;
                    if (*prefix.resonant_at <= r) {
                        if (!prefix.resonance_solvable.value_or(true)) continue;
                        std::optional<std::vector<RatPoly>> fam;
                        if (prefix.context->degree() == 1)
                            fam = resolve_resonance(eq, r, -prefix.context->modulus.coeff(0));
                        if (!fam) {
                            rec.status = RootStatus::ResonantOpen;
                            open_degrees.insert(r);
                            continue;
                        }
                        for (const RatPoly& p : *fam) {
                            CtxPoly q{prefix.context, {}};
                            for (const auto& c : p.coeffs()) q.coeffs.emplace_back(prefix.context, c);
                            found.push_back(make_solution(r, q, SolutionSource::Series));
                            ++rec.accepted;
                        }
                        continue;
                    }
                    // c_0..c_r are fixed before the resonance, hence so is p.
                    if (!prefix.resonance_solvable.value_or(true)) continue;
                    allow_short = true;
                }
                auto results = run_split(prefix.context, [&](const ContextPtr& c) {
                    return try_candidate(eq, prefix, c, allow_short);
                });
                for (auto& [ctx, res] : results) {
                    if (!res.accepted) continue;
                    RationalSolution s = make_solution(r, *res.accepted, SolutionSource::Series);
                    if (mode == FieldMode::Real && s.real_embeddings == 0) continue;
                    found.push_back(std::move(s));
                    ++rec.accepted;
                }
            }
            out.roots.push_back(rec);
        }
    }

    out.exhaustive = open_degrees.empty();
    if (!out.exhaustive || !out.nd.holds || opts.run_oracle) {
        OracleOutcome orc = divisor_oracle(eq);
        out.oracle_attempted = true;
        out.oracle_applicable = orc.applicable;
        // Add oracle solutions at degrees the series could not settle. An inapplicable
        // oracle still contributes the verified solutions it found.
        {
            auto solved = by_degree(found);
            auto oracle = by_degree(orc.solutions);
            std::vector<RationalSolution> extra;
            for (int r : open_degrees) {
                for (const RationalSolution* os : oracle[r]) {
                    RatPoly rest = uncovered(*os, solved[r]);
                    if (rest.degree() < 1) continue;
                    auto ctx = make_context(rest, os->context->label + ".new");
                    RationalSolution s = make_solution(r, os->denominator.lift_to(ctx), SolutionSource::Oracle);
                    if (mode == FieldMode::Real && s.real_embeddings == 0) continue;
                    extra.push_back(std::move(s));
                }
            }
            for (auto& s : extra) found.push_back(std::move(s));
        }
        if (orc.applicable) {
            std::vector<RationalSolution> filtered;
            for (const auto& s : orc.solutions)
                if (mode == FieldMode::Complex || s.real_embeddings > 0) filtered.push_back(s);
            out.oracle_agreement = same_solutions(found, filtered, mode);
        }
    }
    if (out.nd.holds)
        out.certification = out.exhaustive ? "certified" : (out.oracle_applicable ? "oracle-backed" : "unverified");
    else
        out.certification = out.oracle_applicable ? "oracle-backed" : "unverified";

    sort_solutions(found);
    out.solutions = std::move(found);
    for (const auto& s : out.solutions) {
        out.count_complex += s.context->degree();
        out.count_real += s.real_embeddings;
        out.gamma_sol.insert(s.r);
    }

    // Theorem-level assertions.
    if (out.nd.holds) {
        for (auto& [r, group] : by_degree(out.solutions))
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = i + 1; j < group.size(); ++j)
                    if (gcd(group[i]->context->modulus, group[j]->context->modulus).degree() > 0)
                        out.violations.push_back("degree " + std::to_string(r) +
                                                 ": two solutions share a leading coefficient");
    }
    if (out.count() >= 3 && out.gamma_sol.size() > 3)
        out.violations.push_back("more than three realized degrees with at least three solutions");
    if (out.nd.holds) {
        for (auto& [r, group] : by_degree(out.solutions)) {
            auto prof = edge_profile(eq, r);
            if (!prof) {
                out.violations.push_back("solution at a degree that is not edge-admissible");
                continue;
            }
            int cc = 0, cr = 0;
            for (auto* s : group) {
                cc += s->context->degree();
                cr += s->real_embeddings;
            }
            if (cc > prof->reduced_poly.degree())
                out.violations.push_back("degree " + std::to_string(r) + ": complex count exceeds deg P_r - mult_0");
            if (mode == FieldMode::Real && cr > 2 * (prof->tie.size() - 1))
                out.violations.push_back("degree " + std::to_string(r) + ": real count exceeds 2(|T_r| - 1)");
        }
    }
    return out;
}

std::vector<Rational> scaling_orbit(const AbelEquation& eq, const RationalSolution& sol) {
    const CtxPoly& p = sol.denominator;
    const ContextPtr& ctx = p.ctx;
    // (α^(n3-1) - 1) A3 + (α^(n2-1) - 1) A2 p^(n3-n2) + (α^(n1-1) - 1) A1 p^(n3-n1) = 0
    CtxPoly T3 = ctx_poly_from(ctx, eq.A3());
    CtxPoly T2 = ctx_mul(ctx_poly_from(ctx, eq.A2()), ctx_pow(p, static_cast<unsigned>(eq.n3() - eq.n2())));
    CtxPoly T1 = ctx_mul(ctx_poly_from(ctx, eq.A1()), ctx_pow(p, static_cast<unsigned>(eq.n3() - eq.n1())));
    RatPoly f3 = RatPoly::monomial(Rational(1), eq.n3() - 1) - RatPoly::constant(1);
    RatPoly f2 = RatPoly::monomial(Rational(1), eq.n2() - 1) - RatPoly::constant(1);
    RatPoly f1 = RatPoly::monomial(Rational(1), eq.n1() - 1) - RatPoly::constant(1);
    auto at = [](const CtxPoly& P, std::size_t k, int j) {
        if (k >= P.coeffs.size()) return Rational(0);
        return P.coeffs[k].value().coeff(j);
    };
    std::size_t len = std::max({T3.coeffs.size(), T2.coeffs.size(), T1.coeffs.size()});
    RatPoly g;
    for (std::size_t k = 0; k < len; ++k)
        for (int j = 0; j < ctx->degree(); ++j) {
            RatPoly u = f3.scale(at(T3, k, j)) + f2.scale(at(T2, k, j)) + f1.scale(at(T1, k, j));
            if (u.is_zero()) continue;
            g = g.is_zero() ? u.monic() : gcd(g, u);
        }
    std::vector<Rational> out;
    if (g.is_zero()) throw InternalInconsistency("scaling identity vanishes identically");
    for (const Rational& a : rational_roots(g))
        if (a != 0) out.push_back(a);
    if (static_cast<int>(out.size()) > eq.n3() - 1)
        throw InternalInconsistency("scaling orbit larger than n3 - 1");
    return out;
}

}  // namespace abelrat
