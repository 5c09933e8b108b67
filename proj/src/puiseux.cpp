#include "abelrat/puiseux.hpp"

#include "abelrat/errors.hpp"

namespace abelrat {

std::vector<LeadingRoot> leading_roots(const EdgeProfile& profile, FieldMode mode) {
    std::vector<LeadingRoot> out;
    if (profile.reduced_poly.degree() <= 0) return out;
    int counter = 0;
    auto add = [&](const RatPoly& modulus, int mult) {
        std::string label = "r" + std::to_string(profile.r) + "." + std::to_string(counter++);
        LeadingRoot lr;
        lr.context = make_context(modulus, label);
        lr.element = ModElement::generator(lr.context);
        lr.multiplicity = mult;
        lr.real_intervals = isolate_real_roots(lr.context->modulus);
        lr.real_embeddings = static_cast<int>(lr.real_intervals.size());
        lr.flagged_no_real = mode == FieldMode::Real && lr.real_embeddings == 0;
        out.push_back(std::move(lr));
    };
    for (const auto& part : squarefree_decompose(profile.reduced_poly)) {
        RatPoly rest = part.factor;
        for (const Rational& q : rational_roots(part.factor)) {
            RatPoly lin{Rational(-q), Rational(1)};
            add(lin, part.multiplicity);
            rest = rest / lin;
        }
        if (rest.degree() >= 1) add(rest, part.multiplicity);
    }
    return out;
}

namespace {

struct SeriesState {
    std::vector<Rational> rev;                      // reversed coefficients of A_i
    int n = 0;
    int phi = 0;
    std::vector<std::vector<ModElement>> powers;    // powers[e][k] = coeff k of X^(e+1)
};

LaurentPrefix run_series(const AbelEquation& eq, const EdgeProfile& profile, const ContextPtr& ctx, int M) {
    const int r = profile.r;
    const int O = profile.Or;
    const bool has_d = profile.tie.has(Term::Deriv);
    const ModElement zero(ctx, Rational(0));
    const ModElement C = ModElement::generator(ctx);

    LaurentPrefix pre;
    pre.r = r;
    pre.context = ctx;
    std::vector<ModElement>& c = pre.coefficients;
    c.push_back(C);

    // Leading balance: P_r(C) = 0 in the context.
    ModElement PC = zero;
    ModElement dP = zero;
    {
        RatPoly dpoly = profile.edge_poly.derivative();
        ModElement acc = zero;
        for (int k = profile.edge_poly.degree(); k >= 0; --k) acc = acc * C + ModElement(ctx, profile.edge_poly.coeff(k));
        PC = acc;
        acc = zero;
        for (int k = dpoly.degree(); k >= 0; --k) acc = acc * C + ModElement(ctx, dpoly.coeff(k));
        dP = acc;
    }
    if (!PC.is_literal_zero()) throw InternalInconsistency("leading coefficient is not a root of the edge polynomial");

    std::vector<SeriesState> terms;
    for (Term t : kCoefficientTerms) {
        SeriesState s;
        const RatPoly& A = eq.A(t);
        for (int j = A.degree(); j >= 0; --j) s.rev.push_back(A.coeff(j));
        s.n = eq.n(t);
        s.phi = phi(eq, t, r);
        s.powers.resize(static_cast<std::size_t>(s.n));
        ModElement pw = C;
        for (int e = 0; e < s.n; ++e) {
            s.powers[static_cast<std::size_t>(e)].push_back(pw);
            pw = pw * C;
        }
        terms.push_back(std::move(s));
    }

    auto fill_index = [&](SeriesState& s, int N) {
        // coefficient N of X^(e+1) from c_0..c_N and lower powers
        for (int e = 0; e < s.n; ++e) {
            auto& row = s.powers[static_cast<std::size_t>(e)];
            ModElement v = zero;
            if (e == 0) {
                v = c[static_cast<std::size_t>(N)];
            } else {
                const auto& prev = s.powers[static_cast<std::size_t>(e - 1)];
                for (int j = 0; j <= N; ++j) {
                    const ModElement& cj = c[static_cast<std::size_t>(j)];
                    if (cj.is_literal_zero()) continue;
                    v += cj * prev[static_cast<std::size_t>(N - j)];
                }
            }
            if (static_cast<int>(row.size()) == N)
                row.push_back(v);
            else
                row[static_cast<std::size_t>(N)] = v;
        }
    };

    for (int N = 1; N <= M; ++N) {
        c.push_back(zero);
        for (auto& s : terms) fill_index(s, N);
        const int k = O + N;
        ModElement H = zero;
        const int m = k - r - 1;
        if (m >= 0 && m < N) H -= c[static_cast<std::size_t>(m)] * Rational(r + m);
        for (const auto& s : terms) {
            const int idx = k - s.phi;
            if (idx < 0) continue;
            const auto& pw = s.powers[static_cast<std::size_t>(s.n - 1)];
            const int top = std::min<int>(idx, static_cast<int>(s.rev.size()) - 1);
            for (int j = 0; j <= top; ++j) {
                if (s.rev[static_cast<std::size_t>(j)] == 0) continue;
                H -= pw[static_cast<std::size_t>(idx - j)] * s.rev[static_cast<std::size_t>(j)];
            }
        }
        ModElement d = has_d ? dP + ModElement(ctx, Rational(N)) : dP;
        if (d.is_zero()) {
            c.pop_back();
            pre.resonant_at = N;
            pre.resonance_solvable = H.is_zero();
            for (auto& s : terms)
                for (auto& row : s.powers) row.resize(static_cast<std::size_t>(N));
            return pre;
        }
        c[static_cast<std::size_t>(N)] = H * d.inverse();
        for (auto& s : terms) fill_index(s, N);
    }
    return pre;
}

}  // namespace

std::vector<LaurentPrefix> extend_series_in(const AbelEquation& eq, const EdgeProfile& profile,
                                            const ContextPtr& ctx, int M) {
    if (M < 0) throw Error("extend_series: negative order");
    std::vector<LaurentPrefix> out;
    for (auto& [branch, prefix] : run_split(ctx, [&](const ContextPtr& c) { return run_series(eq, profile, c, M); }))
        out.push_back(std::move(prefix));
    return out;
}

std::vector<LaurentPrefix> extend_series(const AbelEquation& eq, const EdgeProfile& profile,
                                         const LeadingRoot& root, int M) {
    return extend_series_in(eq, profile, root.context, M);
}

std::variant<CtxPoly, NotRational> reciprocal_candidate(const LaurentPrefix& prefix, bool allow_short) {
    const int r = prefix.r;
    const int K = static_cast<int>(prefix.coefficients.size()) - 1;
    if (K < (allow_short ? r : 2 * r + 1))
        throw InsufficientPrefix("prefix of order " + std::to_string(K) + " is too short for degree " +
                                 std::to_string(r));
    const auto& c = prefix.coefficients;
    std::vector<ModElement> y;
    y.push_back(c[0].inverse());
    for (int k = 1; k <= K; ++k) {
        ModElement s(prefix.context, Rational(0));
        for (int j = 1; j <= k; ++j) {
            if (c[static_cast<std::size_t>(j)].is_literal_zero()) continue;
            s += c[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k - j)];
        }
        y.push_back(-(y[0] * s));
    }
    for (int k = r + 1; k <= K; ++k)
        if (!y[static_cast<std::size_t>(k)].is_zero()) return NotRational{};
    CtxPoly p{prefix.context, {}};
    for (int i = 0; i <= r; ++i) p.coeffs.push_back(y[static_cast<std::size_t>(r - i)]);
    return p;
}

}  // namespace abelrat
