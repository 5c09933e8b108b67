#include "abelrat/ndcheck.hpp"

#include "abelrat/errors.hpp"
#include "abelrat/realroots.hpp"

#include <algorithm>
#include <numeric>

namespace abelrat {

const char* field_mode_label(FieldMode m) { return m == FieldMode::Real ? "real" : "complex"; }

Nd1Result check_nd1(const EdgeProfile& profile) {
    const RatPoly& p = profile.reduced_poly;
    if (p.degree() <= 0) return {};
    return {resultant(p, p.derivative()) != 0};
}

Integer nd2_bound(const EdgeProfile& profile, const AbelEquation& eq) {
    const RatPoly& p = profile.reduced_poly;
    if (p.degree() <= 0) return 0;
    Rational R = cauchy_bound(p);
    Rational s = profile.tie.has(Term::Deriv) ? Rational(profile.r) : Rational(0);
    for (Term t : kCoefficientTerms)
        if (profile.tie.has(t)) s += eq.n(t) * abs_value(eq.alpha(t)) * pow_int(R, eq.n(t) - 1);
    return ceil_of(s);
}

RatPoly derivative_value_polynomial(const EdgeProfile& profile) {
    const RatPoly& p = profile.reduced_poly;
    const int d = p.degree();
    if (d <= 0) return RatPoly::constant(1);
    RatPoly w = profile.edge_poly.derivative() % p;
    if (w.degree() <= 0) {
        // All values coincide: (z - k)^d.
        return RatPoly{Rational(-w.coeff(0)), Rational(1)}.pow(static_cast<unsigned>(d));
    }
    std::vector<Rational> xs, ys;
    for (int z = 0; z <= d; ++z) {
        xs.emplace_back(z);
        ys.push_back(resultant(p, RatPoly::constant(Rational(z)) - w));
    }
    return interpolate(xs, ys);
}

Nd2Result check_nd2(const EdgeProfile& profile, const AbelEquation& eq, FieldMode mode) {
    Nd2Result res;
    if (!profile.tie.has(Term::Deriv) || profile.reduced_poly.degree() <= 0) return res;
    res.bound = nd2_bound(profile, eq);
    RatPoly S = derivative_value_polynomial(profile);
    RatPoly dP = profile.edge_poly.derivative();
    for (const Rational& v : rational_roots(S)) {
        if (!is_integer(v) || v >= 0) continue;
        Integer m = -v.get_num();
        if (m > res.bound) throw InternalInconsistency("derivative value beyond the derived cutoff");
        if (mode == FieldMode::Real) {
            RatPoly common = gcd(profile.reduced_poly, dP + RatPoly::constant(Rational(m)));
            if (common.degree() < 1 || real_root_count(common) == 0) continue;
        }
        res.all_witnesses.push_back(static_cast<int>(m.get_si()));
    }
    std::sort(res.all_witnesses.begin(), res.all_witnesses.end());
    if (!res.all_witnesses.empty()) {
        res.pass = false;
        res.witness = res.all_witnesses.front();
    }
    return res;
}

RatPoly separation_polynomial(const EdgeProfile& profile) {
    const RatPoly& p = profile.reduced_poly;
    const int d = p.degree();
    if (d <= 0) return RatPoly::constant(1);
    std::vector<Rational> xs, ys;
    for (int y = 0; y <= d * d; ++y) {
        std::vector<Rational> q(static_cast<std::size_t>(d) + 1);
        Rational Y(y);
        for (int k = 0; k <= d; ++k) q[static_cast<std::size_t>(k)] = p.coeff(k) * pow_int(Y, d - k);
        xs.push_back(Y);
        ys.push_back(resultant(p, RatPoly(std::move(q))));
    }
    return interpolate(xs, ys);
}

namespace {

std::array<int, 3> unity_orders(const AbelEquation& eq) {
    return {eq.n3() - eq.n2(), eq.n3() - eq.n1(), eq.n3() - 1};
}

RatPoly unity_quotient(int k) {
    return RatPoly(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
}

}  // namespace

Nd3Result check_nd3(const EdgeProfile& profile, const AbelEquation& eq, FieldMode mode) {
    Nd3Result res;
    if (profile.reduced_poly.degree() <= 1) return res;
    auto orders = unity_orders(eq);
    if (mode == FieldMode::Real) {
        bool any_even = std::any_of(orders.begin(), orders.end(), [](int m) { return m % 2 == 0; });
        if (!any_even) return res;
        // R(-1) = Res_C(P(C), P(-C)) up to sign.
        const RatPoly& p = profile.reduced_poly;
        if (resultant(p, p.compose_monomial(Rational(-1), 1)) == 0) {
            res.pass = false;
            res.witness_order = 2;
        }
        return res;
    }
    RatPoly R = separation_polynomial(profile);
    for (int m : orders) {
        if (m < 2) continue;
        for (int k = 2; k <= m; ++k) {
            if (m % k != 0) continue;
            if (gcd(R, unity_quotient(k)).degree() > 0) {
                if (!res.witness_order || k < *res.witness_order) res.witness_order = k;
                break;
            }
        }
    }
    res.pass = !res.witness_order.has_value();
    return res;
}

std::optional<std::string> table2_exclusion(TieSet tie, int n1, int n2, int n3, FieldMode mode) {
    using std::gcd;
    const bool h3 = tie.has(Term::A3), h2 = tie.has(Term::A2), h1 = tie.has(Term::A1), hd = tie.has(Term::Deriv);
    const int ms[3] = {n3 - n2, n3 - n1, n3 - 1};
    const bool any_even = ms[0] % 2 == 0 || ms[1] % 2 == 0 || ms[2] % 2 == 0;
    auto odd = [](int v) { return v % 2 != 0; };
    auto any_m = [&](auto pred) { return pred(ms[0]) || pred(ms[1]) || pred(ms[2]); };
    const bool complex = mode == FieldMode::Complex;
    std::optional<std::string> none;

    if (h3 && h2 && h1 && hd) {
        if (complex) return gcd(gcd(n3 - 1, n2 - 1), n1 - 1) > 1 ? std::optional<std::string>("gcd(n3-1, n2-1, n1-1) > 1") : none;
        return odd(n1) && odd(n2) && odd(n3) ? std::optional<std::string>("n1, n2, n3 all odd") : none;
    }
    if (h3 && h2 && h1) {
        if (complex) return gcd(n3 - n1, n2 - n1) > 1 ? std::optional<std::string>("gcd(n3-n1, n2-n1) > 1") : none;
        return (n3 - n1) % 2 == 0 && (n2 - n1) % 2 == 0 ? std::optional<std::string>("n3-n1 and n2-n1 both even") : none;
    }
    if (h3 && h2 && hd) {
        if (complex) return gcd(n3 - 1, n2 - 1) > 1 ? std::optional<std::string>("gcd(n3-1, n2-1) > 1") : none;
        return odd(n3) && odd(n2) ? std::optional<std::string>("n3 and n2 odd") : none;
    }
    if (h3 && h1 && hd) {
        if (complex) return gcd(n3 - 1, n1 - 1) > 1 ? std::optional<std::string>("gcd(n3-1, n1-1) > 1") : none;
        return odd(n3) && odd(n1) ? std::optional<std::string>("n3 and n1 odd") : none;
    }
    if (h2 && h1 && hd) {
        if (complex)
            return any_m([&](int m) { return gcd(gcd(m, n2 - 1), n1 - 1) > 1; })
                       ? std::optional<std::string>("gcd(m, n2-1, n1-1) > 1 for some m in {n3-n2, n3-n1, n3-1}")
                       : none;
        return odd(n2) && odd(n1) && any_even
                   ? std::optional<std::string>("n2 and n1 odd with an even m in {n3-n2, n3-n1, n3-1}")
                   : none;
    }
    if (h3 && h2) {
        if (complex) return n3 - n2 > 1 ? std::optional<std::string>("n3-n2 > 1") : none;
        return (n3 - n2) % 2 == 0 ? std::optional<std::string>("n3-n2 even") : none;
    }
    if (h3 && h1) {
        if (complex) return n3 - n1 > 1 ? std::optional<std::string>("n3-n1 > 1") : none;
        return (n3 - n1) % 2 == 0 ? std::optional<std::string>("n3-n1 even") : none;
    }
    if (h2 && h1) {
        if (complex)
            return any_m([&](int m) { return gcd(n2 - n1, m) > 1; })
                       ? std::optional<std::string>("gcd(n2-n1, m) > 1 for some m in {n3-n2, n3-n1, n3-1}")
                       : none;
        return (n2 - n1) % 2 == 0 && any_even
                   ? std::optional<std::string>("n2-n1 even with an even m in {n3-n2, n3-n1, n3-1}")
                   : none;
    }
    if (h3) {
        if (complex) return std::optional<std::string>("always");
        return odd(n3) ? std::optional<std::string>("n3 odd") : none;
    }
    if (h2) {
        if (complex)
            return any_m([&](int m) { return gcd(n2 - 1, m) > 1; })
                       ? std::optional<std::string>("gcd(n2-1, m) > 1 for some m in {n3-n2, n3-n1, n3-1}")
                       : none;
        return odd(n2) && any_even ? std::optional<std::string>("n2 odd with an even m in {n3-n2, n3-n1, n3-1}")
                                   : none;
    }
    if (complex)
        return any_m([&](int m) { return gcd(n1 - 1, m) > 1; })
                   ? std::optional<std::string>("gcd(n1-1, m) > 1 for some m in {n3-n2, n3-n1, n3-1}")
                   : none;
    return odd(n1) && any_even ? std::optional<std::string>("n1 odd with an even m in {n3-n2, n3-n1, n3-1}")
                               : none;
}

NDVerdict check_nd(const AbelEquation& eq, FieldMode mode) {
    NDVerdict v;
    v.mode = mode;
    for (const EdgeProfile& p : admissible_profiles(eq)) {
        NdDegreeRecord rec;
        rec.r = p.r;
        rec.tie = p.tie;
        rec.nd1 = check_nd1(p);
        rec.nd2 = check_nd2(p, eq, mode);
        rec.nd3 = check_nd3(p, eq, mode);
        rec.table2_exclusion = table2_exclusion(p.tie, eq.n1(), eq.n2(), eq.n3(), mode);
        if (!rec.holds()) v.holds = false;
        v.per_degree.emplace(p.r, std::move(rec));
    }
    return v;
}

}  // namespace abelrat
