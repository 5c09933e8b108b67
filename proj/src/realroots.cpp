#include "abelrat/realroots.hpp"

#include "abelrat/errors.hpp"

#include <algorithm>

namespace abelrat {

namespace {

RatPoly normalized(const RatPoly& p) {
    return p.scale(Rational(1 / abs_value(p.lc())));
}

int sign_at(const RatPoly& p, const std::optional<Rational>& x, bool negative_infinity) {
    if (x) return sign(p.eval(*x));
    int s = sign(p.lc());
    if (negative_infinity && (p.degree() & 1)) s = -s;
    return s;
}

}  // namespace

SturmChain::SturmChain(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("SturmChain");
    RatPoly f = squarefree_part(a).scale(sign(a.lc()));
    seq_.push_back(f);
    if (f.degree() <= 0) return;
    seq_.push_back(normalized(f.derivative()));
    for (;;) {
        RatPoly r = -(seq_[seq_.size() - 2] % seq_.back());
        if (r.is_zero()) break;
        seq_.push_back(normalized(r));
    }
}

int SturmChain::variations_at(const std::optional<Rational>& x, bool negative_infinity) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sign_at(p, x, negative_infinity);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    return variations_at(lo, true) - variations_at(hi, false);
}

int real_root_count(const RatPoly& a, const std::optional<Rational>& lo,
                    const std::optional<Rational>& hi) {
    if (a.is_zero()) throw ZeroInput("real_root_count");
    if (lo && hi && *lo >= *hi) return 0;
    return SturmChain(a).count(lo, hi);
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("isolate_real_roots");
    if (a.degree() == 0) return {};
    if (gcd(a, a.derivative()).degree() > 0) throw NotSquarefree();
    SturmChain chain(a);
    Rational bound = cauchy_bound(a) + 1;
    struct Pending {
        Rational lo, hi;
        int n;
    };
    std::vector<Pending> work{{Rational(-bound), bound, chain.count(Rational(-bound), bound)}};
    std::vector<RootInterval> out;
    while (!work.empty()) {
        Pending cur = work.back();
        work.pop_back();
        if (cur.n == 0) continue;
        if (cur.n == 1) {
            if (a.eval(cur.hi) == 0)
                out.push_back({cur.hi, cur.hi});
            else
                out.push_back({cur.lo, cur.hi});
            continue;
        }
        // Split at a point that is not a root: 1/2, 1/3, 2/3, 1/4, 3/4, ...
        Rational mid;
        bool found = false;
        for (long den = 2; !found; ++den) {
            for (long num = 1; num < den && !found; ++num) {
                Rational m = cur.lo + (cur.hi - cur.lo) * frac(num, den);
                if (a.eval(m) != 0) {
                    mid = m;
                    found = true;
                }
            }
        }
        int left = chain.count(cur.lo, mid);
        work.push_back({mid, cur.hi, cur.n - left});
        work.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine_root(const RatPoly& a, RootInterval iv, const Rational& eps) {
    if (iv.exact()) return iv;
    int slo = sign(a.eval(iv.lo));
    while (iv.width() >= eps) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = sign(a.eval(mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

std::vector<Rational> rational_roots(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("rational_roots");
    std::vector<Rational> out;
    if (a.degree() <= 0) return out;
    RatPoly f = primitive_integer(squarefree_part(a));
    Rational L = f.lc();
    Rational eps = 1 / (L * L);
    for (auto iv : isolate_real_roots(f)) {
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        iv = refine_root(f, iv, eps);
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        Rational q = simplest_between(iv.lo, iv.hi);
        if (Rational(q.get_den()) <= L && f.eval(q) == 0) out.push_back(q);
    }
    return out;
}

}  // namespace abelrat
