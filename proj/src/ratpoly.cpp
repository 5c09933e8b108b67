#include "abelrat/ratpoly.hpp"

#include "abelrat/errors.hpp"

#include <algorithm>

namespace abelrat {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int k) {
    if (c == 0) return RatPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return RatPoly(std::move(v));
}

const Rational& RatPoly::lc() const {
    if (c_.empty()) throw ZeroInput("lc");
    return c_.back();
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

int RatPoly::valuation() const {
    if (c_.empty()) throw ZeroInput("valuation");
    int k = 0;
    while (c_[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(v));
}

RatPoly RatPoly::scale(const Rational& s) const {
    if (s == 0) return RatPoly();
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return RatPoly();
    return scale(Rational(1 / lc()));
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly result = constant(Rational(1));
    RatPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

RatPoly RatPoly::shift(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return RatPoly(std::move(v));
}

RatPoly RatPoly::drop_low(int k) const {
    if (c_.empty() || k == 0) return *this;
    if (valuation() < k) throw InternalInconsistency("drop_low: valuation too small");
    return RatPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

RatPoly RatPoly::compose_monomial(const Rational& c, int k) const {
    if (c_.empty()) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(degree() * k) + 1);
    Rational cp = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[i * static_cast<std::size_t>(k)] = c_[i] * cp;
        cp *= c;
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::compose(const RatPoly& q) const {
    RatPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
}

RatPoly RatPoly::reversed(int n) const {
    if (c_.empty()) return *this;
    if (n < degree()) throw InternalInconsistency("reversed: n below degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(n) - i] = c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::truncate(int n) const {
    if (n <= 0) return RatPoly();
    if (static_cast<std::size_t>(n) >= c_.size()) return *this;
    return RatPoly(std::vector<Rational>(c_.begin(), c_.begin() + n));
}

RatPoly RatPoly::operator-() const { return scale(Rational(-1)); }

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return RatPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            v[i + j] += tmp;
        }
    }
    return RatPoly(std::move(v));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    *this = *this * o;
    return *this;
}

bool lex_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const Rational& x = a.c_[static_cast<std::size_t>(i)];
        const Rational& y = b.c_[static_cast<std::size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

std::string RatPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs_value(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (i == 0 || !unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    if (a.degree() < b.degree()) return {RatPoly(), a};
    std::vector<Rational> r(a.coeffs());
    const auto& bc = b.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
    Rational inv_lc = 1 / b.lc();
    Rational tmp;
    for (int k = dq; k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k + db)] * inv_lc;
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) {
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bc[static_cast<std::size_t>(j)].get_mpq_t());
            r[static_cast<std::size_t>(k + j)] -= tmp;
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divrem(a, b).first; }
RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divrem(a, b).second; }

bool divides_exactly(const RatPoly& b, const RatPoly& a, RatPoly* quotient) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = std::move(q);
    return true;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroInput("gcd");
    RatPoly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        RatPoly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

XgcdResult xgcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroInput("xgcd");
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = 1 / r0.lc();
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

Rational resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("resultant");
    RatPoly A = a, B = b;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
    }
    if (B.degree() == 0) return Rational(s * pow_int(B.lc(), A.degree()));
    Rational g = 1, h = 1;
    for (;;) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        RatPoly R = (A % B).scale(pow_int(B.lc(), delta + 1));
        if (R.is_zero()) return Rational(0);
        A = std::move(B);
        B = R.scale(Rational(1 / (g * pow_int(h, delta))));
        g = A.lc();
        h = pow_int(h, 1 - delta) * pow_int(g, delta);
        if (B.degree() == 0) break;
    }
    h = pow_int(h, 1 - A.degree()) * pow_int(B.lc(), A.degree());
    return Rational(s * h);
}

RatPoly primitive_integer(const RatPoly& a) {
    if (a.is_zero()) return a;
    Integer l = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& c : a.coeffs()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (a.lc() < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Integer(v / g));
    return RatPoly(std::move(out));
}

SquarefreeDecomposition squarefree_decompose(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("squarefree_decompose");
    SquarefreeDecomposition out;
    if (a.degree() == 0) return out;
    RatPoly f = a.monic();
    RatPoly fp = f.derivative();
    RatPoly b = gcd(f, fp);
    RatPoly c = f / b;
    RatPoly d = fp / b - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        RatPoly y = gcd(c, d);
        if (y.degree() > 0) out.push_back({y, i});
        c = c / y;
        d = d / y - c.derivative();
        ++i;
    }
    return out;
}

RatPoly squarefree_part(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("squarefree_part");
    RatPoly out = RatPoly::constant(1);
    for (const auto& p : squarefree_decompose(a)) out *= p.factor;
    return out;
}

RatPoly power_part(const RatPoly& a, int k) {
    if (a.is_zero()) throw ZeroInput("power_part");
    if (k < 1) throw Error("power_part: k must be positive");
    RatPoly out = RatPoly::constant(1);
    for (const auto& p : squarefree_decompose(a)) {
        int e = p.multiplicity / k;
        if (e > 0) out *= p.factor.pow(static_cast<unsigned>(e));
    }
    return out;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

std::pair<int, int> descartes_bound(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("descartes_bound");
    std::vector<int> pos, neg;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = sign(a.coeffs()[i]);
        pos.push_back(s);
        neg.push_back((i & 1) ? -s : s);
    }
    return {sign_variations(pos), sign_variations(neg)};
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    std::size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    RatPoly acc;
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * RatPoly{Rational(-xs[k]), Rational(1)} + RatPoly::constant(dd[k]);
    }
    return acc;
}

Rational cauchy_bound(const RatPoly& a) {
    if (a.is_zero()) throw ZeroInput("cauchy_bound");
    Rational m = 0;
    for (int i = 0; i < a.degree(); ++i) {
        Rational q = abs_value(Rational(a.coeffs()[static_cast<std::size_t>(i)] / a.lc()));
        if (q > m) m = q;
    }
    return Rational(m + 1);
}

}  // namespace abelrat
