#include "abelrat/algebraic.hpp"

namespace abelrat {

ContextPtr make_context(const RatPoly& modulus, std::string label) {
    if (modulus.degree() < 1) throw Error("context modulus must have degree at least 1");
    if (gcd(modulus, modulus.derivative()).degree() > 0) throw NotSquarefree();
    return std::make_shared<const AlgebraicContext>(AlgebraicContext{modulus.monic(), std::move(label)});
}

namespace {

[[noreturn]] void split(const ContextPtr& ctx, const RatPoly& g) {
    RatPoly gm = g.monic();
    auto left = std::make_shared<const AlgebraicContext>(AlgebraicContext{gm, ctx->label + ".1"});
    auto right =
        std::make_shared<const AlgebraicContext>(AlgebraicContext{ctx->modulus / gm, ctx->label + ".2"});
    throw SplitEvent(left, right);
}

}  // namespace

ModElement::ModElement(ContextPtr ctx, const RatPoly& value) : ctx_(std::move(ctx)) {
    v_ = value.degree() < ctx_->degree() ? value : value % ctx_->modulus;
}

ModElement::ModElement(ContextPtr ctx, const Rational& value)
    : ctx_(std::move(ctx)), v_(RatPoly::constant(value)) {}

ModElement ModElement::generator(ContextPtr ctx) {
    return ModElement(std::move(ctx), RatPoly::variable());
}

bool ModElement::is_zero() const {
    if (v_.is_zero()) return true;
    if (v_.degree() == 0) return false;
    RatPoly g = gcd(v_, ctx_->modulus);
    if (g.degree() == 0) return false;
    split(ctx_, g);
}

Rational ModElement::as_rational() const {
    if (!is_rational()) throw Error("element is not rational");
    return v_.coeff(0);
}

ModElement ModElement::inverse() const {
    if (v_.is_zero()) throw ZeroInverse();
    if (v_.degree() == 0) return ModElement(ctx_, Rational(1 / v_.coeff(0)));
    XgcdResult r = xgcd(v_, ctx_->modulus);
    if (r.g.degree() > 0) split(ctx_, r.g);
    return ModElement(ctx_, r.s);
}

ModElement ModElement::lift_to(const ContextPtr& child) const {
    if (child == ctx_) return *this;
    return ModElement(child, v_);
}

void ModElement::check_same(const ModElement& o) const {
    if (ctx_ != o.ctx_ && !(ctx_ && o.ctx_ && ctx_->modulus == o.ctx_->modulus)) throw ContextMismatch();
}

ModElement ModElement::operator-() const {
    ModElement r = *this;
    r.v_ = -v_;
    return r;
}

ModElement& ModElement::operator+=(const ModElement& o) {
    check_same(o);
    v_ += o.v_;
    return *this;
}

ModElement& ModElement::operator-=(const ModElement& o) {
    check_same(o);
    v_ -= o.v_;
    return *this;
}

ModElement& ModElement::operator*=(const ModElement& o) {
    check_same(o);
    if (v_.degree() <= 0 || o.v_.degree() <= 0) {
        v_ = v_ * o.v_;
        return *this;
    }
    v_ = (v_ * o.v_) % ctx_->modulus;
    return *this;
}

ModElement& ModElement::operator*=(const Rational& q) {
    v_ = v_.scale(q);
    return *this;
}

ModElement crt_combine(const ModElement& x1, const ModElement& x2, const ContextPtr& parent) {
    const RatPoly& m1 = x1.context()->modulus;
    const RatPoly& m2 = x2.context()->modulus;
    if (m1 * m2 != parent->modulus) throw ContextMismatch();
    XgcdResult r = xgcd(m1, m2);  // s m1 + t m2 = 1
    RatPoly diff = x2.value() - x1.value();
    RatPoly k = (diff * r.s) % m2;
    return ModElement(parent, x1.value() + m1 * k);
}

CtxPoly CtxPoly::lift_to(const ContextPtr& child) const {
    CtxPoly out{child, {}};
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) out.coeffs.push_back(c.lift_to(child));
    return out;
}

CtxPoly ctx_poly_from(const ContextPtr& ctx, const RatPoly& p) {
    CtxPoly out{ctx, {}};
    for (const auto& c : p.coeffs()) out.coeffs.emplace_back(ctx, c);
    return out;
}

CtxPoly ctx_mul(const CtxPoly& a, const CtxPoly& b) {
    CtxPoly out{a.ctx, {}};
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, ModElement(a.ctx, Rational(0)));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_literal_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    ctx_trim(out);
    return out;
}

CtxPoly ctx_add(const CtxPoly& a, const CtxPoly& b) {
    CtxPoly out = a.coeffs.size() >= b.coeffs.size() ? a : b;
    const CtxPoly& other = a.coeffs.size() >= b.coeffs.size() ? b : a;
    for (std::size_t i = 0; i < other.coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    ctx_trim(out);
    return out;
}

CtxPoly ctx_pow(const CtxPoly& a, unsigned e) {
    CtxPoly result{a.ctx, {ModElement(a.ctx, Rational(1))}};
    CtxPoly base = a;
    while (e) {
        if (e & 1u) result = ctx_mul(result, base);
        e >>= 1u;
        if (e) base = ctx_mul(base, base);
    }
    return result;
}

CtxPoly ctx_derivative(const CtxPoly& a) {
    CtxPoly out{a.ctx, {}};
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        out.coeffs.push_back(a.coeffs[i] * Rational(static_cast<long>(i)));
    ctx_trim(out);
    return out;
}

void ctx_trim(CtxPoly& a) {
    while (!a.coeffs.empty() && a.coeffs.back().is_literal_zero()) a.coeffs.pop_back();
}

}  // namespace abelrat
