#pragma once

#include "abelrat/errors.hpp"
#include "abelrat/ratpoly.hpp"

#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace abelrat {

// Q[C]/(modulus) with a monic squarefree modulus.
struct AlgebraicContext {
    RatPoly modulus;
    std::string label;

    int degree() const { return modulus.degree(); }
};

using ContextPtr = std::shared_ptr<const AlgebraicContext>;

// Validates squarefreeness and makes the modulus monic.
ContextPtr make_context(const RatPoly& modulus, std::string label);

// Raised when a zero divisor is met. left * right = original modulus.
class SplitEvent : public std::exception {
public:
    SplitEvent(ContextPtr left, ContextPtr right) : left_(std::move(left)), right_(std::move(right)) {}
    const ContextPtr& left() const { return left_; }
    const ContextPtr& right() const { return right_; }
    const char* what() const noexcept override { return "algebraic context split"; }

private:
    ContextPtr left_, right_;
};

class ModElement {
public:
    ModElement() = default;
    ModElement(ContextPtr ctx, const RatPoly& value);
    ModElement(ContextPtr ctx, const Rational& value);

    static ModElement generator(ContextPtr ctx);  // the class of C

    const ContextPtr& context() const { return ctx_; }
    const RatPoly& value() const { return v_; }

    // Exact residue test. Throws SplitEvent when the value vanishes on a proper factor.
    bool is_zero() const;
    // Literal zero residue (no splitting).
    bool is_literal_zero() const { return v_.is_zero(); }
    bool is_rational() const { return v_.degree() <= 0; }
    Rational as_rational() const;

    // Throws ZeroInverse or SplitEvent.
    ModElement inverse() const;

    // Reduction into a context whose modulus divides this one's.
    ModElement lift_to(const ContextPtr& child) const;

    ModElement operator-() const;
    ModElement& operator+=(const ModElement& o);
    ModElement& operator-=(const ModElement& o);
    ModElement& operator*=(const ModElement& o);
    ModElement& operator*=(const Rational& q);

    friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
    friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
    friend ModElement operator*(ModElement a, const ModElement& b) { return a *= b; }
    friend ModElement operator*(ModElement a, const Rational& q) { return a *= q; }

private:
    void check_same(const ModElement& o) const;
    ContextPtr ctx_;
    RatPoly v_;
};

// The unique element of the parent context reducing to x1 and x2 in the two coprime children.
ModElement crt_combine(const ModElement& x1, const ModElement& x2, const ContextPtr& parent);

// Polynomial in t with coefficients in one context; index = power of t.
struct CtxPoly {
    ContextPtr ctx;
    std::vector<ModElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    CtxPoly lift_to(const ContextPtr& child) const;
};

CtxPoly ctx_poly_from(const ContextPtr& ctx, const RatPoly& p);
CtxPoly ctx_mul(const CtxPoly& a, const CtxPoly& b);
CtxPoly ctx_add(const CtxPoly& a, const CtxPoly& b);
CtxPoly ctx_pow(const CtxPoly& a, unsigned e);
CtxPoly ctx_derivative(const CtxPoly& a);
// Drops literally zero top coefficients only.
void ctx_trim(CtxPoly& a);

// Runs f(ctx); on SplitEvent reruns f on both factor contexts.
template <typename F>
auto run_split(const ContextPtr& ctx, F&& f) -> std::vector<std::pair<ContextPtr, decltype(f(ctx))>> {
    std::vector<std::pair<ContextPtr, decltype(f(ctx))>> out;
    std::vector<ContextPtr> work{ctx};
    while (!work.empty()) {
        ContextPtr cur = work.back();
        work.pop_back();
        try {
            out.emplace_back(cur, f(cur));
        } catch (const SplitEvent& ev) {
            if (ev.left()->modulus * ev.right()->modulus != cur->modulus)
                throw InternalInconsistency("split event from a foreign context");
            work.push_back(ev.right());
            work.push_back(ev.left());
        }
    }
    return out;
}

}  // namespace abelrat
