#pragma once

#include "abelrat/ratpoly.hpp"

#include <optional>
#include <vector>

namespace abelrat {

class SturmChain {
public:
    // The chain of the squarefree part of a.
    explicit SturmChain(const RatPoly& a);

    const std::vector<RatPoly>& sequence() const { return seq_; }

    // Sign variations at x; nullopt stands for -inf (at_neg) or +inf.
    int variations_at(const std::optional<Rational>& x, bool negative_infinity = false) const;

    // Distinct real roots in the half-open interval (lo, hi]; nullopt ends are infinite.
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

private:
    std::vector<RatPoly> seq_;
};

// Distinct real roots of a in (lo, hi].
int real_root_count(const RatPoly& a, const std::optional<Rational>& lo = std::nullopt,
                    const std::optional<Rational>& hi = std::nullopt);

// A root lies in the open interval (lo, hi), or equals lo when lo == hi.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    Rational width() const { return Rational(hi - lo); }
};

// Sorted, disjoint isolating intervals. Throws NotSquarefree.
std::vector<RootInterval> isolate_real_roots(const RatPoly& a);

// Shrinks an isolating interval of squarefree a to width below eps (or exact).
RootInterval refine_root(const RatPoly& a, RootInterval iv, const Rational& eps);

// All distinct rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const RatPoly& a);

}  // namespace abelrat
