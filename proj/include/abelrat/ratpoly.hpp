#pragma once

#include "abelrat/rational.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace abelrat {

// Degree of the zero polynomial. Never equal to any real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Dense univariate polynomial over Q. Coefficient i multiplies t^i.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, int k);
    static RatPoly variable() { return monomial(Rational(1), 1); }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& lc() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    // Multiplicity of 0 as a root.
    int valuation() const;

    Rational eval(const Rational& x) const;
    RatPoly derivative() const;
    RatPoly scale(const Rational& s) const;
    RatPoly monic() const;
    RatPoly pow(unsigned e) const;
    RatPoly shift(int k) const;                       // t^k * p, k >= 0
    RatPoly drop_low(int k) const;                    // p / t^k, requires valuation >= k
    RatPoly compose_monomial(const Rational& c, int k) const;  // p(c t^k)
    RatPoly compose(const RatPoly& q) const;          // p(q(t))
    RatPoly reversed(int n) const;                    // t^n p(1/t), n >= deg p
    RatPoly truncate(int n) const;                    // terms of degree < n

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    // Lexicographic order on (degree, coefficients from the top). Used for deterministic output.
    friend bool lex_less(const RatPoly& a, const RatPoly& b);

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);   // quotient
RatPoly operator%(const RatPoly& a, const RatPoly& b);   // remainder

// Quotient when b divides a exactly; false otherwise.
bool divides_exactly(const RatPoly& b, const RatPoly& a, RatPoly* quotient = nullptr);

RatPoly gcd(const RatPoly& a, const RatPoly& b);

struct XgcdResult {
    RatPoly g, s, t;  // s a + t b = g, g monic
};
XgcdResult xgcd(const RatPoly& a, const RatPoly& b);

// Subresultant PRS.
Rational resultant(const RatPoly& a, const RatPoly& b);

// Primitive integer multiple with positive leading coefficient.
RatPoly primitive_integer(const RatPoly& a);

struct SquarefreePart {
    RatPoly factor;
    int multiplicity;
};
using SquarefreeDecomposition = std::vector<SquarefreePart>;

SquarefreeDecomposition squarefree_decompose(const RatPoly& a);
RatPoly squarefree_part(const RatPoly& a);
RatPoly power_part(const RatPoly& a, int k);

// Sign variations of a(C) and a(-C).
std::pair<int, int> descartes_bound(const RatPoly& a);

// Newton interpolation through (xs[i], ys[i]) with distinct xs.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Cauchy bound: every complex root z satisfies |z| < bound.
Rational cauchy_bound(const RatPoly& a);

}  // namespace abelrat
