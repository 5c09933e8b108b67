#pragma once

#include "abelrat/diagram.hpp"

#include <vector>

namespace abelrat::testing {

// Determinant of the Sylvester matrix by Gaussian elimination over Q.
Rational sylvester_resultant(const RatPoly& a, const RatPoly& b);

// Determinant of a dense matrix over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

// Horner evaluation of a coefficient vector, kept apart from RatPoly::eval.
Rational horner(const std::vector<Rational>& cs, const Rational& x);
// Value of the derivative at x from the coefficient vector.
Rational horner_derivative(const std::vector<Rational>& cs, const Rational& x);

// Edge-admissible degrees by a direct scan of r = 1 .. floor(r0) using the order functions.
std::vector<int> brute_admissible_degrees(const AbelEquation& eq);

// First count coefficients of 1/p as a series in u = 1/t, starting at u^deg p.
std::vector<Rational> reciprocal_laurent(const RatPoly& p, int count);

// Residual of the equation for x = 1/p evaluated at t, by pointwise arithmetic.
Rational pointwise_residual(const AbelEquation& eq, const RatPoly& p, const Rational& t);

// Sign variations of the coefficient sequence.
int sign_variations(const std::vector<Rational>& cs);

// x + y sqrt(d)
struct QuadraticSurd {
    Rational x, y;
    Integer d;
    QuadraticSurd operator+(const QuadraticSurd& o) const { return {x + o.x, y + o.y, d}; }
    QuadraticSurd operator*(const QuadraticSurd& o) const { return {x * o.x + y * o.y * d, x * o.y + y * o.x, d}; }
    bool operator==(const QuadraticSurd& o) const { return x == o.x && y == o.y && d == o.d; }
};
QuadraticSurd eval_surd(const RatPoly& p, const QuadraticSurd& at);

}  // namespace abelrat::testing
