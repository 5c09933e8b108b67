#pragma once

#include "abelrat/diagram.hpp"

#include <array>
#include <string>
#include <variant>

namespace abelrat {

struct TwoSolutionSpec {
    RatPoly p1, p2;
    RatPoly A1;
    std::array<int, 3> exponents{};  // n1, n2, n3
};

struct ThreeSolutionSpec {
    RatPoly p1, p2, p3;
    std::array<int, 3> exponents{};
};

enum class ConstructionErrorKind {
    NonPolynomial,
    DegenerateDenominator,
    SingularSystem,
    ZeroCoefficient,  // some A_i came out as the zero polynomial
    NotDistinct,
    InvalidSpec
};

const char* construction_error_label(ConstructionErrorKind k);

struct ConstructionError {
    ConstructionErrorKind kind;
    std::string message;
};

using ConstructionResult = std::variant<AbelEquation, ConstructionError>;

ConstructionResult from_two_solutions(const TwoSolutionSpec& spec);
ConstructionResult from_three_solutions(const ThreeSolutionSpec& spec);

}  // namespace abelrat
