#include "abelrat/construct.hpp"

#include "abelrat/errors.hpp"
#include "abelrat/solver.hpp"

namespace abelrat {

const char* construction_error_label(ConstructionErrorKind k) {
    switch (k) {
        case ConstructionErrorKind::NonPolynomial: return "NonPolynomial";
        case ConstructionErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ConstructionErrorKind::SingularSystem: return "SingularSystem";
        case ConstructionErrorKind::ZeroCoefficient: return "ZeroCoefficient";
        case ConstructionErrorKind::NotDistinct: return "NotDistinct";
        case ConstructionErrorKind::InvalidSpec: return "InvalidSpec";
    }
    return "?";
}

namespace {

ConstructionError err(ConstructionErrorKind k, std::string msg) { return {k, std::move(msg)}; }

std::optional<ConstructionError> check_exponents(const std::array<int, 3>& n) {
    if (!(1 < n[0] && n[0] < n[1] && n[1] < n[2]))
        return err(ConstructionErrorKind::InvalidSpec, "exponents must satisfy 1 < n1 < n2 < n3");
    return std::nullopt;
}

std::optional<ConstructionError> check_solution(const RatPoly& p, const char* name) {
    if (p.degree() < 1)
        return err(ConstructionErrorKind::InvalidSpec, std::string(name) + " must be a nonconstant polynomial");
    return std::nullopt;
}

// p^(n3-2) p'
RatPoly derivative_term(const RatPoly& p, int n3) { return p.pow(static_cast<unsigned>(n3 - 2)) * p.derivative(); }

RatPoly det3(const std::array<std::array<RatPoly, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ConstructionResult finish(int n1, int n2, int n3, const RatPoly& A1, const RatPoly& A2, const RatPoly& A3,
                          std::initializer_list<const RatPoly*> prescribed) {
    if (A1.is_zero() || A2.is_zero() || A3.is_zero())
        return err(ConstructionErrorKind::ZeroCoefficient, "a constructed coefficient vanishes identically");
    AbelEquation eq(n1, n2, n3, A1, A2, A3);
    for (const RatPoly* p : prescribed)
        if (!verify_solution(eq, *p))
            throw InternalInconsistency("constructed equation does not admit a prescribed solution");
    return eq;
}

}  // namespace

ConstructionResult from_two_solutions(const TwoSolutionSpec& spec) {
    const auto& [n1, n2, n3] = spec.exponents;
    if (auto e = check_exponents(spec.exponents)) return *e;
    if (auto e = check_solution(spec.p1, "p1")) return *e;
    if (auto e = check_solution(spec.p2, "p2")) return *e;
    if (spec.A1.is_zero()) return err(ConstructionErrorKind::InvalidSpec, "A1 must be nonzero");
    if (spec.p1 == spec.p2) return err(ConstructionErrorKind::NotDistinct, "distinct solutions required");

    const unsigned k2 = static_cast<unsigned>(n3 - n2), k1 = static_cast<unsigned>(n3 - n1);
    const RatPoly u1 = spec.p1.pow(k2), u2 = spec.p2.pow(k2);
    const RatPoly D = u1 - u2;
    if (D.is_zero())
        return err(ConstructionErrorKind::DegenerateDenominator, "p1^(n3-n2) and p2^(n3-n2) coincide");

    const RatPoly Q1 = derivative_term(spec.p1, n3) + spec.A1 * spec.p1.pow(k1);
    const RatPoly Q2 = derivative_term(spec.p2, n3) + spec.A1 * spec.p2.pow(k1);

    // A2 = -[(p1^(n3-1) - p2^(n3-1))' / (n3-1) + A1 (p1^(n3-n1) - p2^(n3-n1))] / D
    const RatPoly N2 = (spec.p1.pow(static_cast<unsigned>(n3 - 1)) - spec.p2.pow(static_cast<unsigned>(n3 - 1)))
                           .derivative()
                           .scale(frac(1, n3 - 1)) +
                       spec.A1 * (spec.p1.pow(k1) - spec.p2.pow(k1));
    RatPoly A2;
    if (!divides_exactly(D, N2, &A2))
        return err(ConstructionErrorKind::NonPolynomial, "A2 is not a polynomial for this choice of A1");
    A2 = -A2;

    // A3 = (p2^(n3-n2) Q1 - p1^(n3-n2) Q2) / D
    RatPoly A3;
    if (!divides_exactly(D, u2 * Q1 - u1 * Q2, &A3))
        return err(ConstructionErrorKind::NonPolynomial, "A3 is not a polynomial for this choice of A1");
    if (A3 != -(Q1 + A2 * u1))
        throw InternalInconsistency("two expressions for A3 disagree");

    return finish(n1, n2, n3, spec.A1, A2, A3, {&spec.p1, &spec.p2});
}

ConstructionResult from_three_solutions(const ThreeSolutionSpec& spec) {
    const auto& [n1, n2, n3] = spec.exponents;
    if (auto e = check_exponents(spec.exponents)) return *e;
    const std::array<const RatPoly*, 3> ps{&spec.p1, &spec.p2, &spec.p3};
    const char* names[3] = {"p1", "p2", "p3"};
    for (int j = 0; j < 3; ++j)
        if (auto e = check_solution(*ps[j], names[j])) return *e;

    const unsigned k2 = static_cast<unsigned>(n3 - n2), k1 = static_cast<unsigned>(n3 - n1);
    std::array<RatPoly, 3> u, v, w;
    for (int j = 0; j < 3; ++j) {
        u[j] = ps[j]->pow(k2);
        v[j] = ps[j]->pow(k1);
        w[j] = -derivative_term(*ps[j], n3);
    }
    const RatPoly one = RatPoly::constant(1);
    const RatPoly delta = det3({{{one, u[0], v[0]}, {one, u[1], v[1]}, {one, u[2], v[2]}}});
    if (delta.is_zero()) return err(ConstructionErrorKind::SingularSystem, "the 3x3 system is singular");

    const RatPoly N3 = det3({{{w[0], u[0], v[0]}, {w[1], u[1], v[1]}, {w[2], u[2], v[2]}}});
    const RatPoly N2 = det3({{{one, w[0], v[0]}, {one, w[1], v[1]}, {one, w[2], v[2]}}});
    const RatPoly N1 = det3({{{one, u[0], w[0]}, {one, u[1], w[1]}, {one, u[2], w[2]}}});
    RatPoly A1, A2, A3;
    if (!divides_exactly(delta, N3, &A3) || !divides_exactly(delta, N2, &A2) || !divides_exactly(delta, N1, &A1))
        return err(ConstructionErrorKind::NonPolynomial, "the Cramer solution has a nontrivial denominator");
    return finish(n1, n2, n3, A1, A2, A3, {&spec.p1, &spec.p2, &spec.p3});
}

}  // namespace abelrat
