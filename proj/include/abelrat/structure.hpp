#pragma once

#include "abelrat/diagram.hpp"
#include "abelrat/ndcheck.hpp"
#include "abelrat/solver.hpp"

#include <array>
#include <string>
#include <vector>

namespace abelrat {

enum class PairCase { C1, C2a, C2b, C3a, C3b, C3c, None };

const char* pair_case_label(PairCase c);

struct PairClass {
    PairCase kind = PairCase::None;
    int d = 0;        // larger denominator degree
    int d2 = 0;       // smaller one
    TieSet tie_at_d;
    std::vector<std::string> constraints;  // satisfied relations, e.g. "a1 = (n1-1)d-1"
};

// Trichotomy from the degrees of two distinct solutions. Throws ClassificationFailure.
PairClass classify_pair(const AbelEquation& eq, int deg_p1, int deg_p2);
PairClass classify_pair(const AbelEquation& eq, const RationalSolution& s1, const RationalSolution& s2);

struct BoundReport {
    FieldMode mode = FieldMode::Complex;
    std::string case_label;
    long bound = 0;
    long realized = 0;
    bool sharp = false;
    bool exactly_one = false;
    bool applies = false;  // ND holds, so the bound is established for this equation
};

// Case (a)-(f) bound for the tie at max Γ_sol, or the per-degree bound with fewer than two solutions.
BoundReport count_bound(const AbelEquation& eq, const SolutionSet& sols, FieldMode mode);

// deg p_r bound per edge-admissible degree: deg P_r - mult_0 (complex), 2(|T_r| - 1) (real).
long per_degree_bound(const EdgeProfile& profile, FieldMode mode);

// Expected (deg A1, deg A2, deg A3). Throws NonIncreasing.
std::array<int, 3> three_solution_degrees(int d1, int d2, int d3, int n1, int n2, int n3);

// det of the rows (1, p_j^(n3-n2), p_j^(n3-n1)).
RatPoly delta123(const RatPoly& p1, const RatPoly& p2, const RatPoly& p3, int n1, int n2, int n3);

}  // namespace abelrat
