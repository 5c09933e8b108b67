#pragma once

#include "abelrat/diagram.hpp"

#include <map>
#include <optional>
#include <string>

namespace abelrat {

enum class FieldMode { Complex, Real };

const char* field_mode_label(FieldMode m);

struct Nd1Result {
    bool pass = true;
};

struct Nd2Result {
    bool pass = true;
    std::optional<int> witness;   // smallest m >= 1 with P_r'(C) = -m at a nonzero root
    std::vector<int> all_witnesses;
    Integer bound;                // cutoff M
};

struct Nd3Result {
    bool pass = true;
    std::optional<int> witness_order;  // exact order of the offending root of unity
};

struct NdDegreeRecord {
    int r = 0;
    TieSet tie;
    Nd1Result nd1;
    Nd2Result nd2;
    Nd3Result nd3;
    std::optional<std::string> table2_exclusion;

    bool holds() const { return nd1.pass && nd2.pass && nd3.pass; }
};

struct NDVerdict {
    bool holds = true;
    FieldMode mode = FieldMode::Complex;
    std::map<int, NdDegreeRecord> per_degree;
};

Nd1Result check_nd1(const EdgeProfile& profile);

// Cutoff M = ceil(sum n_l |alpha_l| R^(n_l - 1) + r) with R a Cauchy bound of the reduced polynomial.
Integer nd2_bound(const EdgeProfile& profile, const AbelEquation& eq);

// S(z) = Res_C(reduced(C), z - P_r'(C)); its roots are the values of P_r' at nonzero roots.
RatPoly derivative_value_polynomial(const EdgeProfile& profile);

Nd2Result check_nd2(const EdgeProfile& profile, const AbelEquation& eq, FieldMode mode = FieldMode::Complex);

// R(y) = Res_C(reduced(C), y^d reduced(C / y)).
RatPoly separation_polynomial(const EdgeProfile& profile);

Nd3Result check_nd3(const EdgeProfile& profile, const AbelEquation& eq, FieldMode mode);

std::optional<std::string> table2_exclusion(TieSet tie, int n1, int n2, int n3, FieldMode mode);

NDVerdict check_nd(const AbelEquation& eq, FieldMode mode);

}  // namespace abelrat
