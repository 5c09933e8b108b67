#pragma once

#include "abelrat/algebraic.hpp"
#include "abelrat/diagram.hpp"
#include "abelrat/ndcheck.hpp"
#include "abelrat/realroots.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace abelrat {

struct LeadingRoot {
    ContextPtr context;
    ModElement element;              // the class of C
    int multiplicity = 1;            // multiplicity as a root of the reduced polynomial
    int real_embeddings = 0;
    std::vector<RootInterval> real_intervals;
    bool flagged_no_real = false;    // real mode only
};

std::vector<LeadingRoot> leading_roots(const EdgeProfile& profile, FieldMode mode);

struct LaurentPrefix {
    int r = 0;
    ContextPtr context;
    std::vector<ModElement> coefficients;  // c_0 .. c_M, or up to the resonance
    std::optional<int> resonant_at;
    // At a resonance: whether the solvability condition H_N = 0 holds.
    std::optional<bool> resonance_solvable;
};

// Default truncation order.
inline int default_series_order(int r) { return 2 * r + 2; }

// One prefix per branch of the context tree.
std::vector<LaurentPrefix> extend_series(const AbelEquation& eq, const EdgeProfile& profile,
                                         const LeadingRoot& root, int M);

// Same, starting from an arbitrary context in which C is a nonzero root of the reduced polynomial.
std::vector<LaurentPrefix> extend_series_in(const AbelEquation& eq, const EdgeProfile& profile,
                                            const ContextPtr& ctx, int M);

struct NotRational {};

// Candidate denominator p̂ with coefficients in the prefix context (index = power of t).
// Uses c_0..c_K with K = number of available coefficients - 1; requires K >= 2r + 1 unless
// allow_short is set (then K >= r suffices and fewer guard coefficients are checked).
// Throws InsufficientPrefix and SplitEvent.
std::variant<CtxPoly, NotRational> reciprocal_candidate(const LaurentPrefix& prefix, bool allow_short = false);

}  // namespace abelrat
