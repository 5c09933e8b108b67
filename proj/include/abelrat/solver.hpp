#pragma once

#include "abelrat/algebraic.hpp"
#include "abelrat/diagram.hpp"
#include "abelrat/ndcheck.hpp"
#include "abelrat/puiseux.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace abelrat {

enum class SolutionSource { Series, Oracle };

// x = 1/p with p = denominator; the leading coefficient of x is the class of C.
struct RationalSolution {
    int r = 0;
    ContextPtr context;
    CtxPoly denominator;
    int real_embeddings = 0;
    std::vector<RootInterval> real_intervals;  // of C
    SolutionSource source = SolutionSource::Series;

    // Plain polynomial when the context has degree 1.
    std::optional<RatPoly> rational_denominator() const;
};

enum class RootStatus {
    Exhaustive,         // the root was fully analysed
    NoRealEmbedding,    // real mode: skipped
    MultipleRoot,       // not analysed
    ResonantOpen        // resonance at N <= r with a solvable condition: not analysed
};

const char* root_status_label(RootStatus s);

struct RootRecord {
    int r = 0;
    RatPoly modulus;
    RootStatus status = RootStatus::Exhaustive;
    std::optional<int> resonant_at;
    int accepted = 0;  // number of accepted leaf contexts
};

struct SolutionSet {
    std::vector<RationalSolution> solutions;
    std::set<int> gamma_sol;
    int count_complex = 0;
    int count_real = 0;
    NDVerdict nd;
    FieldMode mode = FieldMode::Complex;
    std::vector<RootRecord> roots;
    bool exhaustive = true;               // every root analysed
    std::string certification;            // "certified", "oracle-backed", "unverified"
    bool oracle_attempted = false;
    bool oracle_applicable = false;
    std::optional<bool> oracle_agreement;
    std::vector<std::string> violations;  // failed theorem-level assertions

    int count() const { return mode == FieldMode::Real ? count_real : count_complex; }
};

struct SolveOptions {
    int max_series_order = 0;  // 0: automatic
    bool run_oracle = false;
};

// Exact identity p^(n3-2) p' + A3 + A2 p^(n3-n2) + A1 p^(n3-n1) = 0, per branch.
std::vector<std::pair<ContextPtr, bool>> verify_solution(const AbelEquation& eq, const CtxPoly& p);
bool verify_solution(const AbelEquation& eq, const RatPoly& p);

// Same check without branching; throws SplitEvent.
bool verify_in_context(const AbelEquation& eq, const CtxPoly& p);
// p^(n3-n2) | A3 in the context; throws SplitEvent.
bool power_divides_a3(const AbelEquation& eq, const CtxPoly& p);

SolutionSet solve(const AbelEquation& eq, FieldMode mode, const SolveOptions& opts = {});

// Rational α != 0 with α x again a solution (α = 1 included), ascending.
std::vector<Rational> scaling_orbit(const AbelEquation& eq, const RationalSolution& sol);

struct OracleOutcome {
    bool applicable = false;
    std::string reason;
    // Complex level: every context kept. When not applicable, the solutions built from the
    // rational linear factors alone (possibly incomplete).
    std::vector<RationalSolution> solutions;
    int count_complex = 0;
};

OracleOutcome divisor_oracle(const AbelEquation& eq, std::size_t divisor_limit = 20000);

// Compares solution sets as sets of denominators; contexts may be split differently.
bool same_solutions(const std::vector<RationalSolution>& a, const std::vector<RationalSolution>& b,
                    FieldMode mode);

// Deterministic ordering: degree, then modulus.
void sort_solutions(std::vector<RationalSolution>& sols);

}  // namespace abelrat
