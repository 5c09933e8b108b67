#pragma once

#include "abelrat/io.hpp"
#include "abelrat/ndcheck.hpp"
#include "abelrat/solver.hpp"
#include "abelrat/structure.hpp"

namespace abelrat {

struct ReportOptions {
    bool approx = false;  // add decimal hints for real roots, labeled with the interval width
};

Json gamma_to_json(const CandidateDegrees& cd);
Json profile_to_json(const EdgeProfile& p);
Json nd_to_json(const NDVerdict& v);
Json solution_to_json(const RationalSolution& s, const ReportOptions& opts);
Json bound_to_json(const BoundReport& b);

// Diagram and ND only.
Json analyze_report(const AbelEquation& eq, FieldMode mode, const ReportOptions& opts = {});
Json nd_report(const AbelEquation& eq, FieldMode mode);
// Full report.
Json solve_report(const AbelEquation& eq, const SolutionSet& sols, const ReportOptions& opts = {});
Json bound_report(const AbelEquation& eq, const SolutionSet& sols);

// Short human-readable summary for --verbose.
std::string summary_text(const AbelEquation& eq, const SolutionSet& sols);

}  // namespace abelrat
