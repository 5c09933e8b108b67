#include "abelrat/report.hpp"

#include "abelrat/errors.hpp"
#include "abelrat/realroots.hpp"

#include <cstdio>
#include <sstream>

namespace abelrat {

namespace {

Json decimal_hint(const RatPoly& modulus, const RootInterval& iv) {
    RootInterval fine = refine_root(modulus, iv, frac(1, Integer("1000000000000")));
    Rational mid = (fine.lo + fine.hi) / 2;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", approx(mid));
    Json h;
    h["approx"] = buf;
    h["interval_width"] = to_string(fine.width());
    return h;
}

Json element_to_json(const ModElement& e, int basis) {
    Json arr = Json::array();
    for (int j = 0; j < basis; ++j) arr.push_back(to_string(e.value().coeff(j)));
    return arr;
}

Json pair_to_json(const AbelEquation& eq, const SolutionSet& sols) {
    if (sols.count_complex < 2) return nullptr;
    const int d = *sols.gamma_sol.rbegin();
    const int d2 = *sols.gamma_sol.begin();
    Json j;
    j["d"] = d;
    j["d2"] = d2;
    try {
        PairClass pc = classify_pair(eq, d, d2);
        j["case"] = pair_case_label(pc.kind);
        j["tie_at_d"] = pc.tie_at_d.label();
        j["constraints"] = pc.constraints;
    } catch (const ClassificationFailure& e) {
        j["case"] = "failure";
        j["message"] = e.what();
    }
    return j;
}

}  // namespace

Json gamma_to_json(const CandidateDegrees& cd) {
    Json j;
    j["ratios"] = Json{{"r32", to_string(cd.r32)}, {"r31", to_string(cd.r31)}, {"r21", to_string(cd.r21)},
                       {"r3d", to_string(cd.r3d)}, {"r2d", to_string(cd.r2d)}, {"r1d", to_string(cd.r1d)}};
    j["r0"] = to_string(cd.r0);
    j["gamma"] = Json(std::vector<int>(cd.gamma.begin(), cd.gamma.end()));
    return j;
}

Json profile_to_json(const EdgeProfile& p) {
    Json j;
    j["r"] = p.r;
    j["O_r"] = p.Or;
    j["tie"] = p.tie.label();
    Json phis;
    for (Term t : kAllTerms) phis[term_label(t)] = p.phis[static_cast<int>(t)];
    j["phi"] = phis;
    j["edge_polynomial"] = poly_to_json(p.edge_poly);
    j["e_r"] = p.e_r;
    j["reduced_polynomial"] = poly_to_json(p.reduced_poly);
    return j;
}

Json nd_to_json(const NDVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["mode"] = field_mode_label(v.mode);
    Json degs = Json::array();
    for (const auto& [r, rec] : v.per_degree) {
        Json d;
        d["r"] = r;
        d["tie"] = rec.tie.label();
        d["nd1"] = Json{{"pass", rec.nd1.pass}};
        Json nd2;
        nd2["pass"] = rec.nd2.pass;
        nd2["witness"] = rec.nd2.witness ? Json(*rec.nd2.witness) : Json(nullptr);
        nd2["cutoff"] = to_string(rec.nd2.bound);
        d["nd2"] = nd2;
        Json nd3;
        nd3["pass"] = rec.nd3.pass;
        nd3["witness_order"] = rec.nd3.witness_order ? Json(*rec.nd3.witness_order) : Json(nullptr);
        d["nd3"] = nd3;
        d["table2_exclusion"] = rec.table2_exclusion ? Json(*rec.table2_exclusion) : Json(nullptr);
        d["holds"] = rec.holds();
        degs.push_back(d);
    }
    j["per_degree"] = degs;
    return j;
}

Json solution_to_json(const RationalSolution& s, const ReportOptions& opts) {
    Json j;
    j["degree"] = s.r;
    j["context_modulus"] = poly_to_json(s.context->modulus);
    const int basis = s.context->degree();
    Json den = Json::array();
    for (const auto& c : s.denominator.coeffs) den.push_back(element_to_json(c, basis));
    j["denominator"] = den;
    if (auto p = s.rational_denominator()) j["x"] = "1/(" + p->str() + ")";
    j["real_embeddings"] = s.real_embeddings;
    Json ivs = Json::array();
    for (const auto& iv : s.real_intervals) {
        Json e = Json::array({to_string(iv.lo), to_string(iv.hi)});
        ivs.push_back(e);
    }
    j["real_intervals"] = ivs;
    if (opts.approx) {
        Json hints = Json::array();
        for (const auto& iv : s.real_intervals) hints.push_back(decimal_hint(s.context->modulus, iv));
        j["leading_coefficient_approx"] = hints;
    }
    j["source"] = s.source == SolutionSource::Series ? "series" : "oracle";
    return j;
}

Json bound_to_json(const BoundReport& b) {
    Json j;
    j["mode"] = field_mode_label(b.mode);
    j["case"] = b.case_label;
    j["bound"] = b.bound;
    j["realized"] = b.realized;
    j["sharp"] = b.sharp;
    j["applies"] = b.applies;
    if (b.exactly_one) j["exactly_one"] = true;
    return j;
}

Json analyze_report(const AbelEquation& eq, FieldMode mode, const ReportOptions&) {
    Json j;
    j["equation"] = equation_to_json(eq);
    j["field"] = field_mode_label(mode);
    const CandidateDegrees cd = candidate_degrees(eq);
    j["gamma"] = gamma_to_json(cd);
    Json profiles = Json::array();
    for (const auto& p : admissible_profiles(eq)) {
        Json pj = profile_to_json(p);
        pj["tie_kind"] = tie_kind_label(classify_tie(p, eq));
        profiles.push_back(pj);
    }
    j["edge_profiles"] = profiles;
    j["nd"] = nd_to_json(check_nd(eq, mode));
    Json notes = Json::array();
    if (cd.gamma.empty()) notes.push_back("no admissible degrees");
    j["notes"] = notes;
    return j;
}

Json nd_report(const AbelEquation& eq, FieldMode mode) {
    Json j;
    j["equation"] = equation_to_json(eq);
    j["nd"] = nd_to_json(check_nd(eq, mode));
    return j;
}

Json bound_report(const AbelEquation& eq, const SolutionSet& sols) {
    Json j;
    j["mode"] = field_mode_label(sols.mode);
    j["nd_holds"] = sols.nd.holds;
    j["global"] = bound_to_json(count_bound(eq, sols, sols.mode));
    Json per = Json::array();
    for (const auto& p : admissible_profiles(eq)) {
        long realized = 0;
        for (const auto& s : sols.solutions)
            if (s.r == p.r) realized += sols.mode == FieldMode::Real ? s.real_embeddings : s.context->degree();
        per.push_back(Json{{"r", p.r}, {"bound", per_degree_bound(p, sols.mode)}, {"realized", realized}});
    }
    j["per_degree"] = per;
    return j;
}

Json solve_report(const AbelEquation& eq, const SolutionSet& sols, const ReportOptions& opts) {
    Json j = analyze_report(eq, sols.mode, opts);
    j["nd"] = nd_to_json(sols.nd);
    Json arr = Json::array();
    for (const auto& s : sols.solutions) arr.push_back(solution_to_json(s, opts));
    j["solutions"] = arr;
    j["gamma_sol"] = Json(std::vector<int>(sols.gamma_sol.begin(), sols.gamma_sol.end()));
    j["counts"] = Json{{"complex", sols.count_complex}, {"real", sols.count_real}};
    j["bounds"] = bound_report(eq, sols);
    j["structure"] = pair_to_json(eq, sols);
    Json orbits = Json::array();
    for (std::size_t k = 0; k < sols.solutions.size(); ++k) {
        Json alphas = Json::array();
        for (const auto& a : scaling_orbit(eq, sols.solutions[k])) alphas.push_back(to_string(a));
        orbits.push_back(Json{{"solution", k}, {"alpha", alphas}});
    }
    j["scaling_orbits"] = orbits;
    Json roots = Json::array();
    for (const auto& r : sols.roots) {
        Json rj;
        rj["r"] = r.r;
        rj["modulus"] = poly_to_json(r.modulus);
        rj["status"] = root_status_label(r.status);
        rj["resonant_at"] = r.resonant_at ? Json(*r.resonant_at) : Json(nullptr);
        rj["accepted_contexts"] = r.accepted;
        roots.push_back(rj);
    }
    j["roots"] = roots;
    j["exhaustive"] = sols.exhaustive;
    j["certification"] = sols.certification;
    Json oracle;
    oracle["attempted"] = sols.oracle_attempted;
    oracle["applicable"] = sols.oracle_applicable;
    oracle["agreement"] = sols.oracle_agreement ? Json(*sols.oracle_agreement) : Json(nullptr);
    j["oracle"] = oracle;
    j["violations"] = sols.violations;
    return j;
}

std::string summary_text(const AbelEquation& eq, const SolutionSet& sols) {
    std::ostringstream os;
    os << "exponents (" << eq.n1() << ", " << eq.n2() << ", " << eq.n3() << "), field " << field_mode_label(sols.mode)
       << "\n";
    os << "gamma:";
    for (int r : candidate_degrees(eq).gamma) os << " " << r;
    os << "\nND " << (sols.nd.holds ? "holds" : "fails") << ", certification " << sols.certification << "\n";
    os << sols.count() << " solution(s)";
    if (!sols.gamma_sol.empty()) {
        os << " at degree(s)";
        for (int r : sols.gamma_sol) os << " " << r;
    }
    os << "\n";
    for (const auto& s : sols.solutions) {
        if (auto p = s.rational_denominator())
            os << "  x = 1/(" << p->str() << ")\n";
        else
            os << "  degree " << s.r << " family over C with " << s.context->modulus.str("C") << " = 0, "
               << s.real_embeddings << " real\n";
    }
    BoundReport b = count_bound(eq, sols, sols.mode);
    os << "bound " << b.case_label << ": " << b.realized << " <= " << b.bound << (b.sharp ? " (sharp)" : "")
       << (b.applies ? "" : " (ND fails; not established)") << "\n";
    for (const auto& v : sols.violations) os << "violation: " << v << "\n";
    return os.str();
}

}  // namespace abelrat
