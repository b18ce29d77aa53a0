#include "simcore/format.hpp"

#include <sstream>

namespace simcore {

Json to_json(const Partition& lambda) {
    return Json(lambda.parts());
}

Json to_json(const BetaSet& beta) {
    return Json(beta.values());
}

Json to_json(const NumericalSemigroup& semigroup) {
    Json out;
    out["gens"] = semigroup.generators().values();
    if (semigroup.has_finite_gaps()) {
        out["frobenius"] = semigroup.frobenius();
        out["gaps"] = semigroup.gaps();
    } else {
        out["frobenius"] = nullptr;
        out["gaps"] = nullptr;
    }
    return out;
}

Json to_json(const GapPoset& poset) {
    Json out;
    out["gens"] = poset.semigroup().generators().values();
    out["gaps"] = poset.elements();
    Json edges = Json::array();
    for (const auto& [upper, lower] : poset.hasse_edges()) edges.push_back({upper, lower});
    out["hasse_edges"] = std::move(edges);
    out["maximal"] = poset.maximal();
    out["poset_um"] = is_poset_um(poset);
    return out;
}

Json to_json(const UMReport& report) {
    Json out;
    out["is_um"] = report.is_um;
    out["poset_um"] = report.poset_um;
    out["core_count"] = report.core_count;
    out["kappa"] = report.kappa ? to_json(*report.kappa) : Json(nullptr);
    out["kappa_prime"] = to_json(report.kappa_prime);
    if (report.witnesses)
        out["witnesses"] = Json::array({to_json(report.witnesses->first), to_json(report.witnesses->second)});
    else
        out["witnesses"] = nullptr;
    return out;
}

Json to_json(const TripleReport& report) {
    const auto& dec = report.decomposition;
    Json out;
    out["triple"] = {dec.a, dec.b, dec.c};
    out["sorted"] = report.sorted;
    out["p"] = dec.p;
    out["q"] = dec.q;
    out["r"] = dec.r;
    out["d"] = dec.d;
    out["e"] = dec.e;
    out["f"] = dec.f;
    out["aprimitive"] = report.aprimitive;
    out["poset_um"] = report.poset_um;
    out["maximal_count"] = report.maximal_count;
    out["um"] = report.um;
    out["core_count"] = report.um_report.core_count;
    out["kappa"] = report.um_report.kappa ? to_json(*report.um_report.kappa) : Json(nullptr);
    out["kappa_prime"] = to_json(report.um_report.kappa_prime);
    if (report.um_report.witnesses)
        out["witnesses"] = Json::array(
            {to_json(report.um_report.witnesses->first), to_json(report.um_report.witnesses->second)});
    else
        out["witnesses"] = nullptr;
    out["kappa_beta"] = report.kappa_beta ? to_json(*report.kappa_beta) : Json(nullptr);
    out["kappa_matches"] = report.kappa_matches ? Json(*report.kappa_matches) : Json(nullptr);
    out["um_implies_aprimitive"] = report.um_implies_aprimitive();
    out["um_implies_poset_um"] = report.um_implies_poset_um();
    out["poset_um_matches_aprimitive"] = report.poset_um_matches_aprimitive();
    return out;
}

std::string to_brace_string(const std::vector<int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "}";
}

std::string to_brace_string(const BetaSet& beta) {
    return to_brace_string(beta.values());
}

std::string emit_dot(const GapPoset& poset) {
    std::ostringstream out;
    out << "digraph P {\n";
    for (int x : poset.elements()) out << "  " << x << " [label=\"" << x << "\"];\n";
    for (const auto& [upper, lower] : poset.hasse_edges()) out << "  " << upper << " -> " << lower << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace simcore
