#include "bbd/json_io.hpp"

#include <sstream>

namespace bbd {

namespace {

Json vertex_list(const std::vector<VertexId>& vs) {
    Json out = Json::array();
    for (VertexId v : vs) out.push_back(v.str());
    return out;
}

Json cycle_json(const Cycle& c) { return vertex_list(c.vertices()); }

Json arc_list(const std::vector<Arc>& arcs) {
    Json out = Json::array();
    for (const Arc& arc : arcs) out.push_back(Json::array({arc.from.str(), arc.to.str()}));
    return out;
}

Json connectivity_json(const ConnectivityCertificate& cert) {
    Json j;
    switch (cert.kind) {
        case ConnectivityKind::Strong:
            j["holds"] = true;
            break;
        case ConnectivityKind::NotStrong:
            j["holds"] = false;
            j["closed_set"] = vertex_list(cert.closed_set);
            break;
        case ConnectivityKind::TwoConnected:
            j["holds"] = true;
            break;
        case ConnectivityKind::CutVertex:
            j["holds"] = false;
            j["cut_vertex"] = cert.cut_vertex ? Json(cert.cut_vertex->str()) : Json(nullptr);
            break;
    }
    return j;
}

Json condition_json(const ConditionReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["threshold"] = r.threshold;
    if (r.violating_pair) {
        const DominatingPair& p = *r.violating_pair;
        j["witness"] = {{"pair", {p.u.str(), p.v.str()}},
                        {"common_out_neighbor", p.witness.str()},
                        {"degrees", {r.violating_values->first, r.violating_values->second}}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json matching_json(const MatchingOutcome& m) {
    Json j;
    j["perfect"] = m.matching.has_value();
    if (m.matching) {
        j["certificate"] = {{"matching", arc_list(m.matching->arcs)}};
    } else {
        j["certificate"] = {{"hall_violator", vertex_list(*m.violator)}};
    }
    return j;
}

Json evidence_list(const std::vector<GraphEvidence>& list) {
    Json out = Json::array();
    for (const auto& e : list) out.push_back({{"graph", e.graph}, {"evidence", e.evidence}});
    return out;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << v;
    return out.str();
}

}  // namespace

Json to_json(const ReportDocument& doc) {
    Json j;
    j["format_version"] = kReportFormatVersion;
    j["graph"] = doc.graph;
    Json degrees = Json::array();
    for (const auto& [v, d] : doc.degrees) {
        degrees.push_back({{"vertex", v.str()}, {"out", d.out}, {"in", d.in}, {"total", d.total}});
    }
    j["degrees"] = std::move(degrees);
    j["strong"] = connectivity_json(doc.strong);
    j["ug_two_connected"] =
        doc.ug_two_connected ? connectivity_json(*doc.ug_two_connected) : Json(nullptr);
    j["dominating_pair_count"] = doc.dominating_pair_count;
    j["max_bk"] = doc.max_bk.is_unbounded() ? Json("inf") : Json(doc.max_bk.value());
    Json conditions = Json::object();
    for (const auto& c : doc.conditions) conditions[c.id] = condition_json(c.report);
    j["conditions"] = std::move(conditions);
    j["matchings"] = {{"XtoY", matching_json(doc.matching_x_to_y)},
                      {"YtoX", matching_json(doc.matching_y_to_x)}};
    if (doc.cycle_factor) {
        Json cycles = Json::array();
        for (const Cycle& c : doc.cycle_factor->cycles) cycles.push_back(cycle_json(c));
        j["cycle_factor"] = std::move(cycles);
    } else {
        j["cycle_factor"] = nullptr;
    }
    j["even_spectrum"] = doc.even_spectrum ? Json(*doc.even_spectrum) : Json("unknown");
    if (doc.hamiltonian.known) {
        j["hamiltonian"] = {{"found", doc.hamiltonian.cycle.has_value()},
                            {"cycle", doc.hamiltonian.cycle ? cycle_json(*doc.hamiltonian.cycle)
                                                            : Json(nullptr)}};
    } else {
        j["hamiltonian"] = {{"found", "unknown"}, {"cycle", nullptr}};
    }
    j["iso_d8"] = doc.iso_d8 ? Json(*doc.iso_d8) : Json("unknown");
    return j;
}

Json to_json(const Population& population) {
    Json j;
    if (const auto* ex = std::get_if<ExhaustivePopulation>(&population)) {
        j["kind"] = "exhaustive";
        j["a"] = ex->a;
    } else if (const auto* cfg = std::get_if<SampleConfig>(&population)) {
        j["kind"] = "sample";
        j["a"] = cfg->a;
        j["arc_probability"] = cfg->arc_probability;
        j["seed"] = cfg->seed;
        j["count"] = cfg->count;
        j["rng"] = "mt19937_64";
        Json cs = Json::array();
        for (Constraint c : cfg->constraints) cs.push_back(constraint_name(c));
        j["constraints"] = std::move(cs);
    } else {
        const auto& list = std::get<ExplicitPopulation>(population);
        j["kind"] = "explicit";
        j["label"] = list.label;
        j["size"] = list.graphs.size();
    }
    return j;
}

Json to_json(const TheoremVerdict& v) {
    Json j;
    j["format_version"] = kReportFormatVersion;
    j["theorem"] = theorem_name(v.theorem);
    j["min_order"] = v.min_order;
    j["population"] = to_json(v.population);
    j["population_digest"] = v.population_digest ? Json(hex64(*v.population_digest)) : Json(nullptr);
    j["total"] = v.total;
    j["checked"] = v.checked;
    j["passed"] = v.passed;
    j["skipped"] = v.skipped();
    j["counterexamples"] = evidence_list(v.counterexamples);
    j["inconclusive"] = evidence_list(v.inconclusive);
    j["ok"] = v.ok();
    return j;
}

std::string to_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "half-order a: " << doc.a << '\n';
    out << "degrees (out/in/total):";
    for (const auto& [v, d] : doc.degrees) {
        out << ' ' << v.str() << '=' << d.out << '/' << d.in << '/' << d.total;
    }
    out << '\n';
    out << "strong: " << (doc.strong.kind == ConnectivityKind::Strong ? "yes" : "no") << '\n';
    if (doc.ug_two_connected) {
        out << "underlying graph 2-connected: ";
        if (doc.ug_two_connected->kind == ConnectivityKind::TwoConnected) {
            out << "yes\n";
        } else {
            out << "no (cut vertex "
                << (doc.ug_two_connected->cut_vertex ? doc.ug_two_connected->cut_vertex->str() : "?")
                << ")\n";
        }
    }
    out << "dominating pairs: " << doc.dominating_pair_count << '\n';
    out << "max B_k: " << (doc.max_bk.is_unbounded() ? std::string("inf")
                                                      : std::to_string(doc.max_bk.value()))
        << '\n';
    for (const auto& c : doc.conditions) {
        out << "condition " << c.id << ": " << (c.report.holds ? "holds" : "fails");
        if (c.report.violating_pair) {
            out << " (" << c.report.violating_pair->u.str() << ',' << c.report.violating_pair->v.str()
                << " degrees " << c.report.violating_values->first << ','
                << c.report.violating_values->second << ')';
        }
        out << '\n';
    }
    auto matching_line = [&](const char* name, const MatchingOutcome& m) {
        out << "perfect matching " << name << ": ";
        if (m.matching) {
            out << "yes\n";
        } else {
            out << "no (Hall violator {";
            for (std::size_t i = 0; i < m.violator->size(); ++i) {
                out << (i ? "," : "") << (*m.violator)[i].str();
            }
            out << "})\n";
        }
    };
    matching_line("XtoY", doc.matching_x_to_y);
    matching_line("YtoX", doc.matching_y_to_x);
    out << "cycle factor: ";
    if (doc.cycle_factor) {
        for (std::size_t i = 0; i < doc.cycle_factor->cycles.size(); ++i) {
            out << (i ? " | " : "") << doc.cycle_factor->cycles[i].str();
        }
        out << '\n';
    } else {
        out << "none\n";
    }
    out << "even spectrum:";
    if (doc.even_spectrum) {
        for (int len : *doc.even_spectrum) out << ' ' << len;
        out << '\n';
    } else {
        out << " unknown\n";
    }
    out << "hamiltonian: ";
    if (!doc.hamiltonian.known) {
        out << "unknown\n";
    } else if (doc.hamiltonian.cycle) {
        out << doc.hamiltonian.cycle->str() << '\n';
    } else {
        out << "no\n";
    }
    out << "isomorphic to D8: "
        << (doc.iso_d8 ? (*doc.iso_d8 ? "yes" : "no") : "unknown") << '\n';
    return out.str();
}

}  // namespace bbd
