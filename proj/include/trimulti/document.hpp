// Output documents and their wire formats: a realization as JSON (canonical,
// byte-stable round trip), Graphviz DOT, or TSV, plus JSON forms of
// validation reports and oracle results.
#ifndef TRIMULTI_DOCUMENT_HPP
#define TRIMULTI_DOCUMENT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trimulti/construct.hpp"
#include "trimulti/degree_sequence.hpp"
#include "trimulti/multigraph.hpp"
#include "trimulti/oracle.hpp"

namespace trimulti {

struct RealizationDocument {
    std::int64_t n = 0;
    std::vector<std::int64_t> degrees;  // caller's order unless sorted output was requested
    std::vector<Edge> edges;            // sorted by (u, v), u < v
    ConstructionCertificate certificate;
    bool verified = false;

    bool operator==(const RealizationDocument&) const = default;
};

// Degrees and edge labels follow the caller's original input order; pass
// sorted_labels to emit in descending-degree order instead.
inline RealizationDocument make_document(const DegreeSequence& seq, const Realization& realization,
                                         bool sorted_labels = false) {
    RealizationDocument doc;
    doc.n = seq.size();
    doc.certificate = realization.certificate;
    doc.verified = true;
    if (sorted_labels) {
        doc.degrees = seq.degrees();
        // realize() emits original labels; map back to sorted positions.
        std::vector<std::int64_t> inverse(static_cast<std::size_t>(seq.size()));
        const auto& perm = seq.sorted_to_original();
        for (std::size_t i = 0; i < perm.size(); ++i)
            inverse[static_cast<std::size_t>(perm[i] - 1)] = static_cast<std::int64_t>(i + 1);
        doc.edges = relabel(realization.graph, inverse).edges();
    } else {
        doc.degrees = seq.original_order();
        doc.edges = realization.graph.edges();
    }
    return doc;
}

namespace detail {

inline nlohmann::json params_to_json(const ConstructionParams& params) {
    nlohmann::json j;
    j["D"] = params.alternating;
    if (params.block_index) j["k"] = *params.block_index;
    if (params.delta) j["delta"] = *params.delta;
    if (params.alpha) j["alpha"] = *params.alpha;
    if (params.beta) j["beta"] = *params.beta;
    if (!params.adjusted_degrees.empty()) j["dbar"] = params.adjusted_degrees;
    if (params.reduced_degrees) j["dprime"] = *params.reduced_degrees;
    if (params.suffix_sums) j["Dsuffix"] = *params.suffix_sums;
    return j;
}

inline ConstructionParams params_from_json(const nlohmann::json& j) {
    ConstructionParams params;
    params.alternating = j.at("D").get<std::int64_t>();
    if (j.contains("k")) params.block_index = j["k"].get<std::int64_t>();
    if (j.contains("delta")) params.delta = j["delta"].get<std::int64_t>();
    if (j.contains("alpha")) params.alpha = j["alpha"].get<std::int64_t>();
    if (j.contains("beta")) params.beta = j["beta"].get<std::int64_t>();
    if (j.contains("dbar")) params.adjusted_degrees = j["dbar"].get<std::vector<std::int64_t>>();
    if (j.contains("dprime")) params.reduced_degrees = j["dprime"].get<std::vector<std::int64_t>>();
    if (j.contains("Dsuffix")) params.suffix_sums = j["Dsuffix"].get<std::vector<std::int64_t>>();
    return params;
}

inline nlohmann::json certificate_to_json(const ConstructionCertificate& certificate) {
    nlohmann::json j;
    j["branch"] = std::string(branch_name(certificate.branch));
    j["params"] = params_to_json(certificate.params);
    if (certificate.split) {
        j["split"] = {{"a_seq", certificate.split->fan_sequence},
                      {"b_seq", certificate.split->cycle_sequence},
                      {"shared_vertex", certificate.split->shared_vertex},
                      {"tail_start", certificate.split->tail_start}};
    }
    return j;
}

inline ConstructionCertificate certificate_from_json(const nlohmann::json& j) {
    ConstructionCertificate certificate;
    const auto branch = branch_from_name(j.at("branch").get<std::string>());
    if (!branch) throw Error(errc::parse_error, "unknown certificate branch");
    certificate.branch = *branch;
    certificate.params = params_from_json(j.at("params"));
    if (j.contains("split")) {
        SplitParts split;
        split.fan_sequence = j["split"].at("a_seq").get<std::vector<std::int64_t>>();
        split.cycle_sequence = j["split"].at("b_seq").get<std::vector<std::int64_t>>();
        split.shared_vertex = j["split"].at("shared_vertex").get<std::int64_t>();
        split.tail_start = j["split"].at("tail_start").get<std::int64_t>();
        certificate.split = std::move(split);
    }
    return certificate;
}

}  // namespace detail

// nlohmann::json keeps object keys sorted, so emit -> parse -> emit is
// byte-identical.
inline std::string to_json(const RealizationDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["degrees"] = doc.degrees;
    auto edges = nlohmann::json::array();
    for (const Edge& e : doc.edges) edges.push_back({e.u, e.v, e.multiplicity});
    j["edges"] = std::move(edges);
    j["certificate"] = detail::certificate_to_json(doc.certificate);
    j["verified"] = doc.verified;
    return j.dump(2) + "\n";
}

inline RealizationDocument document_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        RealizationDocument doc;
        doc.n = j.at("n").get<std::int64_t>();
        doc.degrees = j.at("degrees").get<std::vector<std::int64_t>>();
        for (const auto& entry : j.at("edges")) {
            if (!entry.is_array() || entry.size() != 3) throw Error(errc::parse_error, "bad edge entry");
            doc.edges.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>(),
                                 entry[2].get<std::int64_t>()});
        }
        doc.certificate = detail::certificate_from_json(j.at("certificate"));
        doc.verified = j.at("verified").get<bool>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("invalid realization document: ") + e.what());
    }
}

// Undirected DOT with multiplicity as integer edge attribute m; one node
// statement per vertex and one edge statement per positive pair.
inline std::string to_dot(const RealizationDocument& doc) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::int64_t v = 1; v <= doc.n; ++v) out << "  v" << v << ";\n";
    for (const Edge& e : doc.edges)
        out << "  v" << e.u << " -- v" << e.v << " [m=" << e.multiplicity << "];\n";
    out << "}\n";
    return out.str();
}

inline std::string to_tsv(const RealizationDocument& doc) {
    std::ostringstream out;
    out << "# n=" << doc.n << " branch=" << branch_name(doc.certificate.branch) << "\n";
    for (const Edge& e : doc.edges) out << e.u << "\t" << e.v << "\t" << e.multiplicity << "\n";
    return out.str();
}

// Re-runs the verifiers on a (possibly parsed) document: degrees must match
// the edge list exactly and every edge must sit in a triangle.
inline bool verify_document(const RealizationDocument& doc) {
    MultigraphBuilder builder(doc.n);
    for (const Edge& e : doc.edges) builder.add(e.u, e.v, e.multiplicity);
    const Multigraph graph = builder.build();
    if (degree_sequence_of(graph) != doc.degrees) return false;
    return check_triangular(graph).is_triangular;
}

inline std::string to_json(const ValidationReport& report) {
    nlohmann::json j;
    j["ordering_ok"] = report.ordering_ok;
    j["parity_ok"] = report.parity_ok;
    j["d1_bound_ok"] = report.d1_bound_ok;
    j["min_degree_ok"] = report.min_degree_ok;
    if (report.erdos_gallai_ok) j["erdos_gallai_ok"] = *report.erdos_gallai_ok;
    if (report.failing_k) j["failing_k"] = *report.failing_k;
    return j.dump(2) + "\n";
}

inline std::string to_json(const OracleResult& result) {
    nlohmann::json j;
    j["exists"] = result.exists;
    j["nodes_explored"] = result.nodes_explored;
    j["bound_used"] = result.bound_used;
    if (result.witness) {
        nlohmann::json w;
        w["n"] = result.witness->vertex_count();
        auto edges = nlohmann::json::array();
        for (const Edge& e : result.witness->edges()) edges.push_back({e.u, e.v, e.multiplicity});
        w["edges"] = std::move(edges);
        j["witness"] = std::move(w);
    }
    return j.dump(2) + "\n";
}

inline std::string to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "n,exists,nodes_explored\n";
    for (const CensusRow& row : rows)
        out << row.n << "," << (row.exists ? "true" : "false") << "," << row.nodes_explored << "\n";
    return out.str();
}

}  // namespace trimulti

#endif
