#pragma once

// JSON payloads for the CLI and file interchange. Keys are emitted in a
// fixed order so identical inputs produce byte-identical output.
//
//   coloring     {"colors": [c_0, ..., c_{n-1}]}          1-based colors
//   vertex set   {"vertices": [v, ...]}                    ascending
//   certificate  {"D": [...], "D1": [...], "D2": [...], "S": [...]}

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdc/analysis.hpp"
#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/graph.hpp"
#include "tdc/io.hpp"
#include "tdc/trees.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

using ojson = nlohmann::ordered_json;

inline ojson coloring_to_json(const Coloring& c) {
    return ojson{{"colors", c.colors()}};
}

inline Coloring coloring_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("colors") || !j["colors"].is_array())
        throw ParseError("coloring JSON: expected {\"colors\": [...]}");
    std::vector<int> colors;
    for (const auto& item : j["colors"]) {
        if (!item.is_number_integer()) throw ParseError("coloring JSON: colors must be integers");
        int c = item.get<int>();
        if (c < 1) throw ParseError("coloring JSON: colors must be >= 1");
        colors.push_back(c);
    }
    return Coloring(colors);
}

inline ojson vertex_set_to_json(const VertexSet& s) {
    return ojson{{"vertices", s.to_vector()}};
}

inline ojson certificate_to_json(const TreeCertificate& cert) {
    ojson j;
    j["D"] = cert.d.to_vector();
    j["D1"] = cert.d1.to_vector();
    j["D2"] = cert.d2.to_vector();
    j["S"] = cert.s.to_vector();
    return j;
}

inline ojson star_decomposition_to_json(const StarDecomposition& dec) {
    ojson j;
    j["centers"] = dec.centers.to_vector();
    ojson stars = ojson::array();
    for (const auto& s : dec.stars) stars.push_back(s.to_vector());
    j["stars"] = stars;
    ojson conns = ojson::array();
    for (auto [u, v] : dec.connectors) conns.push_back(ojson::array({u, v}));
    j["connectors"] = conns;
    return j;
}

inline ojson analysis_to_json(const ColoringAnalysis& an) {
    ojson j;
    j["num_colors"] = an.num_colors;
    ojson classes = ojson::array();
    for (const auto& cls : an.classes) classes.push_back(cls.to_vector());
    j["classes"] = classes;
    j["C_P"] = an.c_p;
    j["C_S"] = an.c_s;
    j["C_G"] = an.c_g;
    j["C_0"] = an.c_0;
    j["A"] = an.a.to_vector();
    j["B"] = an.b.to_vector();
    j["D_S"] = an.d_s.to_vector();
    j["D_0"] = an.d_0.to_vector();
    j["dominated_by"] = an.dominated_by;
    return j;
}

inline ojson classification_to_json(const TreeClassification& cl) {
    ojson j;
    j["gamma_t"] = cl.gamma_t;
    j["chi_td"] = cl.chi_td;
    j["tier"] = to_string(cl.tier);
    if (cl.star_decomposition) j["star_decomposition"] = star_decomposition_to_json(*cl.star_decomposition);
    if (cl.certificate) j["certificate"] = certificate_to_json(*cl.certificate);
    if (cl.exhaustion) {
        j["exhaustion"] = ojson{{"td_sets_examined", cl.exhaustion->td_sets_examined},
                                {"partitions_checked", cl.exhaustion->partitions_checked}};
    }
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat parse_format_name(const std::string& s) {
    if (s == "edgelist") return GraphFormat::EdgeList;
    if (s == "graph6") return GraphFormat::Graph6;
    throw ParseError("unknown graph format: " + s);
}

inline Graph load_graph_file(const std::string& path, GraphFormat fmt) {
    std::string text = read_file(path);
    return fmt == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

inline Coloring load_coloring_file(const std::string& path) {
    ojson j;
    try {
        j = ojson::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("coloring JSON: ") + e.what());
    }
    return coloring_from_json(j);
}

} // namespace tdc
