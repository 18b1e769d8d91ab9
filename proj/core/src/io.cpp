#include "rainbow/io.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace rainbow::io {

using ordered_json = nlohmann::ordered_json;
using Kind = ParseError::Kind;

namespace {

ordered_json parse_json(const std::string &text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError(Kind::MalformedJson, "document", "input is not valid JSON");
    return doc;
}

long require_int(const ordered_json &v, const std::string &where) {
    if (!v.is_number_integer())
        throw ParseError(Kind::BadType, where, "expected an integer");
    return v.get<long>();
}

} // namespace

GraphCollection parse_collection(const std::string &text) {
    const ordered_json doc = parse_json(text);
    if (!doc.is_object())
        throw ParseError(Kind::BadType, "document", "collection document must be a JSON object");
    for (const auto &[key, value] : doc.items())
        if (key != "format_version" && key != "n" && key != "graphs")
            throw ParseError(Kind::UnknownField, key, "unknown field in collection document");
    for (const char *field : {"format_version", "n", "graphs"})
        if (!doc.contains(field))
            throw ParseError(Kind::MissingField, field, "missing required field");

    if (require_int(doc["format_version"], "format_version") != collection_format_version)
        throw ParseError(Kind::WrongVersion, "format_version",
                         "unsupported format_version, expected " +
                             std::to_string(collection_format_version));
    const long n = require_int(doc["n"], "n");
    if (n < 1 || n > BipartiteGraph::max_n)
        throw ParseError(Kind::BadValue, "n", "part size must be in [1, 64]");

    const ordered_json &graphs = doc["graphs"];
    if (!graphs.is_array() || graphs.empty())
        throw ParseError(Kind::BadValue, "graphs", "graphs must be a nonempty array");

    std::vector<BipartiteGraph> out;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const std::string gwhere = "graphs[" + std::to_string(gi) + "]";
        const ordered_json &edges = graphs[gi];
        if (!edges.is_array())
            throw ParseError(Kind::BadType, gwhere, "each graph must be an array of edges");
        BipartiteGraph g(static_cast<int>(n));
        std::set<std::pair<long, long>> seen;
        for (std::size_t ei = 0; ei < edges.size(); ++ei) {
            const std::string ewhere = gwhere + "[" + std::to_string(ei) + "]";
            const ordered_json &e = edges[ei];
            if (!e.is_array() || e.size() != 2)
                throw ParseError(Kind::BadType, ewhere, "each edge must be a [x_index, y_index] pair");
            const long xi = require_int(e[0], ewhere + "[0]");
            const long yj = require_int(e[1], ewhere + "[1]");
            if (xi < 0 || xi >= n || yj < 0 || yj >= n)
                throw ParseError(Kind::IndexOutOfRange, ewhere, "edge index outside [0, n)");
            if (!seen.emplace(xi, yj).second)
                throw ParseError(Kind::DuplicateEdge, ewhere, "duplicate edge within one graph");
            g.set_edge(static_cast<int>(xi), static_cast<int>(yj));
        }
        out.push_back(std::move(g));
    }
    return GraphCollection(std::move(out));
}

std::string serialize_collection(const GraphCollection &c, bool pretty) {
    ordered_json doc;
    doc["format_version"] = collection_format_version;
    doc["n"] = c.n;
    ordered_json graphs = ordered_json::array();
    for (const auto &g : c.graphs) {
        ordered_json edges = ordered_json::array();
        for (auto [xi, yj] : g.edges())
            edges.push_back(ordered_json::array({xi, yj}));
        graphs.push_back(std::move(edges));
    }
    doc["graphs"] = std::move(graphs);
    return pretty ? doc.dump(2) : doc.dump();
}

namespace {

Vertex parse_vertex_token(const std::string &token, int n, const std::string &where) {
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y'))
        throw ParseError(Kind::BadValue, where, "vertex must look like x3 or y0");
    int index = 0;
    try {
        std::size_t used = 0;
        index = std::stoi(token.substr(1), &used);
        if (used + 1 != token.size())
            throw std::invalid_argument("");
    } catch (const std::exception &) {
        throw ParseError(Kind::BadValue, where, "vertex must look like x3 or y0");
    }
    if (index < 0 || index >= n)
        throw ParseError(Kind::IndexOutOfRange, where, "vertex index outside [0, n)");
    return Vertex{token[0] == 'x' ? Side::X : Side::Y, index};
}

} // namespace

TransversalWitness parse_witness(const std::string &text, int n, int m) {
    const ordered_json doc = parse_json(text);
    if (!doc.is_object())
        throw ParseError(Kind::BadType, "document", "witness document must be a JSON object");
    for (const auto &[key, value] : doc.items())
        if (key != "result" && key != "vertices" && key != "colors")
            throw ParseError(Kind::UnknownField, key, "unknown field in witness document");
    for (const char *field : {"result", "vertices", "colors"})
        if (!doc.contains(field))
            throw ParseError(Kind::MissingField, field, "missing required field");

    const std::string result = doc["result"].is_string() ? doc["result"].get<std::string>() : "";
    TransversalWitness w;
    if (result == "path")
        w.kind = WitnessKind::Path;
    else if (result == "cycle")
        w.kind = WitnessKind::Cycle;
    else
        throw ParseError(Kind::BadValue, "result", "result must be \"path\" or \"cycle\"");

    const ordered_json &vertices = doc["vertices"];
    if (!vertices.is_array())
        throw ParseError(Kind::BadType, "vertices", "vertices must be an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!vertices[i].is_string())
            throw ParseError(Kind::BadType, where, "vertex must be a string");
        w.vertices.push_back(parse_vertex_token(vertices[i].get<std::string>(), n, where));
    }

    const ordered_json &colors = doc["colors"];
    if (!colors.is_array())
        throw ParseError(Kind::BadType, "colors", "colors must be an array");
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const std::string where = "colors[" + std::to_string(i) + "]";
        const long color = require_int(colors[i], where);
        if (color < 0 || color >= m)
            throw ParseError(Kind::IndexOutOfRange, where, "color outside [0, m)");
        w.assignment.push_back(static_cast<int>(color));
    }
    return w;
}

std::string serialize_witness(const TransversalWitness &w, bool pretty) {
    ordered_json doc;
    doc["result"] = w.kind == WitnessKind::Path ? "path" : "cycle";
    ordered_json vertices = ordered_json::array();
    for (Vertex v : w.vertices)
        vertices.push_back(to_string(v));
    doc["vertices"] = std::move(vertices);
    doc["colors"] = w.assignment;
    return pretty ? doc.dump(2) : doc.dump();
}

std::string serialize_certificate(const extremal::ExtremalCertificate &cert, bool pretty) {
    ordered_json doc;
    if (const auto *dc = std::get_if<extremal::DoubleCompleteCertificate>(&cert)) {
        doc["family"] = "double_complete";
        doc["X1"] = dc->x1;
        doc["Y1"] = dc->y1;
    } else {
        const auto &ff = std::get<extremal::FFamilyCertificate>(cert);
        doc["family"] = "f_family";
        doc["x_star"] = ff.frame.x_star.index;
        doc["y_star"] = ff.frame.y_star.index;
        doc["X1"] = ff.frame.x1;
        doc["Y1"] = ff.frame.y1;
        ordered_json variants = ordered_json::array();
        for (auto v : ff.variants)
            variants.push_back(v == extremal::FVariant::F ? "F" : "F'");
        doc["variants"] = std::move(variants);
    }
    return pretty ? doc.dump(2) : doc.dump();
}

} // namespace rainbow::io
