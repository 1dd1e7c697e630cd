#include "gpc/io.hpp"

#include "gpc/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace gpc {

using Json = nlohmann::ordered_json;

std::string to_json(const Graph& g, int indent) {
    Json doc;
    doc["format"] = kGraphFormat;
    doc["vertices"] = Json::array();
    for (const auto& name : g.names())
        doc["vertices"].push_back(name);
    doc["edges"] = Json::array();
    for (const auto& [a, b] : g.canonical_edges())
        doc["edges"].push_back(Json::array({a, b}));
    return doc.dump(indent);
}

Graph from_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || doc["format"] != kGraphFormat)
        throw FormatError("not a gpc-graph-v1 document");
    if (!doc.contains("vertices") || !doc["vertices"].is_array() || !doc.contains("edges") ||
        !doc["edges"].is_array())
        throw FormatError("gpc-graph-v1 needs 'vertices' and 'edges' arrays");

    // Edges refer to vertices by the document's spelling. A label that is not
    // in rendered form (say "v(1)") is accepted as an Atom and is written back
    // escaped.
    GraphBuilder b(doc["vertices"].size());
    std::unordered_map<std::string, VertexId> by_spelling;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string())
            throw FormatError("vertex labels must be strings");
        const auto& spelling = v.get_ref<const std::string&>();
        try {
            auto id = b.add_vertex(VertexLabel::parse(spelling));
            if (!by_spelling.emplace(spelling, id).second)
                throw FormatError("duplicate vertex: " + spelling);
        } catch (const PreconditionError& e) {
            throw FormatError(e.what());
        }
    }
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw FormatError("each edge must be a pair of labels");
        auto u = by_spelling.find(e[0].get<std::string>());
        auto v = by_spelling.find(e[1].get<std::string>());
        if (u == by_spelling.end() || v == by_spelling.end())
            throw FormatError("edge endpoint is not a vertex: " + e.dump());
        b.add_edge(u->second, v->second);
    }
    return std::move(b).build();
}

Graph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path.string());
    out << to_json(g) << '\n';
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << dot_quote(std::string(name)) << " {\n";
    for (const auto& v : g.names())
        out << "  " << dot_quote(v) << ";\n";
    for (const auto& [a, b] : g.canonical_edges())
        out << "  " << dot_quote(a) << " -- " << dot_quote(b) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gpc
