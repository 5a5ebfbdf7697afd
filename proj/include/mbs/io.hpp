#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbs/betweenness.hpp"
#include "mbs/enumeration.hpp"
#include "mbs/errors.hpp"
#include "mbs/graph.hpp"
#include "mbs/metric_space.hpp"
#include "mbs/rational.hpp"
#include "mbs/recognition.hpp"
#include "mbs/weighted_graph.hpp"

namespace mbs {

using json = nlohmann::json;

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

inline int parse_int(const std::string& token, int line_no) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + token + "'", line_no);
    }
}

struct LineReader {
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-empty line; lines starting with '#' are comments.
    std::optional<std::pair<std::string, int>> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto tokens = split_ws(line);
            if (tokens.empty() || tokens.front()[0] == '#') continue;
            return std::pair{line, line_no_};
        }
        return std::nullopt;
    }

    std::istream& in_;
    int line_no_ = 0;
};

}  // namespace detail

// ---- Graph text format: first line n, then one "u v" edge per line. ----

inline Graph read_graph(std::istream& in) {
    detail::LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError("missing vertex count line");
    const auto head_tokens = detail::split_ws(header->first);
    if (head_tokens.size() != 1)
        throw ParseError("expected a single vertex count", header->second);
    const int n = detail::parse_int(head_tokens[0], header->second);
    if (n <= 0) throw ParseError("vertex count must be positive", header->second);
    std::vector<Edge> edges;
    while (const auto line = reader.next()) {
        const auto tokens = detail::split_ws(line->first);
        if (tokens.size() != 2) throw ParseError("expected 'u v'", line->second);
        const int u = detail::parse_int(tokens[0], line->second);
        const int v = detail::parse_int(tokens[1], line->second);
        edges.push_back({u, v});
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidGraph& e) {
        throw ParseError(e.what());
    }
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.first << " " << e.second << "\n";
    return out.str();
}

// ---- Weighted graph text format: first line n, then "u v p/q" lines. ----

inline WeightedGraph read_weighted_graph(std::istream& in) {
    detail::LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError("missing vertex count line");
    const auto head_tokens = detail::split_ws(header->first);
    if (head_tokens.size() != 1)
        throw ParseError("expected a single vertex count", header->second);
    const int n = detail::parse_int(head_tokens[0], header->second);
    if (n <= 0) throw ParseError("vertex count must be positive", header->second);
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, Rational>> weighted;
    while (const auto line = reader.next()) {
        const auto tokens = detail::split_ws(line->first);
        if (tokens.size() != 3) throw ParseError("expected 'u v p/q'", line->second);
        const int u = detail::parse_int(tokens[0], line->second);
        const int v = detail::parse_int(tokens[1], line->second);
        Rational w;
        try {
            w = parse_rational(tokens[2]);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line->second);
        }
        edges.push_back({u, v});
        weighted.push_back({make_edge(u, v), w});
    }
    try {
        Graph g(n, std::move(edges));
        std::sort(weighted.begin(), weighted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Rational> weights;
        weights.reserve(weighted.size());
        for (auto& [e, w] : weighted) weights.push_back(std::move(w));
        return WeightedGraph(std::move(g), std::move(weights));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline std::string write_weighted_graph(const WeightedGraph& w) {
    std::ostringstream out;
    out << w.graph().vertex_count() << "\n";
    const auto& edges = w.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << edges[i].first << " " << edges[i].second << " " << to_string(w.weights()[i]) << "\n";
    return out.str();
}

// ---- JSON formats. ----

inline json structure_to_json(const BetweennessStructure& b) {
    json triples = json::array();
    for (const auto& [x, y, z] : b.triples()) triples.push_back(json::array({x, y, z}));
    return json{{"n", b.point_count()}, {"triples", triples}};
}

inline BetweennessStructure structure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("triples"))
        throw ParseError("structure JSON needs fields 'n' and 'triples'");
    if (!j["n"].is_number_integer()) throw ParseError("field 'n' must be an integer");
    const int n = j["n"].get<int>();
    if (!j["triples"].is_array()) throw ParseError("field 'triples' must be an array");
    std::vector<Triple> triples;
    for (const auto& entry : j["triples"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_number_integer())
            throw ParseError("each triple must be an array of three integers");
        triples.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
    }
    try {
        return BetweennessStructure(n, std::move(triples));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json metric_to_json(const MetricSpace& m) {
    json rows = json::array();
    for (int x = 0; x < m.point_count(); ++x) {
        json row = json::array();
        for (int y = 0; y < m.point_count(); ++y) row.push_back(to_string(m.distance(x, y)));
        rows.push_back(row);
    }
    return json{{"n", m.point_count()}, {"d", rows}};
}

inline MetricSpace metric_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d"))
        throw ParseError("metric JSON needs fields 'n' and 'd'");
    if (!j["n"].is_number_integer()) throw ParseError("field 'n' must be an integer");
    const int n = j["n"].get<int>();
    if (!j["d"].is_array() || j["d"].size() != static_cast<std::size_t>(n))
        throw ParseError("field 'd' must be an n-row array");
    std::vector<Rational> d;
    for (const auto& row : j["d"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("metric rows must have n entries");
        for (const auto& cell : row) {
            if (!cell.is_string()) throw ParseError("metric entries are rational strings");
            d.push_back(parse_rational(cell.get<std::string>()));
        }
    }
    try {
        return MetricSpace(n, std::move(d));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.first, e.second}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline json class_report_to_json(const ClassReport& r) {
    json out{{"is_block_graph", r.is_block_graph},
             {"is_chordal", r.is_chordal},
             {"has_diamond", r.has_diamond},
             {"is_distance_hereditary", r.is_distance_hereditary}};
    json witnesses = json::object();
    if (r.non_clique_block) witnesses["non_clique_block"] = *r.non_clique_block;
    if (r.induced_cycle) witnesses["induced_cycle"] = *r.induced_cycle;
    if (r.diamond) witnesses["diamond"] = *r.diamond;
    if (r.non_geodesic_induced_path)
        witnesses["non_geodesic_induced_path"] = r.non_geodesic_induced_path->vertices;
    out["witnesses"] = witnesses;
    return out;
}

inline json representation_report_to_json(const RepresentationReport& r) {
    json reps = json::array();
    for (const auto& b : r.representations) reps.push_back(structure_to_json(b));
    return json{{"graph", graph_to_json(r.graph)},
                {"count", r.count()},
                {"is_uniquely_representable", r.is_uniquely_representable()},
                {"bounds_below", r.bounds_below()},
                {"bounds_above", r.bounds_above()},
                {"representations", reps}};
}

// ---- File helpers. ----

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mbs
