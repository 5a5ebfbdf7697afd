#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbs/constructions.hpp"
#include "mbs/enumeration.hpp"
#include "mbs/geodesics.hpp"
#include "mbs/io.hpp"
#include "mbs/metrizability.hpp"
#include "mbs/recognition.hpp"

namespace mbs {

namespace cli_detail {

enum class InputKind { GraphText, WeightedText, MetricJson, StructureJson };

struct AnyInput {
    InputKind kind;
    std::optional<Graph> graph;
    std::optional<WeightedGraph> weighted;
    std::optional<MetricSpace> metric;
    std::optional<BetweennessStructure> structure;
};

// Sniffs the payload: JSON objects carry either "d" (metric) or "triples"
// (structure); text lines with three tokens carry weights.
inline AnyInput load_input(const std::string& path) {
    const std::string text = read_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json j = parse_json_text(text);
        if (j.contains("d")) {
            AnyInput in{InputKind::MetricJson, {}, {}, {}, {}};
            in.metric = metric_from_json(j);
            return in;
        }
        if (j.contains("triples")) {
            AnyInput in{InputKind::StructureJson, {}, {}, {}, {}};
            in.structure = structure_from_json(j);
            return in;
        }
        throw ParseError("JSON input must be a metric ('d') or a structure ('triples')");
    }
    bool weighted = false;
    {
        std::istringstream probe(text);
        detail::LineReader reader(probe);
        reader.next();  // vertex count
        while (const auto line = reader.next()) {
            const auto tokens = detail::split_ws(line->first);
            if (tokens.size() == 3) weighted = true;
            break;
        }
    }
    std::istringstream in(text);
    if (weighted) {
        AnyInput any{InputKind::WeightedText, {}, {}, {}, {}};
        any.weighted = read_weighted_graph(in);
        return any;
    }
    AnyInput any{InputKind::GraphText, {}, {}, {}, {}};
    any.graph = read_graph(in);
    return any;
}

inline Graph load_graph(const std::string& path) {
    const auto any = load_input(path);
    if (any.kind != InputKind::GraphText) throw ParseError("'" + path + "' is not a graph file");
    return *any.graph;
}

inline std::pair<int, int> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'x,z' for --pair");
    return {detail::parse_int(text.substr(0, comma), 0),
            detail::parse_int(text.substr(comma + 1), 0)};
}

inline std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(detail::parse_int(token, 0));
    return out;
}

inline json weighted_to_json(const WeightedGraph& w) {
    json edges = json::array();
    const auto& es = w.graph().edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        edges.push_back(json::array({es[i].first, es[i].second, to_string(w.weights()[i])}));
    return json{{"n", w.graph().vertex_count()}, {"edges", edges}};
}

inline json construction_to_json(const ConstructionResult& r) {
    return json{{"weighted_graph", weighted_to_json(r.weighted)},
                {"structure", structure_to_json(r.structure)},
                {"claims", r.claims}};
}

inline json verdict_to_json(const VerdictTable& table) {
    json checked = json::array();
    for (const auto& [n, count] : table.checked_per_order)
        checked.push_back(json{{"n", n}, {"graphs", count}});
    json counterexamples = json::array();
    for (const auto& ce : table.counterexamples)
        counterexamples.push_back(json{{"graph", graph_to_json(ce.graph)}, {"reason", ce.reason}});
    return json{{"verified", table.verified()},
                {"graphs_checked", table.graphs_checked},
                {"checked_per_order", checked},
                {"counterexamples", counterexamples}};
}

inline void print_verdict_text(const VerdictTable& table, std::ostream& out) {
    for (const auto& [n, count] : table.checked_per_order)
        out << "n=" << n << ": " << count << " connected graphs checked\n";
    if (table.verified()) {
        out << "verified: no counterexamples among " << table.graphs_checked << " graphs\n";
    } else {
        out << "FALSIFIED: " << table.counterexamples.size() << " counterexample(s)\n";
        for (const auto& ce : table.counterexamples) {
            out << "counterexample (" << ce.reason << "):\n" << write_graph(ce.graph);
        }
    }
}

struct Output {
    std::string path;  // empty = stdout

    void emit(const std::string& text, std::ostream& fallback) const {
        if (path.empty())
            fallback << text;
        else
            write_file(path, text);
    }
};

}  // namespace cli_detail

// Entry point shared by the binary and the tests. Exit codes: 0 success or
// verified, 1 falsified verification, 2 malformed input or usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::Output;

    CLI::App app{"betweenness structures of finite metric spaces"};
    app.require_subcommand(1);

    std::string input_path, output_path, format = "json", pair_text, path_text, eps_text;
    int max_n = 4;
    int family_n = 4;
    unsigned workers = 0;
    std::uint64_t budget = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", output_path, "write the result to a file instead of stdout");
        cmd->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* betweenness = app.add_subcommand(
        "betweenness", "induced betweenness structure of a graph, weighted graph or metric");
    betweenness->add_option("--input", input_path, "input file")->required();
    add_common(betweenness);

    auto* adjacency = app.add_subcommand("adjacency", "adjacency graph of a structure");
    adjacency->add_option("--input", input_path, "structure JSON file")->required();
    add_common(adjacency);

    auto* classify_cmd = app.add_subcommand("classify", "graph-class report with witnesses");
    classify_cmd->add_option("--input", input_path, "graph file")->required();
    add_common(classify_cmd);

    auto* metrizable_cmd =
        app.add_subcommand("metrizable", "decide metrizability of a candidate structure");
    metrizable_cmd->add_option("--input", input_path, "structure JSON file")->required();
    add_common(metrizable_cmd);

    auto* representations =
        app.add_subcommand("representations", "enumerate every representation of a graph");
    representations->add_option("--input", input_path, "graph file")->required();
    representations->add_option("--budget", budget, "search node budget (0 = unlimited)");
    representations->add_option("--workers", workers, "worker threads");
    add_common(representations);

    auto* construct = app.add_subcommand("construct", "the weighted-graph constructions");
    construct->require_subcommand(1);
    auto* lemma31 = construct->add_subcommand("lemma31", "shrink a non-geodesic induced path");
    lemma31->add_option("--input", input_path, "graph file")->required();
    lemma31->add_option("--path", path_text, "comma-separated path vertices")->required();
    lemma31->add_option("--eps", eps_text, "path edge weight, rational in (0, 1/len)");
    add_common(lemma31);
    auto* step2 = construct->add_subcommand("step2", "raise one hole edge to 3/2");
    step2->add_option("--input", input_path, "graph file")->required();
    add_common(step2);
    auto* bipartite = construct->add_subcommand("bipartite", "the 2^k lower-bound family");
    bipartite->add_option("--n", family_n, "vertex count (>= 4)")->required();
    add_common(bipartite);

    auto* verify = app.add_subcommand("verify", "machine-verify a statement by sweep");
    verify->require_subcommand(1);
    std::vector<CLI::App*> verify_cmds;
    for (const auto& name : {"theorem1", "theorem2", "dress", "prop24"}) {
        auto* cmd = verify->add_subcommand(name);
        cmd->add_option("--max-n", max_n, "largest vertex count to sweep");
        cmd->add_option("--workers", workers, "worker threads");
        add_common(cmd);
        verify_cmds.push_back(cmd);
    }

    auto* geodesics_cmd = app.add_subcommand("geodesics", "all geodesics between a vertex pair");
    geodesics_cmd->add_option("--input", input_path, "graph, weighted graph or structure file")
        ->required();
    geodesics_cmd->add_option("--pair", pair_text, "endpoints 'x,z'")->required();
    add_common(geodesics_cmd);

    std::vector<const char*> argv;
    argv.push_back("mbs");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        app.exit(e, out, err);
        return 2;
    }

    const Output sink{output_path};
    auto emit_json = [&](const json& j) { sink.emit(j.dump(2) + "\n", out); };

    try {
        if (*betweenness) {
            const auto any = cli_detail::load_input(input_path);
            BetweennessStructure b = [&] {
                switch (any.kind) {
                    case cli_detail::InputKind::GraphText:
                        return betweenness_of_graph(*any.graph);
                    case cli_detail::InputKind::WeightedText:
                        return betweenness_of_weighted(*any.weighted);
                    case cli_detail::InputKind::MetricJson:
                        return betweenness_of_metric(*any.metric);
                    default:
                        throw ParseError("input is already a betweenness structure");
                }
            }();
            if (format == "json") {
                emit_json(structure_to_json(b));
            } else {
                std::ostringstream text;
                text << b.point_count() << " points\n";
                for (const auto& [x, y, z] : b.triples())
                    text << "(" << x << " " << y << " " << z << ")\n";
                sink.emit(text.str(), out);
            }
            return 0;
        }

        if (*adjacency) {
            const auto any = cli_detail::load_input(input_path);
            if (any.kind != cli_detail::InputKind::StructureJson)
                throw ParseError("adjacency expects a structure JSON file");
            const Graph g = adjacency_graph(*any.structure);
            if (format == "json")
                emit_json(graph_to_json(g));
            else
                sink.emit(write_graph(g), out);
            return 0;
        }

        if (*classify_cmd) {
            const Graph g = cli_detail::load_graph(input_path);
            const ClassReport report = classify(g);
            if (format == "json") {
                emit_json(class_report_to_json(report));
            } else {
                std::ostringstream text;
                text << "block graph:           " << (report.is_block_graph ? "yes" : "no") << "\n"
                     << "chordal:               " << (report.is_chordal ? "yes" : "no") << "\n"
                     << "diamond:               " << (report.has_diamond ? "yes" : "no") << "\n"
                     << "distance-hereditary:   " << (report.is_distance_hereditary ? "yes" : "no")
                     << "\n";
                sink.emit(text.str(), out);
            }
            return 0;
        }

        if (*metrizable_cmd) {
            const auto any = cli_detail::load_input(input_path);
            if (any.kind != cli_detail::InputKind::StructureJson)
                throw ParseError("metrizable expects a structure JSON file");
            const auto witness = is_metrizable(*any.structure);
            if (format == "json") {
                json j{{"metrizable", witness.has_value()}};
                if (witness) j["witness"] = metric_to_json(*witness);
                emit_json(j);
            } else {
                sink.emit(witness ? metric_to_json(*witness).dump(2) + "\n" : "no\n", out);
            }
            return 0;
        }

        if (*representations) {
            const Graph g = cli_detail::load_graph(input_path);
            EnumerationOptions options;
            if (budget > 0) options.node_budget = budget;
            options.workers = workers;
            const RepresentationReport report = enumerate_representations(g, options);
            if (format == "json") {
                emit_json(representation_report_to_json(report));
            } else {
                std::ostringstream text;
                text << report.count() << " representation(s)\n"
                     << "uniquely representable: "
                     << (report.is_uniquely_representable() ? "yes" : "no") << "\n"
                     << "bounds below: " << (report.bounds_below() ? "yes" : "no") << "\n"
                     << "bounds above: " << (report.bounds_above() ? "yes" : "no") << "\n";
                sink.emit(text.str(), out);
            }
            return 0;
        }

        if (*lemma31) {
            const Graph g = cli_detail::load_graph(input_path);
            const Path p{cli_detail::parse_vertex_list(path_text)};
            std::optional<Rational> eps;
            if (!eps_text.empty()) eps = parse_rational(eps_text);
            const ConstructionResult result = lemma31_weighting(g, p, eps);
            if (format == "json")
                emit_json(cli_detail::construction_to_json(result));
            else
                sink.emit(write_weighted_graph(result.weighted), out);
            return 0;
        }

        if (*step2) {
            const Graph g = cli_detail::load_graph(input_path);
            const ConstructionResult result = step2_weighting(g);
            if (format == "json")
                emit_json(cli_detail::construction_to_json(result));
            else
                sink.emit(write_weighted_graph(result.weighted), out);
            return 0;
        }

        if (*bipartite) {
            const auto family = bipartite_family(family_n);
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : family) arr.push_back(cli_detail::construction_to_json(r));
                emit_json(json{{"count", family.size()}, {"results", arr}});
            } else {
                std::ostringstream text;
                text << family.size() << " distinct representation(s)\n";
                sink.emit(text.str(), out);
            }
            return 0;
        }

        if (*verify) {
            VerdictTable table;
            if (*verify_cmds[0]) {
                table = verify_theorem1(max_n, workers);
            } else if (*verify_cmds[1]) {
                table = verify_theorem2(max_n, workers);
            } else if (*verify_cmds[2]) {
                table = verify_dress(max_n, workers);
            } else {
                // prop24: points 1-5 for the graphic structure of every
                // connected graph, driven by its unit weighting.
                table = detail::sweep_connected_graphs(
                    max_n, workers, [](const Graph& g) -> std::optional<Counterexample> {
                        const WeightedGraph w = WeightedGraph::unit(g);
                        const Prop24Report report = check_prop24(betweenness_of_graph(g), &w);
                        if (report.all_passed()) return std::nullopt;
                        return Counterexample{g, "a geodesic statement failed"};
                    });
            }
            if (format == "json")
                emit_json(cli_detail::verdict_to_json(table));
            else {
                std::ostringstream text;
                cli_detail::print_verdict_text(table, text);
                sink.emit(text.str(), out);
            }
            return table.verified() ? 0 : 1;
        }

        if (*geodesics_cmd) {
            const auto [x, z] = cli_detail::parse_pair(pair_text);
            const auto any = cli_detail::load_input(input_path);
            GeodesicSet geos;
            switch (any.kind) {
                case cli_detail::InputKind::GraphText:
                    geos = weighted_geodesics(WeightedGraph::unit(*any.graph), x, z);
                    break;
                case cli_detail::InputKind::WeightedText:
                    geos = weighted_geodesics(*any.weighted, x, z);
                    break;
                case cli_detail::InputKind::MetricJson:
                    geos = structure_geodesics(betweenness_of_metric(*any.metric), x, z);
                    break;
                case cli_detail::InputKind::StructureJson:
                    geos = structure_geodesics(*any.structure, x, z);
                    break;
            }
            if (format == "json") {
                json paths = json::array();
                for (const auto& p : geos.paths) paths.push_back(p.vertices);
                emit_json(json{{"source", geos.source}, {"target", geos.target}, {"paths", paths}});
            } else {
                std::ostringstream text;
                for (const auto& p : geos.paths) {
                    for (std::size_t i = 0; i < p.vertices.size(); ++i)
                        text << (i ? " " : "") << p.vertices[i];
                    text << "\n";
                }
                sink.emit(text.str(), out);
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand handled\n";
    return 2;
}

}  // namespace mbs
