// Command-line front end: generate graphs, run constructions, verify
// certificates, run the exhaustive oracle, print bound reports, export
// DOT/JSON. Exit codes: 0 success, 1 invalid certificate or infeasible
// single-t search, 2 usage errors (with JSON on stderr under --format json).

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "itc/bounds.hpp"
#include "itc/coloring.hpp"
#include "itc/constructions.hpp"
#include "itc/graph.hpp"
#include "itc/json_io.hpp"
#include "itc/search.hpp"
#include "itc/transform.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string family;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::string name;
    std::string graph_path;
    std::string cert_path;
    int t = 0;
    int t_min = 0;
    int t_max = 0;
    std::uint64_t budget = 0;
    int jobs = 1;
    bool sym = false;
    std::string format = "table";
    std::string output;
};

int fail_usage(const Options& o, const std::string& message) {
    if (o.format == "json") {
        std::cerr << json{{"error", message}}.dump() << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
    return 2;
}

void write_out(const Options& o, const std::string& payload) {
    if (o.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(o.output);
    if (!file) throw std::invalid_argument("cannot write to " + o.output);
    file << payload;
}

json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    return json::parse(file);
}

itc::FamilySpec make_spec(const Options& o) {
    itc::FamilySpec spec;
    spec.family = itc::family_from_name(o.family);
    spec.n = o.n;
    spec.m = o.m;
    spec.seed = o.seed;
    spec.name = o.name;
    return spec;
}

// Graph plus the family spec when one was given (drives the wheel DOT
// labeling). Exactly one of --family / --graph must be present.
std::pair<itc::Graph, std::optional<itc::FamilySpec>> resolve_graph(const Options& o) {
    bool have_family = !o.family.empty();
    bool have_graph = !o.graph_path.empty();
    if (have_family == have_graph)
        throw std::invalid_argument("pass exactly one of --family or --graph");
    if (have_family) {
        auto spec = make_spec(o);
        return {itc::generate(spec), spec};
    }
    return {itc::graph_from_json(load_json_file(o.graph_path)), std::nullopt};
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << xs[i];
    }
    return out.str();
}

std::string graph_table(const itc::Graph& g) {
    std::ostringstream out;
    out << "vertices  " << g.vertex_count() << "\n";
    out << "edges     " << g.edge_count() << "\n";
    out << std::setw(5) << "edge" << std::setw(5) << "u" << std::setw(5) << "v" << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << std::setw(5) << e << std::setw(5) << u << std::setw(5) << v << "\n";
    }
    return out.str();
}

std::string certificate_table(const itc::TotalColoring& c, const std::string& method) {
    std::ostringstream out;
    if (!method.empty()) out << std::left << std::setw(15) << "method" << method << "\n";
    out << std::left << std::setw(15) << "t" << c.t << "\n";
    out << std::left << std::setw(15) << "vertex_colors" << join_ints(c.vertex_colors) << "\n";
    out << std::left << std::setw(15) << "edge_colors" << join_ints(c.edge_colors) << "\n";
    return out.str();
}

std::string verify_table(const itc::VerifyOutcome& outcome) {
    std::ostringstream out;
    out << "valid  " << (outcome.valid ? "true" : "false") << "\n";
    if (!outcome.failures.empty()) {
        out << std::left << std::setw(18) << "clause" << std::setw(14) << "vertices"
            << std::setw(14) << "edges" << std::setw(14) << "colors" << "message" << "\n";
        for (const auto& f : outcome.failures) {
            auto cell = [](const std::vector<int>& xs) {
                return xs.empty() ? std::string("-") : join_ints(xs);
            };
            out << std::left << std::setw(18) << itc::clause_name(f.clause) << std::setw(14)
                << cell(f.vertices) << std::setw(14) << cell(f.edges) << std::setw(14)
                << cell(f.colors) << f.message << "\n";
        }
    }
    return out.str();
}

std::string bounds_table(const itc::BoundReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(26) << "name" << std::setw(7) << "kind" << std::setw(8)
        << "target" << std::right << std::setw(6) << "value" << "  applicable" << "\n";
    for (const auto& b : report) {
        out << std::left << std::setw(26) << b.name << std::setw(7) << b.kind << std::setw(8)
            << b.target << std::right << std::setw(6) << b.value << "  "
            << (b.applicable ? "yes" : "no") << "\n";
    }
    return out.str();
}

std::string search_table(int t, const itc::SearchOutcome& outcome) {
    std::ostringstream out;
    out << std::left << std::setw(9) << "t" << t << "\n";
    out << std::left << std::setw(9) << "verdict" << itc::verdict_name(outcome.verdict) << "\n";
    out << std::left << std::setw(9) << "nodes" << outcome.nodes << "\n";
    if (outcome.witness) {
        out << std::left << std::setw(15) << "vertex_colors"
            << join_ints(outcome.witness->vertex_colors) << "\n";
        out << std::left << std::setw(15) << "edge_colors"
            << join_ints(outcome.witness->edge_colors) << "\n";
    }
    return out.str();
}

std::string spectrum_table(const itc::SpectrumResult& result) {
    std::ostringstream out;
    out << "t_range  " << result.t_lo << " " << result.t_hi << "\n";
    out << std::right << std::setw(5) << "t" << "  status" << "\n";
    for (const auto& entry : result.entries) {
        out << std::right << std::setw(5) << entry.t << "  " << itc::verdict_name(entry.verdict)
            << "\n";
    }
    if (result.least_t) out << "w_tau    " << *result.least_t << "\n";
    if (result.greatest_t) out << "W_tau    " << *result.greatest_t << "\n";
    return out.str();
}

std::string lift_table(const itc::AuxiliaryGraph& aux, const itc::EdgeColoring& lifted) {
    std::ostringstream out;
    out << std::left << std::setw(13) << "h_vertices" << aux.h.vertex_count() << "\n";
    out << std::left << std::setw(13) << "h_edges" << aux.h.edge_count() << "\n";
    out << std::left << std::setw(13) << "t" << lifted.t << "\n";
    out << std::left << std::setw(13) << "edge_colors" << join_ints(lifted.colors) << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"interval total colorings: constructions, verification, exhaustive search",
                 "itc"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "json | dot | table")
            ->check(CLI::IsMember({"json", "dot", "table"}))
            ->capture_default_str();
        cmd->add_option("--output", o.output, "write to a file instead of stdout");
    };
    auto add_family = [&](CLI::App* cmd) {
        auto* fam = cmd->add_option(
            "--family", o.family,
            "path | cycle | complete | complete_bipartite | wheel | tree_random | "
            "regular_bipartite_named");
        cmd->add_option("--n", o.n, "vertex count (second side of K_{m,n})");
        cmd->add_option("--m", o.m, "first side of K_{m,n}");
        cmd->add_option("--seed", o.seed, "random tree seed")->capture_default_str();
        cmd->add_option("--name", o.name, "regular bipartite instance name");
        return fam;
    };
    auto add_graph_source = [&](CLI::App* cmd) {
        auto* fam = add_family(cmd);
        auto* gfile = cmd->add_option("--graph", o.graph_path, "graph JSON file");
        fam->excludes(gfile);
        gfile->excludes(fam);
    };
    auto add_oracle = [&](CLI::App* cmd) {
        cmd->add_option("--budget", o.budget, "node budget, 0 = unlimited")
            ->capture_default_str();
        cmd->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
        cmd->add_flag("--sym", o.sym, "restrict the first element to the lower color half");
    };

    auto* cmd_generate = app.add_subcommand("generate", "emit a graph");
    add_graph_source(cmd_generate);
    add_format(cmd_generate);

    auto* cmd_color = app.add_subcommand("color", "build a construction certificate");
    add_family(cmd_color);
    auto* color_t = cmd_color->add_option("--t", o.t, "color count (family default if omitted)");
    add_format(cmd_color);

    auto* cmd_verify = app.add_subcommand("verify", "check a certificate file");
    cmd_verify->add_option("certificate", o.cert_path, "certificate JSON file")->required();
    add_format(cmd_verify);

    auto* cmd_search = app.add_subcommand("search", "decide one t exhaustively");
    add_graph_source(cmd_search);
    cmd_search->add_option("--t", o.t, "color count to decide")->required();
    add_oracle(cmd_search);
    add_format(cmd_search);

    auto* cmd_spectrum = app.add_subcommand("spectrum", "decide a whole t window");
    add_graph_source(cmd_spectrum);
    cmd_spectrum->add_option("--t-min", o.t_min, "window start (0 = derive)");
    cmd_spectrum->add_option("--t-max", o.t_max, "window end (0 = derive)");
    add_oracle(cmd_spectrum);
    add_format(cmd_spectrum);

    auto* cmd_bounds = app.add_subcommand("bounds", "print the bound report");
    add_graph_source(cmd_bounds);
    add_format(cmd_bounds);

    auto* cmd_lift = app.add_subcommand("lift", "doubled bipartite graph + lifted edge coloring");
    cmd_lift->add_option("certificate", o.cert_path, "certificate JSON file")->required();
    add_format(cmd_lift);

    auto* cmd_invert = app.add_subcommand("invert", "mirror a certificate to t+1-x");
    cmd_invert->add_option("certificate", o.cert_path, "certificate JSON file")->required();
    add_format(cmd_invert);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_usage(o, e.what());
    }

    try {
        if (app.got_subcommand(cmd_generate)) {
            auto [g, spec] = resolve_graph(o);
            if (o.format == "json") {
                write_out(o, itc::graph_to_json(g).dump(2) + "\n");
            } else if (o.format == "dot") {
                itc::DotOptions dot;
                dot.hub_is_u = spec && spec->family == itc::Family::wheel;
                write_out(o, itc::to_dot(g, dot));
            } else {
                write_out(o, graph_table(g));
            }
            return 0;
        }
        if (app.got_subcommand(cmd_color)) {
            if (o.family.empty()) throw std::invalid_argument("color needs --family");
            auto spec = make_spec(o);
            std::optional<int> t;
            if (color_t->count()) t = o.t;
            auto built = itc::build_certificate(spec, t);
            if (o.format == "json") {
                json j = itc::certificate_to_json(built.graph, built.coloring);
                j["method"] = built.method;
                write_out(o, j.dump(2) + "\n");
            } else if (o.format == "dot") {
                itc::DotOptions dot;
                dot.hub_is_u = spec.family == itc::Family::wheel;
                dot.coloring = &built.coloring;
                write_out(o, itc::to_dot(built.graph, dot));
            } else {
                write_out(o, certificate_table(built.coloring, built.method));
            }
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            auto [g, c] = itc::certificate_from_json(load_json_file(o.cert_path));
            auto outcome = itc::verify_interval_total(g, c);
            if (o.format == "json") {
                write_out(o, itc::verify_outcome_to_json(outcome).dump(2) + "\n");
            } else if (o.format == "dot") {
                throw std::invalid_argument("verify has no dot output");
            } else {
                write_out(o, verify_table(outcome));
            }
            return outcome.valid ? 0 : 1;
        }
        if (app.got_subcommand(cmd_search)) {
            auto [g, spec] = resolve_graph(o);
            (void)spec;
            itc::SearchConfig cfg;
            cfg.node_budget = o.budget;
            cfg.jobs = o.jobs;
            cfg.symmetry_break = o.sym;
            auto outcome = itc::exists_coloring(g, o.t, cfg);
            if (o.format == "json") {
                json j;
                j["t"] = o.t;
                j["status"] = outcome.verdict == itc::Verdict::budget_exhausted
                                  ? "budget"
                                  : itc::verdict_name(outcome.verdict);
                j["nodes"] = outcome.nodes;
                if (outcome.witness) j["certificate"] = itc::certificate_to_json(g, *outcome.witness);
                write_out(o, j.dump(2) + "\n");
            } else if (o.format == "dot") {
                throw std::invalid_argument("search has no dot output");
            } else {
                write_out(o, search_table(o.t, outcome));
            }
            return outcome.verdict == itc::Verdict::infeasible ? 1 : 0;
        }
        if (app.got_subcommand(cmd_spectrum)) {
            auto [g, spec] = resolve_graph(o);
            (void)spec;
            itc::SearchConfig cfg;
            cfg.t_min = o.t_min;
            cfg.t_max = o.t_max;
            cfg.node_budget = o.budget;
            cfg.jobs = o.jobs;
            cfg.symmetry_break = o.sym;
            auto result = itc::compute_spectrum(g, cfg);
            if (o.format == "json") {
                write_out(o, itc::spectrum_to_json(g, result).dump(2) + "\n");
            } else if (o.format == "dot") {
                throw std::invalid_argument("spectrum has no dot output");
            } else {
                write_out(o, spectrum_table(result));
            }
            return 0;
        }
        if (app.got_subcommand(cmd_bounds)) {
            auto [g, spec] = resolve_graph(o);
            (void)spec;
            auto report = itc::bound_report(g);
            if (o.format == "json") {
                write_out(o, itc::bound_report_to_json(report).dump(2) + "\n");
            } else if (o.format == "dot") {
                throw std::invalid_argument("bounds has no dot output");
            } else {
                write_out(o, bounds_table(report));
            }
            return 0;
        }
        if (app.got_subcommand(cmd_lift)) {
            auto [g, c] = itc::certificate_from_json(load_json_file(o.cert_path));
            auto aux = itc::build_auxiliary(g);
            auto lifted = itc::lift_coloring(aux, c);
            if (o.format == "json") {
                write_out(o, itc::auxiliary_to_json(aux, &lifted).dump(2) + "\n");
            } else if (o.format == "dot") {
                throw std::invalid_argument("lift has no dot output");
            } else {
                write_out(o, lift_table(aux, lifted));
            }
            return 0;
        }
        if (app.got_subcommand(cmd_invert)) {
            auto [g, c] = itc::certificate_from_json(load_json_file(o.cert_path));
            auto inverted = itc::invert(c);
            if (o.format == "json") {
                write_out(o, itc::certificate_to_json(g, inverted).dump(2) + "\n");
            } else if (o.format == "dot") {
                throw std::invalid_argument("invert has no dot output");
            } else {
                write_out(o, certificate_table(inverted, ""));
            }
            return 0;
        }
    } catch (const json::exception& e) {
        return fail_usage(o, e.what());
    } catch (const std::invalid_argument& e) {
        return fail_usage(o, e.what());
    } catch (const std::exception& e) {
        return fail_usage(o, e.what());
    }
    return fail_usage(o, "no subcommand");
}
