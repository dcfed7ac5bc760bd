// Command-line front end: build cone spanners, compute spanning ratios,
// run the certification suite, print bound tables, and export SVG drawings.
// Exit codes: 0 success, 1 certification failure, 2 input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conespan/bounds.hpp"
#include "conespan/certify.hpp"
#include "conespan/construction.hpp"
#include "conespan/constructions.hpp"
#include "conespan/metrics.hpp"
#include "conespan/pointset_io.hpp"
#include "conespan/svg.hpp"

namespace {

using namespace conespan;

struct InputSpec {
    std::string set_name;
    std::string points_path;
    std::string random_spec;
    double eps = 1e-6;
};

struct GraphSpec {
    int k = 0;
    bool theta = false;
    bool directed = false;
    std::string tie = "lowest-id";
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("--set", in.set_name, "named point set: y5-appendix or y6-lb");
    cmd->add_option("--points", in.points_path, "point file, one x,y per line");
    cmd->add_option("--random", in.random_spec,
                    "random set spec: n=<int>,seed=<int>[,dist=unit-square|unit-disk|clustered]");
    cmd->add_option("--eps", in.eps, "epsilon for the y6-lb construction")->default_val(1e-6);
}

void add_graph_options(CLI::App* cmd, GraphSpec& gs) {
    cmd->add_option("--k", gs.k, "cone count (>= 3)");
    cmd->add_flag("--theta", gs.theta, "build a Theta graph instead of a Yao graph");
    cmd->add_flag("--directed", gs.directed, "keep the graph directed (diagnostics)");
    cmd->add_option("--tie", gs.tie, "tie rule: lowest-id or smallest-angle")
        ->default_val("lowest-id");
}

NamedPointSet resolve_input(const InputSpec& in) {
    const int given = (!in.set_name.empty()) + (!in.points_path.empty()) + (!in.random_spec.empty());
    if (given != 1)
        throw std::invalid_argument("exactly one of --set, --points, --random is required");
    if (!in.set_name.empty()) {
        if (in.set_name == "y5-appendix") return y5_lower_bound_points();
        if (in.set_name == "y6-lb") return y6_lower_bound_points(in.eps);
        throw std::invalid_argument("unknown named set: " + in.set_name);
    }
    if (!in.points_path.empty()) {
        ParsedPointFile pf = read_point_file(in.points_path);
        NamedPointSet s;
        s.name = in.points_path;
        s.points = std::move(pf.points);
        s.labels = std::move(pf.labels);
        s.provenance = "file";
        return s;
    }
    int n = 0;
    std::uint64_t seed = 0;
    Distribution dist = Distribution::UnitSquare;
    std::stringstream ss(in.random_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad --random field: " + item);
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "n")
            n = std::stoi(val);
        else if (key == "seed")
            seed = std::stoull(val);
        else if (key == "dist") {
            if (val == "unit-square")
                dist = Distribution::UnitSquare;
            else if (val == "unit-disk")
                dist = Distribution::UnitDisk;
            else if (val == "clustered")
                dist = Distribution::Clustered;
            else
                throw std::invalid_argument("unknown distribution: " + val);
        } else
            throw std::invalid_argument("unknown --random field: " + key);
    }
    return random_points(n, seed, dist);
}

TieBreak parse_tie(const std::string& s) {
    if (s == "lowest-id") return TieBreak::LowestId;
    if (s == "smallest-angle" || s == "smallest-angle-then-lowest-id")
        return TieBreak::SmallestAngleThenLowestId;
    throw std::invalid_argument("unknown tie rule: " + s);
}

GeoGraph build_graph(const NamedPointSet& set, const GraphSpec& gs) {
    int k = gs.k;
    if (k == 0) k = set.expected_k;
    if (k < 3) throw std::invalid_argument("cone count --k must be at least 3");
    const ConeScheme scheme(k);
    const TieBreak tie = parse_tie(gs.tie);
    if (gs.theta)
        return gs.directed ? build_directed_theta(set.points, scheme, tie)
                           : build_undirected_theta(set.points, scheme, tie);
    return gs.directed ? build_directed_yao(set.points, scheme, tie)
                       : build_undirected_yao(set.points, scheme, tie);
}

nlohmann::json config_json(const std::string& command, const InputSpec& in, const GraphSpec& gs) {
    nlohmann::json j;
    j["command"] = command;
    if (!in.set_name.empty()) j["set"] = in.set_name;
    if (!in.points_path.empty()) j["points"] = in.points_path;
    if (!in.random_spec.empty()) j["random"] = in.random_spec;
    if (in.set_name == "y6-lb") j["eps"] = in.eps;
    j["k"] = gs.k;
    j["graph"] = gs.theta ? "theta" : "yao";
    j["directed"] = gs.directed;
    j["tie"] = gs.tie;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write: " + path);
    out << text;
}

int run_build(const InputSpec& in, const GraphSpec& gs, const std::string& out_path) {
    const NamedPointSet set = resolve_input(in);
    const GeoGraph g = build_graph(set, gs);
    write_text(out_path, format_edge_list(g));
    std::cout << g.n << " vertices, " << g.edges.size() << " edges ("
              << (g.directed ? "directed " : "undirected ") << (gs.theta ? "theta" : "yao")
              << ", k=" << (gs.k ? gs.k : set.expected_k) << ") -> " << out_path << "\n";
    return 0;
}

int run_ratio(const InputSpec& in, const GraphSpec& gs, bool full_table, int jobs,
              const std::string& json_path) {
    const NamedPointSet set = resolve_input(in);
    const GeoGraph g = build_graph(set, gs);
    const StretchReport rep = spanning_ratio(
        g, set.points, full_table ? RatioMode::FullTable : RatioMode::MaxOnly, jobs);
    if (json_path == "-") {  // keep stdout pure JSON for pipelines
        nlohmann::json j = rep.to_json();
        j["config"] = config_json("ratio", in, gs);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (rep.connected) {
        std::cout << "spanning ratio: " << detail::format_double(rep.ratio) << "\n";
        std::cout << "witness pair: " << rep.witness_source << " -> " << rep.witness_target
                  << "\nwitness path:";
        for (int v : rep.witness_path) std::cout << ' ' << v;
        std::cout << "\n";
    } else {
        std::cout << "spanning ratio: infinite (unreachable pair " << rep.witness_source << ", "
                  << rep.witness_target << ")\n";
    }
    if (!json_path.empty()) {
        nlohmann::json j = rep.to_json();
        j["config"] = config_json("ratio", in, gs);
        write_text(json_path, j.dump(2) + "\n");
    }
    return 0;
}

int run_certify(std::vector<std::string> names, bool all, const CertifySuiteOptions& opt,
                const std::string& json_path) {
    if (all || names.empty()) names = certifier_names();
    const bool quiet = json_path == "-";  // keep stdout pure JSON for pipelines
    bool ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const std::string& n : names) {
        const auto t0 = std::chrono::steady_clock::now();
        const CertResult r = certify_by_name(n, opt);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        ok = ok && r.pass();
        if (!quiet) {
            std::printf("%-15s %s  samples=%lld  max_violation=%.3g  (%lld ms)\n", r.name.c_str(),
                        r.pass() ? "PASS" : "FAIL", r.samples(), r.max_violation(),
                        static_cast<long long>(ms));
            for (const auto& c : r.checks)
                if (!c.pass())
                    std::printf("    check %-28s %s  max_violation=%.6g  tolerance=%g%s\n",
                                c.name.c_str(), c.gating ? "FAIL" : "fail (informational)",
                                c.max_violation, c.tolerance, c.gating ? "" : " [not gating]");
        }
        arr.push_back(r.to_json());
    }
    if (!json_path.empty()) write_text(json_path, arr.dump(2) + "\n");
    return ok ? 0 : 1;
}

int run_bounds(std::optional<int> k, std::optional<double> y6_delta) {
    if (y6_delta) {
        std::printf("y6 bound t(%.6g) = %.6f  (< 5.8: %s)\n", *y6_delta, y6_bound(*y6_delta),
                    y6_bound(*y6_delta) < 5.8 ? "yes" : "no");
    }
    if (k) {
        const bool odd_ok = (*k >= 5 && *k % 2 == 1);
        const bool gen_ok = (*k > 6);
        if (!odd_ok && !gen_ok && *k != 6) {
            std::ostringstream msg;
            msg << "no odd-k bound for k=" << *k;
            if (*k == 4) msg << " (known: Y4 is a 663-spanner)";
            if (*k < 4) msg << " (no constant bound exists for k < 4)";
            throw std::invalid_argument(msg.str());
        }
        std::printf("k = %d (cone angle %.6f rad)\n", *k, two_pi / *k);
        if (odd_ok)
            std::printf("  odd-k upper bound 1/(1-2sin(3*theta/8)) = %.6f\n",
                        yao_odd_upper_bound(*k));
        if (gen_ok)
            std::printf("  general upper bound 1/(1-2sin(theta/2)) = %.6f\n",
                        yao_general_upper_bound(*k));
        if (*k == 5)
            std::printf("  refined Y5 upper bound 2+sqrt(3) = %.6f (threshold angle %.6f)\n",
                        BoundCatalog::y5_upper(), BoundCatalog::y5_threshold_angle());
        if (*k == 6) {
            const double d0 = y6_optimal_delta();
            std::printf("  Y6 upper bound t(delta0) = %.6f at delta0 = %.6f (< 5.8)\n",
                        y6_bound(d0), d0);
        }
    }
    std::printf("comparison constants: Theta5 in [%.2f, %.2f], Theta6 = %.0f, previous Y6 = %.2f\n",
                BoundCatalog::theta5_lower, BoundCatalog::theta5_upper, BoundCatalog::theta6,
                BoundCatalog::y6_previous);
    return 0;
}

int run_export_svg(const InputSpec& in, const GraphSpec& gs, std::optional<int> cones_at,
                   bool witness, bool ids, const std::string& out_path) {
    const NamedPointSet set = resolve_input(in);
    const GeoGraph g = build_graph(set, gs);
    SvgOptions opt;
    opt.vertex_ids = ids;
    if (cones_at) {
        if (*cones_at < 0 || *cones_at >= set.points.size())
            throw std::invalid_argument("invalid --cones-at vertex id");
        opt.cones_at = *cones_at;
        opt.cone_count = gs.k ? gs.k : set.expected_k;
    }
    if (witness) {
        const StretchReport rep = spanning_ratio(g, set.points);
        if (rep.connected) opt.witness_path = rep.witness_path;
    }
    write_text(out_path, render_svg(set.points, g, opt));
    std::cout << "wrote " << out_path << " (" << set.points.size() << " points, "
              << g.edges.size() << " edges)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone-based geometric spanners: Yao/Theta construction, exact spanning "
                 "ratios, certified bounds"};
    app.require_subcommand(1);

    InputSpec in;
    GraphSpec gs;

    auto* build = app.add_subcommand("build", "build a spanner and write its edge list");
    add_input_options(build, in);
    add_graph_options(build, gs);
    std::string build_out = "edges.txt";
    build->add_option("--out", build_out, "edge list output path (src dst weight cone)");

    auto* ratio = app.add_subcommand("ratio", "compute the exact spanning ratio");
    add_input_options(ratio, in);
    add_graph_options(ratio, gs);
    bool full_table = false;
    int jobs = 1;
    std::string ratio_json;
    ratio->add_flag("--full-table", full_table, "include the per-pair stretch table");
    ratio->add_option("--jobs", jobs, "worker threads for the all-pairs sweep")->default_val(1);
    ratio->add_option("--json", ratio_json, "write the stretch report as JSON (- for stdout)");

    auto* certify = app.add_subcommand("certify", "run the numeric certification suite");
    bool cert_all = false;
    std::vector<std::string> cert_names;
    CertifySuiteOptions cert_opt;
    std::string cert_json;
    std::optional<double> grid_step;
    std::optional<double> delta_max;
    certify->add_flag("--all", cert_all, "run every certifier (default when no --name)");
    certify->add_option("--name", cert_names, "certifier id (repeatable)")
        ->check(CLI::IsMember(certifier_names()));
    certify->add_option("--grid", grid_step, "override the main grid step of the named certifiers");
    certify->add_option("--delta-max", delta_max, "cd-close: upper end of the delta grid");
    certify->add_option("--trials", cert_opt.basic_yao.trials, "basic-yao: Monte Carlo trials");
    certify->add_option("--seed", cert_opt.basic_yao.seed, "basic-yao: Monte Carlo seed");
    certify->add_option("--json", cert_json, "write certification results as JSON (- for stdout)");

    auto* bounds = app.add_subcommand("bounds", "print closed-form bound values");
    std::optional<int> bounds_k;
    std::optional<double> bounds_y6_delta;
    bounds->add_option("--k", bounds_k, "cone count to tabulate");
    bounds->add_option("--y6-delta", bounds_y6_delta, "evaluate the six-cone bound at delta");

    auto* svg = app.add_subcommand("export-svg", "render points, edges, cones, witness path");
    add_input_options(svg, in);
    add_graph_options(svg, gs);
    std::optional<int> cones_at;
    bool witness = false, ids = false;
    std::string svg_out = "out.svg";
    svg->add_option("--cones-at", cones_at, "draw the k cone wedges at this vertex");
    svg->add_flag("--witness", witness, "highlight the witness shortest path");
    svg->add_flag("--ids", ids, "label vertices with their ids");
    svg->add_option("--out", svg_out, "SVG output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return run_build(in, gs, build_out);
        if (ratio->parsed()) return run_ratio(in, gs, full_table, jobs, ratio_json);
        if (certify->parsed()) {
            if (grid_step) {
                cert_opt.y5_short.alpha_step = *grid_step;
                cert_opt.fourpoints.gamma_step = *grid_step;
                cert_opt.alpha_beta_max.delta_step = *grid_step;
                cert_opt.cd_close.delta_step = *grid_step;
                cert_opt.cd_close.gamma_step = *grid_step;
                cert_opt.special.gamma_step = *grid_step;
            }
            if (delta_max) cert_opt.cd_close.delta_max = *delta_max;
            return run_certify(cert_names, cert_all, cert_opt, cert_json);
        }
        if (bounds->parsed()) return run_bounds(bounds_k, bounds_y6_delta);
        if (svg->parsed()) return run_export_svg(in, gs, cones_at, witness, ids, svg_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
