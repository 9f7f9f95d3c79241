// Command line for the Lewis-weight / effective-resistance toolkit:
// generation, weight computation, approximation certificates, tree
// polarization, thin trees and the experiment tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lwg/bounds.hpp"
#include "lwg/experiments.hpp"
#include "lwg/generators.hpp"
#include "lwg/graph.hpp"
#include "lwg/lewis.hpp"
#include "lwg/oracle.hpp"
#include "lwg/stt.hpp"
#include "lwg/trees.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNonConverged = 2;

struct CommonArgs {
    std::string graph_file;
    std::string family;
    std::string params_text;
    double eps = 0.01;
    std::uint64_t seed = 1;
    int runs = 100;
    bool lcc = true;
    std::string out;
    std::string format = "json";
    bool quiet = false;
    double c_iters = 4.0;
    int jobs = 2;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_eps = true) {
    cmd->add_option("--graph", args.graph_file, "edge-list file (one 'u v' per line)");
    cmd->add_option("--family", args.family, "generator family name");
    cmd->add_option("--params", args.params_text, "k=v,... generator parameters");
    if (with_eps) cmd->add_option("--eps", args.eps, "Lewis weight accuracy")->default_val(0.01);
    cmd->add_option("--seed", args.seed, "random seed")->default_val(1);
    cmd->add_option("--runs", args.runs, "seeds per random family")->default_val(100);
    cmd->add_flag("--lcc,!--no-lcc", args.lcc, "take the largest connected component")
        ->default_val(true);
    cmd->add_option("--out", args.out, "output path (stdout when absent)");
    cmd->add_option("--format", args.format, "json|csv")->default_val("json");
    cmd->add_flag("--quiet", args.quiet, "suppress progress on stderr");
    cmd->add_option("--c-iters", args.c_iters, "constant in the Lewis iteration budget")
        ->default_val(4.0);
    cmd->add_option("--jobs", args.jobs, "worker threads for sweeps")->default_val(2);
}

std::map<std::string, double> parse_params(const std::string& text) {
    std::map<std::string, double> params;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--params expects k=v pairs, got '" + item + "'");
        params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return params;
}

lwg::Graph load_graph(const CommonArgs& args) {
    lwg::BuildOptions opts{true, args.lcc};
    if (!args.graph_file.empty()) return lwg::read_edge_list_file(args.graph_file, opts);
    if (!args.family.empty())
        return lwg::generate(args.family, parse_params(args.params_text), args.seed);
    throw std::invalid_argument("either --graph or --family is required");
}

void emit(const CommonArgs& args, const std::string& text) {
    if (args.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + args.out);
    out << text;
}

std::string vector_csv(const lwg::Graph& g, const lwg::Vector& a, const lwg::Vector& b,
                       const char* col_a, const char* col_b) {
    std::ostringstream out;
    out.precision(17);
    out << "edge,u,v," << col_a << "," << col_b << "\n";
    for (int l = 0; l < g.num_edges(); ++l)
        out << l << ',' << g.edge(l).u << ',' << g.edge(l).v << ',' << a[l] << ',' << b[l]
            << "\n";
    return out.str();
}

int cmd_gen(const CommonArgs& args) {
    lwg::Graph g = load_graph(args);
    std::ostringstream out;
    lwg::write_edge_list(out, g);
    emit(args, out.str());
    return kExitOk;
}

int cmd_lewis(const CommonArgs& args) {
    lwg::Graph g = load_graph(args);
    lwg::LewisOptions opts;
    opts.iter_constant = args.c_iters;
    lwg::LewisResult res = lwg::lewis_weights(g, args.eps, opts);
    if (args.format == "csv") {
        emit(args, vector_csv(g, res.w_inf, res.g_lw, "w_inf", "g_lw"));
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = g.num_vertices();
        j["m"] = g.num_edges();
        j["eps"] = args.eps;
        j["iterations"] = res.iterations;
        j["residual"] = res.residual;
        j["converged"] = res.converged;
        j["floor_hits"] = res.floor_hits;
        j["w_inf"] = std::vector<double>(res.w_inf.begin(), res.w_inf.end());
        j["g_lw"] = std::vector<double>(res.g_lw.begin(), res.g_lw.end());
        emit(args, j.dump(2));
    }
    return res.converged ? kExitOk : kExitNonConverged;
}

int cmd_bounds(const CommonArgs& args) {
    lwg::Graph g = load_graph(args);
    lwg::LewisOptions opts;
    opts.iter_constant = args.c_iters;
    lwg::BoundsReport rep;
    try {
        rep = lwg::bounds_report(g, args.eps, opts);
    } catch (const std::runtime_error& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return kExitNonConverged;
    }
    emit(args, args.format == "csv" ? lwg::bounds_report_csv(rep)
                                    : lwg::bounds_report_json(rep));
    return kExitOk;
}

int cmd_solve(const CommonArgs& args, double tol, int max_iters) {
    lwg::Graph g = load_graph(args);
    lwg::ErmpOptions opts;
    opts.tol = tol;
    opts.max_iters = max_iters;
    lwg::ErmpSolution sol = lwg::ermp_solve(g, opts);
    ordered_json j;
    j["schema"] = 1;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["tol"] = tol;
    j["k_star"] = sol.k_star;
    j["duality_gap"] = sol.duality_gap;
    j["iterations"] = sol.iterations;
    j["converged"] = sol.converged;
    j["g_star"] = std::vector<double>(sol.g_star.begin(), sol.g_star.end());
    emit(args, j.dump(2));
    return sol.converged ? kExitOk : kExitNonConverged;
}

int cmd_tree(const CommonArgs& args) {
    lwg::Graph g = load_graph(args);
    lwg::TreeInstance inst = lwg::make_tree_instance(g);
    if (args.format == "csv") {
        lwg::Vector c(g.num_edges());
        for (int l = 0; l < g.num_edges(); ++l)
            c[l] = static_cast<double>(inst.congestion[l]);
        emit(args, vector_csv(g, c, inst.g_star, "congestion", "g_star"));
        return kExitOk;
    }
    ordered_json j;
    j["schema"] = 1;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["alpha"] = inst.alpha;
    j["k_star"] = inst.k_star;
    j["root"] = inst.root;
    j["congestions"] = inst.congestion;
    j["g_star"] = std::vector<double>(inst.g_star.begin(), inst.g_star.end());
    j["e_less"] = inst.partition.e_less;
    j["e_greater"] = inst.partition.e_greater;
    emit(args, j.dump(2));
    return kExitOk;
}

int cmd_polarize(const CommonArgs& args) {
    lwg::Graph g = load_graph(args);
    lwg::Tree t(g);
    auto res = lwg::polarize(t);
    std::ostringstream out;
    for (const auto& step : res.steps) {
        ordered_json j;
        j["step"] = step.index;
        j["lt"] = step.lt;
        j["edge"] = step.edge;
        j["alpha_before"] = step.alpha_before;
        j["alpha_after"] = step.alpha_after;
        out << j.dump() << "\n";
    }
    ordered_json fin;
    fin["final"] = true;
    fin["is_bowtie"] = res.is_bowtie;
    fin["t"] = res.bowtie_t;
    fin["p"] = res.bowtie_p;
    fin["s"] = res.bowtie_s;
    fin["alpha"] = lwg::tree_alpha(res.final_tree);
    fin["steps"] = res.steps.size();
    out << fin.dump() << "\n";
    emit(args, out.str());
    return kExitOk;
}

int cmd_stt(const CommonArgs& args) {
    lwg::Graph g = load_graph(args);
    lwg::LewisOptions opts;
    opts.iter_constant = args.c_iters;
    lwg::ThinTreeReport rep = lwg::lw_thin_tree(g, args.eps, opts);
    emit(args, lwg::thin_tree_report_json(rep));
    return kExitOk;
}

int cmd_design_gap(const CommonArgs& args, int n) {
    auto demo = lwg::design_gap_demo(n);
    ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["trace_at_lw"] = demo.trace_at_lw;
    j["trace_at_inverse_law"] = demo.trace_at_inverse_law;
    j["ratio"] = demo.ratio;
    j["lw_is_ones"] = demo.lw_is_ones;
    emit(args, j.dump(2));
    return kExitOk;
}

ordered_json family_json(const lwg::FamilyResult& r) {
    ordered_json j;
    j["family"] = r.family;
    j["params"] = r.params_str;
    j["stat"] = r.stat;
    j["n"] = r.n;
    j["m"] = r.m;
    j["runs"] = r.runs;
    j["max"] = r.max_value;
    j["mean"] = r.mean;
    j["std"] = r.stddev;
    return j;
}

std::string rows_csv(const std::vector<lwg::FamilyResult>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "family,params,stat,n,m,runs,max,mean,std\n";
    for (const auto& r : rows)
        out << r.family << ",\"" << r.params_str << "\"," << r.stat << ',' << r.n << ',' << r.m
            << ',' << r.runs << ',' << r.max_value << ',' << r.mean << ',' << r.stddev << "\n";
    return out.str();
}

int cmd_table1(const CommonArgs& args, const std::string& only) {
    auto rows = lwg::table1_rows(args.runs, args.eps, args.jobs);
    std::vector<lwg::FamilyResult> results;
    for (auto& [name, cfg] : rows) {
        if (!only.empty() && name != only) continue;
        cfg.seed0 = args.seed;
        cfg.iter_constant = args.c_iters;
        std::string label = name;
        if (!args.quiet)
            cfg.progress = [label](int done, int total) {
                std::cerr << "\r" << label << ": " << done << "/" << total << std::flush;
            };
        auto r = lwg::run_family(cfg);
        r.family = name;
        results.push_back(std::move(r));
        if (!args.quiet) std::cerr << "\n";
    }
    if (results.empty()) throw std::invalid_argument("no table row named '" + only + "'");
    if (args.format == "csv") {
        emit(args, rows_csv(results));
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["eps"] = args.eps;
        j["runs"] = args.runs;
        j["rows"] = ordered_json::array();
        for (const auto& r : results) j["rows"].push_back(family_json(r));
        emit(args, j.dump(2));
    }
    return kExitOk;
}

std::vector<int> parse_range(const std::string& text) {
    // "a..b", "a..b..step" or "a,b,c"
    std::vector<int> values;
    if (text.find("..") != std::string::npos) {
        auto first = text.find("..");
        const int a = std::stoi(text.substr(0, first));
        auto rest = text.substr(first + 2);
        auto second = rest.find("..");
        int b = 0, step = 0;
        if (second == std::string::npos) {
            b = std::stoi(rest);
            step = std::max(1, (b - a) / 7);
        } else {
            b = std::stoi(rest.substr(0, second));
            step = std::stoi(rest.substr(second + 2));
        }
        for (int v = a; v < b; v += step) values.push_back(v);
        values.push_back(b);
        return values;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(std::stoi(item));
    if (values.empty()) throw std::invalid_argument("empty range '" + text + "'");
    return values;
}

int cmd_sweep(const CommonArgs& args, const std::string& d_range, const std::string& n_range) {
    if (args.family != "regular" && args.family != "lollipop")
        throw std::invalid_argument("sweep supports --family regular|lollipop");
    std::vector<lwg::FamilyResult> results;
    const auto ns = parse_range(n_range);
    std::vector<int> ds =
        args.family == "regular" ? parse_range(d_range) : std::vector<int>{0};
    for (int d : ds)
        for (int n : ns) {
            lwg::ExperimentConfig cfg;
            cfg.eps = args.eps;
            cfg.runs = args.runs;
            cfg.seed0 = args.seed;
            cfg.jobs = args.jobs;
            cfg.iter_constant = args.c_iters;
            if (args.family == "regular") {
                if ((d * n) % 2) continue;
                cfg.family = "regular";
                cfg.params = {{"d", static_cast<double>(d)}, {"n", static_cast<double>(n)}};
            } else {
                cfg.family = "lollipop";
                cfg.params = {{"k", static_cast<double>(n)}, {"p", static_cast<double>(n)}};
            }
            if (!args.quiet)
                cfg.progress = [&cfg, d, n](int done, int total) {
                    std::cerr << "\r" << cfg.family << " n=" << n
                              << (d ? " d=" + std::to_string(d) : std::string{}) << ": " << done
                              << "/" << total << std::flush;
                };
            results.push_back(lwg::run_family(cfg));
            if (!args.quiet) std::cerr << "\n";
        }
    if (args.format == "csv") {
        emit(args, rows_csv(results));
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["eps"] = args.eps;
        j["rows"] = ordered_json::array();
        for (const auto& r : results) j["rows"].push_back(family_json(r));
        emit(args, j.dump(2));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lewis weights, effective resistance certificates and tree polarization"};
    app.require_subcommand(1);

    CommonArgs args;
    double solve_tol = 1e-6;
    int solve_iters = 50000;
    int design_n = 100;
    std::string table_only;
    std::string d_range = "3..6..1";
    std::string n_range = "50..400";

    auto* gen = app.add_subcommand("gen", "generate or canonicalize a graph");
    add_common(gen, args, false);
    auto* lewis = app.add_subcommand("lewis", "l-infinity Lewis weights");
    add_common(lewis, args);
    auto* bounds = app.add_subcommand("bounds", "approximation-ratio certificates");
    add_common(bounds, args);
    auto* solve = app.add_subcommand("solve", "exact ERMP oracle (small graphs)");
    add_common(solve, args);
    solve->add_option("--tol", solve_tol, "relative duality-gap tolerance")->default_val(1e-6);
    solve->add_option("--max-iters", solve_iters)->default_val(50000);
    auto* tree = app.add_subcommand("tree", "exact tree quantities");
    add_common(tree, args, false);
    auto* polarize = app.add_subcommand("polarize", "polarization trajectory (JSON lines)");
    add_common(polarize, args, false);
    auto* stt = app.add_subcommand("stt", "Lewis-weighted spectrally-thin tree");
    add_common(stt, args);
    auto* design = app.add_subcommand("design-gap", "A-vs-D separation demo");
    add_common(design, args, false);
    design->add_option("--n", design_n, "dimension")->default_val(100);
    auto* table1 = app.add_subcommand("table1", "reproduce the elementary-graph table");
    add_common(table1, args);
    table1->add_option("--only", table_only, "restrict to one named row");
    auto* sweep = app.add_subcommand("sweep", "asymptotic curves for regular/lollipop");
    add_common(sweep, args);
    sweep->add_option("--d", d_range, "degree range a..b[..step]");
    sweep->add_option("--n", n_range, "size range a..b[..step] or list");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(args);
        if (lewis->parsed()) return cmd_lewis(args);
        if (bounds->parsed()) return cmd_bounds(args);
        if (solve->parsed()) return cmd_solve(args, solve_tol, solve_iters);
        if (tree->parsed()) return cmd_tree(args);
        if (polarize->parsed()) return cmd_polarize(args);
        if (stt->parsed()) return cmd_stt(args);
        if (design->parsed()) return cmd_design_gap(args, design_n);
        if (table1->parsed()) return cmd_table1(args, table_only);
        if (sweep->parsed()) return cmd_sweep(args, d_range, n_range);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonConverged;
    }
    return kExitInput;
}
