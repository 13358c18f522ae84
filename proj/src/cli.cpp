#include "okp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "okp/bounds.hpp"
#include "okp/circulant.hpp"
#include "okp/constructions.hpp"
#include "okp/io.hpp"
#include "okp/search.hpp"

namespace okp::cli {

namespace {

struct CommandError {
    int exit_code;
    std::string code;
    std::string message;
    json detail = nullptr;
};

void print_error(std::ostream& err, const CommandError& e) {
    json record = {{"code", e.code}, {"message", e.message}};
    if (!e.detail.is_null()) record["detail"] = e.detail;
    err << json{{"error", record}}.dump() << '\n';
}

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw CommandError{io_error, "io_error", "cannot read " + path};
    buf << in.rdbuf();
    return buf.str();
}

ConvexGraph load_graph(const std::string& path) {
    return parse_graph(read_text(path));
}

Chord parse_chord(const std::vector<int>& v, const char* name) {
    if (v.size() != 2) throw CommandError{invalid_arguments, "invalid_arguments", std::string(name) + " needs two vertices"};
    return Chord(v[0], v[1]);
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv(kNodeBudgetEnv)) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultNodeBudget;
}

void dump(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

json number(double v, int digits) {
    if (std::isnan(v)) return nullptr;
    return round_sig(v, digits);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Outer k-planar graph toolkit: crossings, constructions, bounds, search, circulant max-cut", "okp"};
    app.require_subcommand(1);
    app.fallthrough();
    int precision = 6;
    app.add_option("--precision", precision, "Significant digits for real-valued output")
        ->check(CLI::Range(1, 17));

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the edge-count bounds for (n, k)");
    int b_n = 0, b_k = 0;
    std::string b_variant, b_format = "json", b_flavor;
    bool b_bipartite = false, b_strict = false;
    int b_kmin = 176;
    double b_m = -1;
    bounds_cmd->add_option("--n", b_n, "Vertex count")->required()->check(CLI::Range(3, 1 << 30));
    bounds_cmd->add_option("--k", b_k, "Crossings per edge")->check(CLI::NonNegativeNumber);
    bounds_cmd->add_option("--variant", b_variant, "lazy|common|local|direct|small_k");
    bounds_cmd->add_flag("--bipartite", b_bipartite, "Use the bipartite variant family");
    bounds_cmd->add_option("--format", b_format)->check(CLI::IsMember({"json", "csv"}));
    bounds_cmd->add_option("--k-min", b_kmin, "Threshold for 'sufficiently large k'")->check(CLI::NonNegativeNumber);
    bounds_cmd->add_flag("--strict-statement", b_strict, "Bipartite small-k with -(2k+5)");
    bounds_cmd->add_option("--flavor", b_flavor, "Crossing lemma: outer|outer_bipartite|multigraph_m2|multigraph_m2_bipartite");
    bounds_cmd->add_option("--m", b_m, "Edge count for --flavor")->check(CLI::NonNegativeNumber);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Emit a construction as graph JSON");
    construct_cmd->require_subcommand(1);
    int c_x = 0, c_blocks = 1, c_l = 1, c_n = 0;
    auto* kx_cmd = construct_cmd->add_subcommand("kx-chain", "K_x | K_x | ...");
    kx_cmd->add_option("--x", c_x)->required()->check(CLI::Range(3, 1000));
    kx_cmd->add_option("--blocks", c_blocks)->check(CLI::Range(1, 100000));
    auto* kxx_cmd = construct_cmd->add_subcommand("kxx-alternating", "Alternating K_{x,x}");
    kxx_cmd->add_option("--x", c_x)->required()->check(CLI::Range(1, 1000));
    auto* kxxc_cmd = construct_cmd->add_subcommand("kxx-chain", "Chain of alternating K_{x,x}");
    kxxc_cmd->add_option("--x", c_x)->required()->check(CLI::Range(2, 1000));
    kxxc_cmd->add_option("--l", c_l, "Number of copies")->check(CLI::Range(1, 100000));
    auto* complete_cmd = construct_cmd->add_subcommand("complete", "Complete convex graph");
    complete_cmd->add_option("--n", c_n)->required()->check(CLI::Range(2, 2000));
    auto* cycle_cmd = construct_cmd->add_subcommand("cycle", "Polygon cycle");
    cycle_cmd->add_option("--n", c_n)->required()->check(CLI::Range(3, 100000));
    std::string g1_path, g2_path, oc_path;
    std::vector<int> e1_v, e2_v;
    auto* concat_cmd = construct_cmd->add_subcommand("concat", "Concatenate two graphs on hull edges");
    concat_cmd->add_option("--g1", g1_path)->required();
    concat_cmd->add_option("--e1", e1_v)->required()->expected(2);
    concat_cmd->add_option("--g2", g2_path)->required();
    concat_cmd->add_option("--e2", e2_v)->required()->expected(2);
    auto* oc_cmd = construct_cmd->add_subcommand("outercopy", "Two-page outercopy multigraph");
    oc_cmd->add_option("--graph", oc_path)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Report crossings, k-planarity and degeneracy of a graph");
    std::string v_path;
    int v_k = -1;
    verify_cmd->add_option("file", v_path, "Graph JSON file, - for stdin")->required();
    verify_cmd->add_option("--k", v_k)->check(CLI::NonNegativeNumber);

    // search
    auto* search_cmd = app.add_subcommand("search", "Exact maximum edge count by branch-and-bound");
    int s_n = 0, s_k = 0, s_workers = 1;
    std::string s_mode = "general", s_warm;
    std::uint64_t s_budget = default_budget();
    bool s_no_bound = false;
    search_cmd->add_option("--n", s_n)->required()->check(CLI::Range(3, kMaxSearchVertices));
    search_cmd->add_option("--k", s_k)->required()->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--bipartite", s_mode, "free|alternating|consecutive")
        ->check(CLI::IsMember({"general", "free", "alternating", "consecutive"}));
    search_cmd->add_option("--budget-nodes", s_budget)->check(CLI::PositiveNumber);
    search_cmd->add_option("--workers", s_workers)->check(CLI::Range(1, 256));
    search_cmd->add_option("--warm-start", s_warm, "Graph JSON used as initial incumbent");
    search_cmd->add_flag("--no-bound-prune", s_no_bound, "Do not prune with closed-form upper bounds");

    // circulant
    auto* circ_cmd = app.add_subcommand("circulant", "Max-cut quantities of C_n^{1..r}");
    int ci_n = 0, ci_r = 0, ci_workers = 1;
    std::string ci_method = "exact";
    circ_cmd->add_option("--n", ci_n)->required()->check(CLI::Range(3, 1 << 24));
    circ_cmd->add_option("--r", ci_r)->required()->check(CLI::Range(1, 1 << 23));
    circ_cmd->add_option("--method", ci_method)->check(CLI::IsMember({"exact", "mohar", "lemma", "lemma-refined"}));
    circ_cmd->add_option("--workers", ci_workers)->check(CLI::Range(1, 256));

    // xorsum
    auto* xor_cmd = app.add_subcommand("xorsum", "Double XOR sum of a binary string");
    std::string x_bits;
    int x_r = 1;
    bool x_cyclic = false, x_bounded = false;
    xor_cmd->add_option("--bits", x_bits)->required();
    xor_cmd->add_option("--r", x_r)->required()->check(CLI::PositiveNumber);
    auto* cyc_flag = xor_cmd->add_flag("--cyclic", x_cyclic);
    auto* bnd_flag = xor_cmd->add_flag("--bounded", x_bounded);
    cyc_flag->excludes(bnd_flag);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV of every bound over an (n, k) grid");
    int sw_nmin = 10, sw_nmax = 100, sw_nstep = 10, sw_kmin = 0, sw_kmax = 10, sw_kthreshold = 176;
    sweep_cmd->add_option("--n-min", sw_nmin)->check(CLI::Range(3, 1 << 24));
    sweep_cmd->add_option("--n-max", sw_nmax)->check(CLI::Range(3, 1 << 24));
    sweep_cmd->add_option("--n-step", sw_nstep)->check(CLI::Range(1, 1 << 24));
    sweep_cmd->add_option("--k-min", sw_kmin)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--k-max", sw_kmax)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--large-k-threshold", sw_kthreshold)->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        print_error(err, {invalid_arguments, "invalid_arguments", e.what()});
        return invalid_arguments;
    }

    try {
        if (*bounds_cmd) {
            BoundOptions opts;
            opts.k_min = b_kmin;
            opts.strict_statement = b_strict;
            if (!b_flavor.empty()) {
                static const std::vector<std::pair<std::string, CrossingFlavor>> flavors = {
                    {"outer", CrossingFlavor::outer},
                    {"outer_bipartite", CrossingFlavor::outer_bipartite},
                    {"multigraph_m2", CrossingFlavor::multigraph_m2},
                    {"multigraph_m2_bipartite", CrossingFlavor::multigraph_m2_bipartite}};
                auto it = std::find_if(flavors.begin(), flavors.end(), [&](auto& f) { return f.first == b_flavor; });
                if (it == flavors.end() || b_m < 0) {
                    throw CommandError{invalid_arguments, "invalid_arguments", "--flavor needs a known flavor and --m"};
                }
                auto v = crossing_lemma_lower(b_n, b_m, it->second);
                json doc = {{"name", "crossing_lemma." + b_flavor}, {"n", b_n}, {"m", b_m},
                            {"value", number(v.value, precision)}, {"validity", std::string(to_string(v.validity))},
                            {"valid_when", v.valid_when}};
                dump(out, doc);
                return v.applicable() ? ok : not_applicable;
            }
            BoundReport report = bound_report(b_n, b_k, opts);
            if (!b_variant.empty()) {
                std::string name = (b_bipartite ? "bipartite." : "general.") + b_variant;
                const BoundEntry* entry = report.find(name);
                if (!entry || entry->kind != BoundKind::upper) {
                    throw CommandError{invalid_arguments, "invalid_arguments", "unknown variant " + b_variant};
                }
                report.entries = {*entry};
            }
            if (b_format == "csv") {
                out << bound_report_to_csv(report, precision);
            } else {
                json doc = bound_report_to_json(report, precision);
                if (b_variant.empty()) {
                    auto eps = epsilon_for(b_k);
                    doc["epsilon"] = eps ? number(*eps, precision) : json(nullptr);
                    auto deg = maxmindeg_bound(b_k, opts);
                    doc["maxmindeg"] = {{"general", number(deg.general, precision)},
                                        {"bipartite", number(deg.bipartite, precision)},
                                        {"bipartite_valid", deg.bipartite_valid}};
                    doc["coloring_bound"] = coloring_bound(b_k);
                    doc["consistent"] = report.consistent();
                }
                dump(out, doc);
            }
            if (!b_variant.empty() && report.entries.front().validity == Validity::not_applicable) {
                return not_applicable;
            }
            return ok;
        }

        if (*construct_cmd) {
            if (*oc_cmd) {
                dump(out, outercopy_to_json(outercopy(load_graph(oc_path))));
                return ok;
            }
            ConvexGraph g;
            if (*kx_cmd) g = kx_chain(c_x, c_blocks);
            else if (*kxx_cmd) g = kxx_alternating(c_x);
            else if (*kxxc_cmd) g = kxx_chain(c_x, c_l);
            else if (*complete_cmd) g = ConvexGraph::complete(c_n);
            else if (*cycle_cmd) g = ConvexGraph::cycle(c_n);
            else if (*concat_cmd)
                g = concatenate(load_graph(g1_path), parse_chord(e1_v, "--e1"), load_graph(g2_path),
                                parse_chord(e2_v, "--e2"));
            dump(out, graph_to_json(g));
            return ok;
        }

        if (*verify_cmd) {
            ConvexGraph g = load_graph(v_path);
            auto counts = crossing_counts(g);
            json per_edge = json::array();
            for (std::size_t i = 0; i < counts.size(); ++i) {
                per_edge.push_back({g.edges()[i].a, g.edges()[i].b, counts[i]});
            }
            int max_cr = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
            auto degen = degeneracy_order(g);
            json doc;
            doc["n"] = g.n();
            doc["edge_count"] = g.edge_count();
            doc["crossing_counts"] = std::move(per_edge);
            doc["crossing_pairs"] = crossing_pair_count(g);
            doc["max_crossing"] = max_cr;
            if (v_k >= 0) {
                doc["k"] = v_k;
                doc["k_planar"] = max_cr <= v_k;
            }
            doc["hull_edges"] = hull_edges(g).size();
            doc["bipartite"] = bipartition(g).has_value();
            doc["coloring_proper"] = g.coloring() ? json(g.coloring_is_proper()) : json(nullptr);
            doc["degeneracy"] = degen.degeneracy;
            doc["greedy_colors"] = greedy_color(g).count;
            dump(out, doc);
            return ok;
        }

        if (*search_cmd) {
            SearchOptions opts;
            opts.node_budget = s_budget;
            opts.workers = s_workers;
            opts.use_bound_prune = !s_no_bound;
            if (!s_warm.empty()) opts.warm_start = load_graph(s_warm);
            auto mode = parse_search_mode(s_mode);
            try {
                dump(out, search_result_to_json(max_edges(s_n, s_k, *mode, opts)));
            } catch (const SearchBudgetExceeded& e) {
                throw CommandError{budget_exceeded, "budget_exceeded", e.what(),
                                   search_result_to_json(e.incumbent())};
            }
            return ok;
        }

        if (*circ_cmd) {
            CirculantSpec spec(ci_n, ci_r);
            json doc = {{"n", ci_n}, {"r", ci_r}, {"method", ci_method}};
            if (ci_method == "exact") {
                Cut cut;
                try {
                    cut = exact_maxcut(spec, ci_workers);
                } catch (const BudgetError& e) {
                    throw CommandError{budget_exceeded, "budget_exceeded", e.what()};
                }
                std::string sides;
                for (auto s : cut.sides) sides.push_back(static_cast<char>('0' + s));
                doc["value"] = cut.value;
                doc["sides"] = sides;
            } else if (ci_method == "mohar") {
                doc["lambda_max"] = number(laplacian_lambda_max(spec), precision);
                doc["value"] = number(mohar_bound(spec), precision);
            } else {
                doc["value"] = number(lemma_maxcut_bound(spec, ci_method == "lemma-refined"), precision);
            }
            dump(out, doc);
            return ok;
        }

        if (*xor_cmd) {
            auto bits = parse_bits(x_bits);
            XorMode mode = x_bounded ? XorMode::bounded : XorMode::cyclic;
            dump(out, {{"bits", x_bits},
                       {"r", x_r},
                       {"mode", x_bounded ? "bounded" : "cyclic"},
                       {"value", xor_sum(bits, x_r, mode)}});
            return ok;
        }

        if (*sweep_cmd) {
            if (sw_nmax < sw_nmin || sw_kmax < sw_kmin) {
                throw CommandError{invalid_arguments, "invalid_arguments", "empty sweep range"};
            }
            BoundOptions opts;
            opts.k_min = sw_kthreshold;
            out << "n,k,bound_name,value,valid\n";
            for (int n = sw_nmin; n <= sw_nmax; n += sw_nstep) {
                for (int k = sw_kmin; k <= sw_kmax; ++k) {
                    for (const auto& e : bound_report(n, k, opts).entries) {
                        out << n << ',' << k << ',' << e.name << ',' << format_sig(e.value, precision) << ','
                            << to_string(e.validity) << '\n';
                    }
                }
            }
            return ok;
        }
    } catch (const CommandError& e) {
        print_error(err, e);
        return e.exit_code;
    } catch (const json::exception& e) {
        print_error(err, {malformed_json, "malformed_json", e.what()});
        return malformed_json;
    } catch (const InputError& e) {
        print_error(err, {invalid_input, "invalid_input", e.what()});
        return invalid_input;
    } catch (const BudgetError& e) {
        print_error(err, {budget_exceeded, "budget_exceeded", e.what()});
        return budget_exceeded;
    }
    print_error(err, {invalid_arguments, "invalid_arguments", "no subcommand"});
    return invalid_arguments;
}

}  // namespace okp::cli
