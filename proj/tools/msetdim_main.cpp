#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "msetdim/codes.hpp"
#include "msetdim/errors.hpp"
#include "msetdim/io.hpp"
#include "msetdim/products.hpp"
#include "msetdim/reduction.hpp"
#include "msetdim/solver.hpp"
#include "msetdim/twins.hpp"

namespace {

using namespace msetdim;

// exit codes: 0 success, 1 input error, 2 guard breach, 3 internal failure
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kGuardBreach = 2;
constexpr int kInternalError = 3;

struct GraphChoice {
    int path = 0, complete = 0, kinggrid = 0, spider = 0, star = 0;
    std::string input_path;
    std::string format = "edgelist";

    void add_options(CLI::App* cmd) {
        cmd->add_option("--path", path, "path graph with N vertices");
        cmd->add_option("--complete", complete, "complete graph with N vertices");
        cmd->add_option("--kinggrid", kinggrid, "N x N king grid");
        cmd->add_option("--spider", spider, "spider tree with N legs");
        cmd->add_option("--star", star, "star with N leaves");
        cmd->add_option("--input", input_path, "graph file");
        cmd->add_option("--format", format, "input file format")
            ->check(CLI::IsMember({"edgelist", "g6"}));
    }

    struct Loaded {
        Graph graph;
        std::string description;
        std::optional<KingGrid> grid; // set when the source is a king grid
    };

    Loaded load() const {
        int sources = (path > 0) + (complete > 0) + (kinggrid > 0) + (spider > 0) +
                      (star > 0) + !input_path.empty();
        if (sources != 1)
            throw std::invalid_argument("exactly one input source is required "
                                        "(--path/--complete/--kinggrid/--spider/--star/--input)");
        if (path > 0) return {path_graph(path), "path(" + std::to_string(path) + ")", {}};
        if (complete > 0)
            return {complete_graph(complete), "complete(" + std::to_string(complete) + ")", {}};
        if (kinggrid > 0) {
            KingGrid kg(kinggrid);
            return {kg.graph(), "kinggrid(" + std::to_string(kinggrid) + ")", kg};
        }
        if (spider > 0) return {msetdim::spider(spider), "spider(" + std::to_string(spider) + ")", {}};
        if (star > 0) return {msetdim::star(star), "star(" + std::to_string(star) + ")", {}};

        std::ifstream in(input_path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
        std::stringstream buf;
        buf << in.rdbuf();
        Graph g = format == "g6" ? graph6_decode(buf.str()) : parse_edge_list(buf.str());
        return {std::move(g), input_path, {}};
    }
};

struct GuardFlags {
    int max_n = 30;
    std::uint64_t max_subsets = 200000000;
    double budget_s = 900.0;
    int threads = 0; // resolved below

    void add_options(CLI::App* cmd) {
        cmd->add_option("--max-n", max_n, "largest graph the solver will scan")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-subsets", max_subsets, "candidate budget for subset scans")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--budget-s", budget_s, "wall-clock budget in seconds")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "worker threads (default $MSETDIM_THREADS or 1)");
    }

    SolverOptions solver_options() const {
        SolverOptions opts;
        opts.max_n = max_n;
        opts.max_subsets = max_subsets;
        opts.budget_seconds = budget_s;
        opts.threads = threads;
        if (opts.threads <= 0) {
            const char* env = std::getenv("MSETDIM_THREADS");
            opts.threads = env != nullptr ? std::max(1, std::atoi(env)) : 1;
        }
        return opts;
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::string join_ints(std::span<const int> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in vertex list");
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<GridCoord> parse_coord_list(const std::string& text) {
    std::vector<GridCoord> out;
    int i = 0, j = 0, consumed = 0;
    const char* p = text.c_str();
    while (*p != '\0') {
        if (*p == ',') {
            ++p;
            continue;
        }
        if (std::sscanf(p, "(%d,%d)%n", &i, &j, &consumed) != 2)
            throw std::invalid_argument("cannot parse coordinate list near: " + std::string(p));
        out.push_back({i, j});
        p += consumed;
    }
    return out;
}

std::string coords_of(const KingGrid& kg, std::span<const int> flat) {
    std::vector<GridCoord> coords;
    for (int v : flat) coords.push_back(kg.coord(v));
    return format_coords(coords);
}

int cmd_dim(const GraphChoice& source, const GuardFlags& guards, const std::string& out_path) {
    auto loaded = source.load();
    DimResult result = multiset_dimension(loaded.graph, guards.solver_options());

    std::string text;
    text += "command = dim\n";
    text += "input = " + loaded.description + "\n";
    text += "n = " + std::to_string(loaded.graph.vertex_count()) + "\n";
    text += result.to_key_value();
    if (result.finite() && loaded.grid)
        text += "witness_coords = " + coords_of(*loaded.grid, result.witness) + "\n";
    emit(text, out_path);
    return kOk;
}

int cmd_verify(const GraphChoice& source, const GuardFlags& guards, const std::string& set_arg,
               const std::string& coords_arg, const std::string& out_path) {
    auto loaded = source.load();
    if (set_arg.empty() == coords_arg.empty())
        throw std::invalid_argument("exactly one of --set or --coords is required");

    std::vector<int> landmarks;
    if (!set_arg.empty()) {
        landmarks = parse_int_list(set_arg);
    } else {
        if (!loaded.grid)
            throw std::invalid_argument("--coords only applies to --kinggrid inputs");
        landmarks = loaded.grid->flatten(parse_coord_list(coords_arg));
    }
    std::sort(landmarks.begin(), landmarks.end());
    for (std::size_t i = 1; i < landmarks.size(); ++i)
        if (landmarks[i] == landmarks[i - 1])
            throw std::invalid_argument("repeated vertex in landmark set: " +
                                        std::to_string(landmarks[i]));
    for (int v : landmarks)
        if (v < 0 || v >= loaded.graph.vertex_count())
            throw std::invalid_argument("landmark out of range: " + std::to_string(v));
    (void)guards;

    DistanceMatrix dm = all_pairs_distances(loaded.graph);
    bool msr = is_multiset_resolving(dm, landmarks);
    bool idc = is_id_coloring(dm, landmarks);
    bool res = is_resolving(dm, landmarks);

    std::string text;
    text += "command = verify\n";
    text += "input = " + loaded.description + "\n";
    text += "n = " + std::to_string(loaded.graph.vertex_count()) + "\n";
    text += "set = " + join_ints(landmarks) + "\n";
    text += std::string("multiset_resolving = ") + (msr ? "true" : "false") + "\n";
    text += std::string("id_coloring = ") + (idc ? "true" : "false") + "\n";
    text += std::string("resolving = ") + (res ? "true" : "false") + "\n";
    text += std::string("agree = ") + (msr == idc ? "true" : "false") + "\n";
    emit(text, out_path);
    return msr == idc ? kOk : kInternalError;
}

int cmd_kinggrid(int side, bool want_codes, bool want_witness, bool want_verify,
                 const std::string& out_path) {
    if (side < 1) throw std::invalid_argument("side must be positive");
    std::string text;
    text += "command = kinggrid\n";
    text += "side = " + std::to_string(side) + "\n";

    auto witness = king_grid_witness(side);
    if (want_witness || want_verify || want_codes) {
        if (!witness) {
            text += "witness = infinite\n";
            if (want_codes)
                throw std::invalid_argument("no landmark set exists for side " +
                                            std::to_string(side) + "; nothing to print");
        } else {
            KingGrid kg(side);
            auto flat = kg.flatten(*witness);
            text += "witness = " + format_coords(*witness) + "\n";
            text += "witness_flat = " + join_ints(flat) + "\n";
            if (want_verify) {
                DistanceMatrix dm = all_pairs_distances(kg.graph());
                text += std::string("verified = ") +
                        (is_multiset_resolving(dm, flat) ? "true" : "false") + "\n";
            }
            if (want_codes) {
                text += "\n";
                text += code_grid_text(kg, flat);
            }
        }
    }
    emit(text, out_path);
    return kOk;
}

int cmd_reduce(const std::string& cnf_path, bool want_verify, const std::string& emit_format,
               const GuardFlags& guards, const std::string& out_path) {
    std::ifstream in(cnf_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + cnf_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CnfFormula f = parse_dimacs(buf.str());
    ReductionGraph rg = build_reduction(f);

    std::string text;
    text += "command = reduce\n";
    text += "input = " + cnf_path + "\n";
    text += "variables = " + std::to_string(f.variable_count) + "\n";
    text += "clauses = " + std::to_string(f.clause_count()) + "\n";
    text += "n = " + std::to_string(rg.graph.vertex_count()) + "\n";
    text += "target_k = " + std::to_string(target_k(f)) + "\n";
    text += std::string("connected = ") + (is_connected(rg.graph) ? "true" : "false") + "\n";
    text += "twin_pairs = " + std::to_string(twin_classes(rg.graph).class_count()) + "\n";

    if (!emit_format.empty()) {
        if (out_path.empty())
            throw std::invalid_argument("--emit requires --out to name the graph file");
        std::string graph_text =
            emit_format == "g6" ? graph6_encode(rg.graph) + "\n" : write_edge_list(rg.graph);
        std::ofstream gout(out_path, std::ios::binary);
        if (!gout) throw std::invalid_argument("cannot open output file: " + out_path);
        gout << graph_text;
        std::ofstream rout(out_path + ".roles", std::ios::binary);
        if (!rout) throw std::invalid_argument("cannot open output file: " + out_path + ".roles");
        rout << rg.role_map_text();
        text += "graph_file = " + out_path + "\n";
        text += "roles_file = " + out_path + ".roles\n";
    }
    if (want_verify) text += verify_reduction(f, guards.solver_options()).to_key_value();

    emit(text, emit_format.empty() ? out_path : "");
    return kOk;
}

int cmd_classify(const GraphChoice& source, int with_k, const std::string& out_path) {
    auto loaded = source.load();
    StrongCompleteClass verdict = classify_strong_with_complete(loaded.graph, with_k);

    std::string text;
    text += "command = classify\n";
    text += "input = " + loaded.description + "\n";
    text += "g_n = " + std::to_string(loaded.graph.vertex_count()) + "\n";
    text += "with_k = " + std::to_string(with_k) + "\n";
    text += std::string("classification = ") + (verdict.finite ? "finite" : "infinite") + "\n";
    if (verdict.finite) text += "value = " + std::to_string(verdict.value) + "\n";
    emit(text, out_path);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiset-dimension toolkit"};
    app.require_subcommand(1);

    GraphChoice dim_source, verify_source, classify_source;
    GuardFlags dim_guards, verify_guards, reduce_guards;
    std::string dim_out, verify_out, king_out, reduce_out, classify_out;
    std::string verify_set, verify_coords;
    int king_side = 0;
    bool king_codes = false, king_witness = false, king_verify = false;
    std::string reduce_path, reduce_emit;
    bool reduce_verify = false;
    int classify_k = 2;

    CLI::App* dim = app.add_subcommand("dim", "exact multiset dimension of a graph");
    dim_source.add_options(dim);
    dim_guards.add_options(dim);
    dim->add_option("--out", dim_out, "write the report to a file");

    CLI::App* verify = app.add_subcommand("verify", "check a landmark set three ways");
    verify_source.add_options(verify);
    verify_guards.add_options(verify);
    verify->add_option("--set", verify_set, "comma-separated vertex indices");
    verify->add_option("--coords", verify_coords, "grid coordinates like (1,1),(2,1)");
    verify->add_option("--out", verify_out, "write the report to a file");

    CLI::App* king = app.add_subcommand("kinggrid", "king-grid witnesses and code grids");
    king->add_option("side", king_side, "grid side length")->required();
    king->add_flag("--codes", king_codes, "print the per-vertex code grid");
    king->add_flag("--witness", king_witness, "print the known landmark set");
    king->add_flag("--verify", king_verify, "verify the landmark set");
    king->add_option("--out", king_out, "write the report to a file");

    CLI::App* reduce = app.add_subcommand("reduce", "build the satisfiability gadget graph");
    reduce->add_option("cnf", reduce_path, "DIMACS CNF file")->required();
    reduce->add_flag("--verify", reduce_verify, "run both directions of the equivalence check");
    reduce->add_option("--emit", reduce_emit, "write the graph in this format")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    reduce_guards.add_options(reduce);
    reduce->add_option("--out", reduce_out, "graph file path (role map goes to <out>.roles)");

    CLI::App* classify = app.add_subcommand("classify", "strong product with a complete factor");
    classify_source.add_options(classify);
    classify->add_option("--with-k", classify_k, "size of the complete factor")->required();
    classify->add_option("--out", classify_out, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (dim->parsed()) return cmd_dim(dim_source, dim_guards, dim_out);
        if (verify->parsed())
            return cmd_verify(verify_source, verify_guards, verify_set, verify_coords, verify_out);
        if (king->parsed())
            return cmd_kinggrid(king_side, king_codes, king_witness, king_verify, king_out);
        if (reduce->parsed())
            return cmd_reduce(reduce_path, reduce_verify, reduce_emit, reduce_guards, reduce_out);
        if (classify->parsed()) return cmd_classify(classify_source, classify_k, classify_out);
        return kInputError;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kGuardBreach;
    } catch (const msetdim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}
