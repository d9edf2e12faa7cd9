// Copyright 2026 The arhub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, verify, generate, reduce, bench.
// Exit codes: 0 yes / 1 no / 2 error / 3 bench disagreement.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "arhub/dispatch.hpp"
#include "arhub/error.hpp"
#include "arhub/generators.hpp"
#include "arhub/io.hpp"
#include "arhub/preprocess.hpp"
#include "arhub/relaxed.hpp"

namespace {

using namespace arhub;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        size_t used = 0;
        int v;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            fail(Errc::parse_error, "bad vertex \"" + token + '"');
        }
        if (used != token.size()) fail(Errc::parse_error, "bad vertex \"" + token + '"');
        out.push_back(v);
    }
    return out;
}

std::string format_number(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

void print_report(const SolveReport& rep) {
    std::cout << (rep.yes ? "YES" : "NO") << '\n';
    if (rep.witness) {
        std::cout << "witness:";
        for (Vertex v : rep.witness->placed) std::cout << ' ' << v;
        std::cout << '\n';
    }
    std::cout << "solver: " << rep.solver_name << '\n';
    std::cout << "elapsed_ms: " << format_number(rep.elapsed.count()) << '\n';
    for (const auto& [key, value] : rep.stats)
        std::cout << key << ": " << format_number(value) << '\n';
}

struct SolveArgs {
    std::string input, solver = "auto", decomposition, modulator;
    int q = 0;
    std::uint64_t budget_cap = 0;
    bool q_set = false, modulator_set = false;
};

int run_solve(const SolveArgs& args) {
    InstanceDocument doc = parse_instance_file(args.input);
    SolverContext ctx;
    ctx.modulator = args.modulator_set ? parse_vertex_list(args.modulator) : doc.modulator;
    if (args.q_set) ctx.q = args.q;
    if (!args.decomposition.empty()) {
        std::ifstream in(args.decomposition);
        if (!in) fail(Errc::io_error, "cannot read " + args.decomposition);
        ctx.decomposition = parse_tree_decomposition(in, doc.instance.topology);
    }
    SolveOptions opts;
    if (args.budget_cap > 0)
        opts.subset_cap = opts.empty_subset_cap = opts.dp_cell_cap = opts.guess_cap =
            args.budget_cap;

    SolveReport rep = solve_named(doc.instance, args.solver, ctx, opts);
    if (rep.yes && rep.witness) {
        // Defensive recheck so a solver bug can never print a bogus witness.
        const long long exc = excess(doc.instance, *rep.witness).total;
        if (rep.witness->size() != doc.instance.refugees ||
            exc > doc.instance.relax_budget.value_or(0))
            fail(Errc::invalid_params, "solver returned an invalid witness");
    }
    print_report(rep);
    return rep.yes ? 0 : 1;
}

int run_verify(const std::string& input, const std::string& housing_text) {
    InstanceDocument doc = parse_instance_file(input);
    const Instance& inst = doc.instance;
    std::vector<Vertex> placed = parse_vertex_list(housing_text);
    {
        auto sorted = placed;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(Errc::invalid_params, "housing lists a vertex twice");
    }
    Housing housing = Housing::of(std::move(placed));
    ExcessReport report = excess(inst, housing);

    std::vector<char> housed(inst.topology.vertex_count(), 0);
    for (Vertex v : housing.placed) housed[v] = 1;
    for (auto [v, exc] : report.per_inhabitant) {
        int count = 0;
        for (Vertex w : inst.topology.neighbors(v)) count += housed[w];
        std::cout << "inhabitant " << v << " count " << count << " bound " << inst.ub(v)
                  << " excess " << exc << '\n';
    }
    std::cout << "total_excess: " << report.total << '\n';
    if (housing.size() != inst.refugees) {
        std::cout << "housing size " << housing.size() << " does not match refugees "
                  << inst.refugees << '\n';
        return 1;
    }
    return report.total <= inst.relax_budget.value_or(0) ? 0 : 1;
}

struct GenerateArgs {
    std::string family = "tree", out;
    RandomParams params;
    std::uint64_t seed = 0;
    int refugees = -1;
};

int run_generate(const GenerateArgs& args) {
    static const std::map<std::string, RandomFamily> families = {
        {"tree", RandomFamily::tree},
        {"cycle", RandomFamily::cycle},
        {"maxdeg2", RandomFamily::maxdeg2},
        {"bipartite", RandomFamily::bipartite},
        {"nearly-complete", RandomFamily::nearly_complete},
        {"planted-modulator", RandomFamily::planted_modulator},
    };
    auto it = families.find(args.family);
    if (it == families.end()) fail(Errc::invalid_params, "unknown family " + args.family);
    RandomParams params = args.params;
    if (args.refugees >= 0) params.refugees = args.refugees;
    GeneratedInstance gen = generate_random(it->second, params, args.seed);
    if (args.out.empty())
        std::cout << serialize_instance(gen.instance, gen.modulator);
    else
        write_instance_file(args.out, gen.instance, gen.modulator);
    return 0;
}

struct ReduceArgs {
    std::string from, graph, out;
    int k = 0, t = 0;
};

int run_reduce(const ReduceArgs& args) {
    Graph h = parse_graph_file(args.graph);
    Instance inst = [&] {
        if (args.from == "is") return reduce_independent_set(h, args.k);
        if (args.from == "eq3col") return reduce_equitable_3col(h);
        if (args.from == "is-relaxed") return reduce_relaxed_hardness(h, args.k, args.t);
        fail(Errc::invalid_params, "unknown reduction " + args.from);
    }();
    if (args.out.empty())
        std::cout << serialize_instance(inst);
    else
        write_instance_file(args.out, inst);
    return 0;
}

struct BenchArgs {
    std::string suite, solvers = "auto", out;
    int threads = 0;
    std::uint64_t budget_cap = 0;
};

struct BenchCell {
    std::string verdict = "error";
    double elapsed_ms = 0;
    std::map<std::string, double> stats;
    std::string message;
};

int run_bench(const BenchArgs& args) {
    namespace fs = std::filesystem;
    std::ifstream suite(args.suite);
    if (!suite) fail(Errc::io_error, "cannot read " + args.suite);
    const fs::path base = fs::path(args.suite).parent_path();
    std::vector<std::string> files;
    std::string line;
    while (std::getline(suite, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                                 line.back() == '\r'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        files.push_back((base / line.substr(start)).string());
    }
    const std::vector<std::string> solvers = split_csv(args.solvers);
    if (solvers.empty()) fail(Errc::invalid_params, "no solvers requested");

    const int cells_total = static_cast<int>(files.size() * solvers.size());
    std::vector<BenchCell> cells(cells_total);
    SolveOptions opts;
    if (args.budget_cap > 0)
        opts.subset_cap = opts.empty_subset_cap = opts.dp_cell_cap = opts.guess_cap =
            args.budget_cap;

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < cells_total; i = next.fetch_add(1)) {
            const std::string& file = files[i / solvers.size()];
            const std::string& solver = solvers[i % solvers.size()];
            BenchCell& cell = cells[i];
            try {
                InstanceDocument doc = parse_instance_file(file);
                SolverContext ctx;
                ctx.modulator = doc.modulator;
                SolveReport rep = solve_named(doc.instance, solver, ctx, opts);
                cell.verdict = rep.yes ? "YES" : "NO";
                cell.elapsed_ms = rep.elapsed.count();
                cell.stats = std::move(rep.stats);
            } catch (const std::exception& e) {
                cell.message = e.what();
            }
        }
    };
    int threads = args.threads > 0
                      ? args.threads
                      : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<int>(threads, std::max(1, cells_total));
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::set<std::string> stat_keys;
    for (const BenchCell& c : cells)
        for (const auto& [key, value] : c.stats) stat_keys.insert(key);

    std::ostringstream csv;
    csv << "instance,solver,verdict,elapsed_ms";
    for (const auto& key : stat_keys) csv << ',' << key;
    csv << '\n';
    for (int i = 0; i < cells_total; ++i) {
        const BenchCell& c = cells[i];
        csv << files[i / solvers.size()] << ',' << solvers[i % solvers.size()] << ','
            << c.verdict << ',' << format_number(c.elapsed_ms);
        for (const auto& key : stat_keys) {
            csv << ',';
            auto it = c.stats.find(key);
            if (it != c.stats.end()) csv << format_number(it->second);
        }
        csv << '\n';
    }
    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(args.out);
        if (!out) fail(Errc::io_error, "cannot write " + args.out);
        out << csv.str();
    }

    for (const BenchCell& c : cells)
        if (!c.message.empty())
            std::cerr << "note: " << c.message << '\n';
    for (size_t f = 0; f < files.size(); ++f) {
        std::string agreed;
        for (size_t s = 0; s < solvers.size(); ++s) {
            const BenchCell& c = cells[f * solvers.size() + s];
            if (c.verdict == "error") continue;
            if (agreed.empty()) {
                agreed = c.verdict;
            } else if (agreed != c.verdict) {
                std::cerr << "solver disagreement on " << files[f] << '\n';
                return 3;
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for upper-bounded refugee housing instances"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Decide an instance file");
    solve->add_option("--input", solve_args.input, "Instance file")->required();
    solve->add_option("--solver", solve_args.solver, "Solver name (default: auto)");
    solve->add_option("--decomposition", solve_args.decomposition,
                      "Tree-decomposition file (PACE format)");
    auto* modulator_opt = solve->add_option("--modulator", solve_args.modulator,
                                            "Comma-separated modulator vertices");
    auto* q_opt = solve->add_option("--q", solve_args.q, "Below-guarantee distance");
    solve->add_option("--budget-cap", solve_args.budget_cap,
                      "Cap for all enumeration/table budgets");

    std::string verify_input, verify_housing;
    CLI::App* verify = app.add_subcommand("verify", "Check a housing against an instance");
    verify->add_option("--input", verify_input, "Instance file")->required();
    verify->add_option("--housing", verify_housing, "Comma-separated housed vertices")
        ->required();

    GenerateArgs gen_args;
    CLI::App* generate = app.add_subcommand("generate", "Emit a random instance");
    generate->add_option("--family", gen_args.family,
                         "tree|cycle|maxdeg2|bipartite|nearly-complete|planted-modulator");
    generate->add_option("--n", gen_args.params.n, "Vertex count");
    generate->add_option("--seed", gen_args.seed, "Random seed");
    generate->add_option("--occupied-fraction", gen_args.params.occupied_fraction,
                         "Fraction of occupied vertices");
    generate->add_option("--zero-bound-prob", gen_args.params.zero_bound_prob,
                         "Probability of a 0 upper bound");
    generate->add_option("--edge-prob", gen_args.params.edge_prob, "Edge probability");
    generate->add_option("--missing-edges", gen_args.params.missing_edges,
                         "Dropped pairs (nearly-complete)");
    generate->add_option("--modulator-size", gen_args.params.modulator_size,
                         "Planted modulator size");
    generate->add_option("--refugees", gen_args.refugees, "Fixed refugee count");
    generate->add_option("--out", gen_args.out, "Output file (stdout when absent)");

    ReduceArgs reduce_args;
    CLI::App* reduce = app.add_subcommand("reduce", "Build a hard instance from a graph");
    reduce->add_option("--from", reduce_args.from, "is|eq3col|is-relaxed")->required();
    reduce->add_option("--graph", reduce_args.graph, "Source graph file")->required();
    reduce->add_option("--k", reduce_args.k, "Independent-set size");
    reduce->add_option("--t", reduce_args.t, "Relax budget (is-relaxed)");
    reduce->add_option("--out", reduce_args.out, "Output file (stdout when absent)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Run solvers over a suite of instances");
    bench->add_option("--suite", bench_args.suite, "File listing instance paths")->required();
    bench->add_option("--solvers", bench_args.solvers, "Comma-separated solver names");
    bench->add_option("--out", bench_args.out, "CSV output file (stdout when absent)");
    bench->add_option("--threads", bench_args.threads, "Worker threads");
    bench->add_option("--budget-cap", bench_args.budget_cap,
                      "Cap for all enumeration/table budgets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    solve_args.modulator_set = modulator_opt->count() > 0;
    solve_args.q_set = q_opt->count() > 0;

    try {
        if (*solve) return run_solve(solve_args);
        if (*verify) return run_verify(verify_input, verify_housing);
        if (*generate) return run_generate(gen_args);
        if (*reduce) return run_reduce(reduce_args);
        if (*bench) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
