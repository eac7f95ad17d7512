#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mimic/io.hpp"
#include "mimic/partition.hpp"
#include "mimic/selftest.hpp"
#include "mimic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuardRefusal = 3;
constexpr int kExitRandomizedFailure = 4;

struct CommonFlags {
    int c = 1;
    std::string mode = "expander";
    std::string oracle = "exact";
    uint64_t seed = 1;
    uint64_t prime = mimic::Fp::kMersenne61;
    double phi = 0.0;
    double sigma = 1.0;
    int enum_threshold = 18;
    bool batch_contract = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--c", flags.c, "connectivity bound c")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", flags.mode, "partition refinement mode")
        ->check(CLI::IsMember({"existence", "expander"}));
    cmd->add_option("--oracle", flags.oracle, "sparsest-cut oracle")
        ->check(CLI::IsMember({"exact", "spectral"}));
    cmd->add_option("--seed", flags.seed, "master seed");
    cmd->add_option("--prime", flags.prime, "field prime");
    cmd->add_option("--phi", flags.phi, "expansion parameter override");
    cmd->add_option("--sigma", flags.sigma, "assumed sparsest-cut oracle quality");
    cmd->add_option("--enum-threshold", flags.enum_threshold, "max terminals for exhaustive enumeration");
    cmd->add_flag("--batch-contract", flags.batch_contract,
                  "contract all non-candidates per round (experimental)");
}

mimic::RunConfig to_config(const CommonFlags& flags) {
    mimic::RunConfig cfg;
    cfg.c = flags.c;
    cfg.mode = flags.mode == "existence" ? mimic::RefineMode::existence : mimic::RefineMode::expander;
    cfg.oracle = flags.oracle == "spectral" ? mimic::OracleMode::spectral : mimic::OracleMode::exact;
    cfg.seed = flags.seed;
    cfg.prime = flags.prime;
    cfg.phi_override = flags.phi;
    cfg.sigma = flags.sigma;
    cfg.enum_threshold = flags.enum_threshold;
    cfg.batch_contract = flags.batch_contract;
    return cfg;
}

int cmd_build(const std::string& input_path, const std::string& out_path, const CommonFlags& flags) {
    mimic::GraphInput input = mimic::read_graph_file(input_path);
    if (input.terminals.empty()) throw mimic::InputError("input declares no terminals");
    mimic::BuildOptions opts;
    opts.config = to_config(flags);
    mimic::MimickingNetwork net =
        mimic::build_network(input.vertex_list(), input.edges, input.terminals, opts);
    if (!out_path.empty()) mimic::write_graph_file(out_path, net.graph, net.terminals);
    std::cout << mimic::format_stats(net.stats);

    if (flags.batch_contract) {
        // Batch contraction is experimental; validate the run outright when
        // the instance is small enough for the verifier.
        mimic::Multigraph g = mimic::from_weighted(input.vertex_list(), input.edges, flags.c);
        mimic::TerminalSet t(input.terminals);
        if (t.size() <= 20) {
            mimic::EquivalenceReport eq = mimic::tc_equivalent(g, net.graph, t, flags.c);
            std::cout << "batch_verified " << (eq.equivalent ? "pass" : "FAIL") << "\n";
            if (!eq.equivalent) return kExitVerificationFailure;
        } else {
            std::cout << "batch_verified skipped (instance above verifier guard)\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& g_path, const std::string& h_path, int c) {
    mimic::GraphInput gi = mimic::read_graph_file(g_path);
    mimic::GraphInput hi = mimic::read_graph_file(h_path);
    if (gi.terminals.size() != hi.terminals.size())
        throw mimic::InputError("terminal counts differ between the two graphs");
    mimic::Multigraph g = mimic::from_weighted(gi.vertex_list(), gi.edges, c);
    mimic::Multigraph h_raw = mimic::from_weighted(hi.vertex_list(), hi.edges, c);

    // Terminals correspond by position; shift the second graph's ids so the
    // two vertex ranges cannot collide, then give both graphs one id space.
    int shift = gi.n + 1;
    mimic::Multigraph h;
    for (mimic::VertexId v : h_raw.vertices()) h.add_vertex(v + shift);
    for (const mimic::EdgeRec& e : h_raw.edges()) h.add_edge_with_id(e.id, e.u + shift, e.v + shift);
    for (size_t i = 0; i < gi.terminals.size(); ++i) {
        // identify the i-th terminals of both files
        mimic::VertexId gt = gi.terminals[i], ht = hi.terminals[i] + shift;
        mimic::Multigraph merged;
        for (mimic::VertexId v : h.vertices()) merged.add_vertex(v == ht ? gt : v);
        for (const mimic::EdgeRec& e : h.edges())
            merged.add_edge_with_id(e.id, e.u == ht ? gt : e.u, e.v == ht ? gt : e.v);
        h = std::move(merged);
    }

    mimic::TerminalSet t(gi.terminals);
    mimic::EquivalenceReport eq = mimic::tc_equivalent(g, h, t, c);
    if (eq.equivalent) {
        std::cout << "equivalent yes (" << eq.subsets_checked << " bipartitions, c=" << c << ")\n";
        return kExitOk;
    }
    std::cout << "equivalent no\n";
    std::cout << "failing_subset";
    for (mimic::VertexId v : eq.failing_subset) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "capped_values " << eq.g_value << " vs " << eq.h_value << "\n";
    return kExitVerificationFailure;
}

int cmd_stats(const std::string& path) {
    mimic::GraphInput input = mimic::read_graph_file(path);
    long long total_weight = 0;
    for (const mimic::WeightedEdge& e : input.edges) total_weight += e.w;
    std::cout << "n " << input.n << "\n";
    std::cout << "m " << input.edges.size() << "\n";
    std::cout << "k " << input.terminals.size() << "\n";
    std::cout << "total_weight " << total_weight << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity-c mimicking network construction and verification"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input_path, out_path, h_path;

    CLI::App* build = app.add_subcommand("build", "construct a mimicking network");
    build->add_option("input", input_path, "input graph file")->required();
    build->add_option("--out", out_path, "output graph file");
    add_common(build, flags);

    CLI::App* verify = app.add_subcommand("verify", "check (T,c)-equivalence of two graphs");
    verify->add_option("graph", input_path, "reference graph file")->required();
    verify->add_option("network", h_path, "candidate mimicking network file")->required();
    verify->add_option("--c", flags.c, "connectivity bound c")->check(CLI::PositiveNumber);

    CLI::App* stats = app.add_subcommand("stats", "print instance statistics");
    stats->add_option("input", input_path, "input graph file")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the randomized acceptance suite at reduced scale");
    int trials = 20;
    selftest->add_option("--seed", flags.seed, "master seed");
    selftest->add_option("--prime", flags.prime, "field prime");
    selftest->add_option("--trials", trials, "number of pipeline instances");

    try {
        app.parse(argc, argv);
        if (build->parsed()) return cmd_build(input_path, out_path, flags);
        if (verify->parsed()) return cmd_verify(input_path, h_path, flags.c);
        if (stats->parsed()) return cmd_stats(input_path);
        if (selftest->parsed()) {
            mimic::SelftestConfig cfg;
            cfg.seed = flags.seed;
            cfg.prime = flags.prime;
            cfg.trials = trials;
            mimic::SelftestReport report = mimic::run_selftest(cfg);
            std::cout << mimic::format_selftest(report);
            return report.all_passed() ? kExitOk : kExitVerificationFailure;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const mimic::GuardRefusal& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return kExitGuardRefusal;
    } catch (const mimic::RandomizedFailure& e) {
        std::cerr << "randomized construction failure: " << e.what() << "\n";
        return kExitRandomizedFailure;
    } catch (const mimic::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
