#include <iostream>

#include <CLI11.hpp>

#include "labeltok/pipeline.hpp"

using namespace labeltok;

namespace {

void add_sampler_flags(CLI::App* cmd, PipelineConfig& cfg, bool& no_rebalance, bool& no_cache) {
    cmd->add_option("--s-in", cfg.sampler.s_in, "in-neighbor budget")->capture_default_str();
    cmd->add_option("--s-out", cfg.sampler.s_out, "out-neighbor budget")->capture_default_str();
    cmd->add_option("--r-in", cfg.sampler.r_in, "in-neighbor sampling exponent")->capture_default_str();
    cmd->add_option("--r-out", cfg.sampler.r_out, "out-neighbor sampling exponent")->capture_default_str();
    cmd->add_option("--seed", cfg.sampler.seed, "sampling and split seed")->capture_default_str();
    cmd->add_option("--virtual-count", cfg.sampler.virtual_count, "virtual slots per token")->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "sampling and bias workers")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--oracle-cap", cfg.oracle_cap, "largest n checked by brute force")->capture_default_str();
    cmd->add_flag("--verify", cfg.verify, "check bias entries against BFS distances (n <= oracle cap)");
    cmd->add_flag("--no-rebalance", no_rebalance, "do not move unused budget between in and out sides");
    cmd->add_flag("--no-cache", no_cache, "query labels for every pair without memoization");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pruned landmark labeling and subgraph token precomputation"};
    app.require_subcommand(1);

    PipelineConfig cfg;
    bool no_rebalance = false;
    bool no_cache = false;

    auto* label = app.add_subcommand("label", "build the label index of a graph");
    label->add_option("--graph", cfg.graph, "edge list")->required();
    label->add_option("--out", cfg.labels, "label index file to write")->required();

    auto* precompute = app.add_subcommand("precompute", "sample tokens, build bias matrices and export a bundle");
    precompute->add_option("--graph", cfg.graph, "edge list")->required();
    precompute->add_option("--labels", cfg.labels, "label index file")->required();
    precompute->add_option("--features", cfg.features, "feature CSV or DHFT file")->required();
    precompute->add_option("--classes", cfg.classes, "class label CSV")->required();
    precompute->add_option("--out", cfg.out, "bundle directory")->required();
    add_sampler_flags(precompute, cfg, no_rebalance, no_cache);

    auto* run = app.add_subcommand("run", "label and precompute in one go");
    run->add_option("--graph", cfg.graph, "edge list")->required();
    run->add_option("--features", cfg.features, "feature CSV or DHFT file")->required();
    run->add_option("--classes", cfg.classes, "class label CSV")->required();
    run->add_option("--out", cfg.out, "bundle directory")->required();
    run->add_option("--labels", cfg.labels, "label index file to write (default <out>/index.dhlb)");
    add_sampler_flags(run, cfg, no_rebalance, no_cache);

    std::int64_t u = 0, v = 0;
    std::string query_graph;
    auto* query = app.add_subcommand("query", "print the hop distance between two nodes");
    query->add_option("--labels", cfg.labels, "label index file")->required();
    query->add_option("--graph", query_graph, "interpret ids as original ids of this edge list (default: ranks)");
    query->add_option("u", u)->required();
    query->add_option("v", v)->required();

    auto* verify = app.add_subcommand("verify", "check the label index against brute-force BFS");
    verify->add_option("--graph", cfg.graph, "edge list")->required();
    verify->add_option("--labels", cfg.labels, "label index file")->required();
    verify->add_option("--oracle-cap", cfg.oracle_cap, "largest n checked by brute force")->capture_default_str();

    auto* check = app.add_subcommand("check-bundle", "verify bundle checksums and headers");
    check->add_option("--out", cfg.out, "bundle directory")->required();

    CLI11_PARSE(app, argc, argv);
    cfg.sampler.rebalance = !no_rebalance;
    cfg.use_cache = !no_cache;

    if (*label) return cmd_label(cfg.graph, cfg.labels, std::cout, std::cerr);
    if (*precompute) return cmd_precompute(cfg, std::cout, std::cerr);
    if (*run) return cmd_run(cfg, std::cout, std::cerr);
    if (*query) {
        std::optional<std::filesystem::path> g;
        if (!query_graph.empty()) g = query_graph;
        return cmd_query(cfg.labels, u, v, g, std::cout, std::cerr);
    }
    if (*verify) return cmd_verify(cfg.graph, cfg.labels, cfg.oracle_cap, std::cout, std::cerr);
    if (*check) return cmd_check_bundle(cfg.out, std::cout, std::cerr);
    return 1;
}
