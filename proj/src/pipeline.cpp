#include "labeltok/pipeline.hpp"

#include <charconv>
#include <chrono>
#include <cmath>

#include "labeltok/bias.hpp"
#include "labeltok/labelgraph.hpp"
#include "labeltok/pll.hpp"

namespace labeltok {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

void warn_exponent(const char* name, double r, std::ostream& err) {
    if (r < -4.0 || r > 4.0) err << "warning: " << name << '=' << r << " is outside the usual range [-4, 4]\n";
}

// Every finite entry must equal the brute-force distance; sentinels only on virtual/pad rows.
std::size_t count_bias_mismatches(const TokenSet& tokens, const BiasSet& bias, const DistanceTable& oracle) {
    std::size_t bad = 0;
    const std::size_t t = tokens.token_length;
    for (NodeId v = 1; v <= tokens.node_count(); ++v) {
        auto tok = tokens.token(v);
        auto m = bias.matrix(v);
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                const std::uint32_t a = tok[i], b = tok[j];
                std::uint16_t expect;
                if (a == kPadSlot || b == kPadSlot) expect = kBiasMask;
                else if (a == kVirtualSlot || b == kVirtualSlot) expect = kBiasInf;
                else expect = oracle.at(a, b);
                bad += m[i * t + j] != expect;
            }
        }
    }
    return bad;
}

} // namespace

ManifestEntries PipelineConfig::manifest_entries() const {
    return {
        {"graph", graph.string()},
        {"features", features.string()},
        {"classes", classes.string()},
        {"labels", labels.string()},
        {"s_in", std::to_string(sampler.s_in)},
        {"s_out", std::to_string(sampler.s_out)},
        {"r_in", format_double(sampler.r_in)},
        {"r_out", format_double(sampler.r_out)},
        {"seed", std::to_string(sampler.seed)},
        {"rebalance", sampler.rebalance ? "1" : "0"},
        {"virtual_count", std::to_string(sampler.virtual_count)},
        {"verify", verify ? "1" : "0"},
        {"threads", std::to_string(threads)},
        {"oracle_cap", std::to_string(oracle_cap)},
        {"cache", use_cache ? "1" : "0"},
    };
}

int cmd_label(const std::filesystem::path& graph, const std::filesystem::path& labels_out, std::ostream& out, std::ostream& err) {
    try {
        const auto t0 = Clock::now();
        OrderedGraph g = reorder_by_degree(load_edge_list(graph));
        LabelIndex idx = build_pll(g);
        save_labels(idx, labels_out);
        out << "n=" << g.node_count() << '\n';
        out << "m=" << g.edge_count() << '\n';
        out << "entries=" << idx.total_entries() << '\n';
        err << "label: " << format_double(seconds_since(t0)) << " s\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_precompute(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.sampler.validate();
        warn_exponent("r_in", cfg.sampler.r_in, err);
        warn_exponent("r_out", cfg.sampler.r_out, err);

        auto t0 = Clock::now();
        OrderedGraph g = reorder_by_degree(load_edge_list(cfg.graph));
        LabelIndex idx = load_labels(cfg.labels);
        if (idx.node_count() != g.node_count())
            throw Error("label index has " + std::to_string(idx.node_count()) + " nodes, graph has " + std::to_string(g.node_count()));
        FeatureMatrix features = load_features(cfg.features, g);
        ClassLabels classes = load_class_labels(cfg.classes, g);
        SplitAssignment splits = make_splits(g.node_count(), cfg.sampler.seed);
        err << "load: " << format_double(seconds_since(t0)) << " s\n";

        t0 = Clock::now();
        LabelGraph lg(idx);
        TokenSet tokens = sample_all_tokens(lg, cfg.sampler, cfg.threads);
        err << "sample: " << format_double(seconds_since(t0)) << " s\n";

        t0 = Clock::now();
        BiasStats stats;
        BiasSet bias = build_all_bias(idx, tokens, {.threads = cfg.threads, .use_cache = cfg.use_cache}, &stats);
        err << "bias: " << format_double(seconds_since(t0)) << " s, " << stats.pair_requests << " pair queries, hit rate "
            << format_double(stats.hit_rate()) << '\n';

        if (cfg.verify) {
            if (g.node_count() > cfg.oracle_cap) {
                err << "notice: bias verification skipped, n=" << g.node_count() << " exceeds oracle cap " << cfg.oracle_cap << '\n';
            } else if (std::size_t bad = count_bias_mismatches(tokens, bias, build_reference_distances(g, cfg.oracle_cap)); bad) {
                throw Error(std::to_string(bad) + " bias entries disagree with brute-force distances");
            }
        }

        export_bundle(cfg.out, {tokens, bias, features, classes, splits, cfg.manifest_entries()});
        out << "n=" << g.node_count() << '\n';
        out << "token_length=" << tokens.token_length << '\n';
        out << "bundle=" << cfg.out.string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_query(const std::filesystem::path& labels, std::int64_t u, std::int64_t v,
              const std::optional<std::filesystem::path>& graph, std::ostream& out, std::ostream& err) {
    try {
        LabelIndex idx = load_labels(labels);
        std::optional<OrderedGraph> g;
        if (graph) g = reorder_by_degree(load_edge_list(*graph));
        NodeId a, b;
        if (g) {
            auto ra = g->rank_of(u), rb = g->rank_of(v);
            if (!ra || !rb) throw Error("node id not in graph");
            a = *ra;
            b = *rb;
        } else {
            if (u < 1 || v < 1 || static_cast<std::uint64_t>(u) > idx.node_count() || static_cast<std::uint64_t>(v) > idx.node_count())
                throw Error("node rank out of range 1.." + std::to_string(idx.node_count()));
            a = static_cast<NodeId>(u);
            b = static_cast<NodeId>(v);
        }
        const Distance d = query_spd(idx, a, b);
        if (d == kInfDistance) out << "INF\n";
        else out << d << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_verify(const std::filesystem::path& graph, const std::filesystem::path& labels, std::size_t oracle_cap,
               std::ostream& out, std::ostream& err) {
    try {
        OrderedGraph g = reorder_by_degree(load_edge_list(graph));
        LabelIndex idx = load_labels(labels);
        const NodeId n = static_cast<NodeId>(g.node_count());
        if (idx.node_count() != n)
            throw Error("label index has " + std::to_string(idx.node_count()) + " nodes, graph has " + std::to_string(n));
        if (n > oracle_cap) {
            err << "notice: checks skipped, n=" << n << " exceeds oracle cap " << oracle_cap << '\n';
            return 0;
        }

        DistanceTable oracle = build_reference_distances(g, oracle_cap);
        LabelGraph lg(idx);
        bool ok = true;

        std::vector<Violation> exact;
        for (NodeId u = 1; u <= n; ++u) {
            for (NodeId v = 1; v <= n; ++v) {
                if (query_spd(idx, u, v) != oracle.at(u, v)) exact.push_back({0, u, v});
            }
        }
        if (exact.empty()) {
            out << "EXACTNESS OK\n";
        } else {
            ok = false;
            for (const Violation& x : exact) out << "EXACTNESS VIOLATION u=" << x.u << " v=" << x.v << '\n';
        }

        auto weights = check_arc_weights(lg, oracle);
        if (weights.empty()) {
            out << "LABEL DISTANCES OK\n";
        } else {
            ok = false;
            for (const Violation& x : weights) out << "LABEL DISTANCES VIOLATION u=" << x.u << " v=" << x.v << '\n';
        }

        auto p1 = check_property_1(g, lg);
        auto p2 = check_property_2_corrected(g, lg, oracle);
        auto p3 = check_property_3(g, lg, oracle);
        write_property_report(out, 1, p1);
        write_property_report(out, 2, p2);
        write_property_report(out, 3, p3);
        ok = ok && p1.empty() && p2.empty() && p3.empty();

        auto literal = check_property_2_literal(g, lg, oracle);
        out << "INFO property 2 literal form counterexamples=" << literal.size();
        if (!literal.empty()) out << " first: u=" << literal.front().u << " v=" << literal.front().v;
        out << '\n';

        out << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_check_bundle(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
    BundleCheck check = verify_bundle(dir);
    for (const auto& p : check.problems) err << "error: " << p << '\n';
    out << (check.ok() ? "BUNDLE OK" : "BUNDLE INVALID") << '\n';
    return check.ok() ? 0 : 1;
}

int cmd_run(PipelineConfig cfg, std::ostream& out, std::ostream& err) {
    try {
        std::filesystem::create_directories(cfg.out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    if (cfg.labels.empty()) cfg.labels = cfg.out / "index.dhlb";
    if (int rc = cmd_label(cfg.graph, cfg.labels, out, err); rc != 0) return rc;
    return cmd_precompute(cfg, out, err);
}

} // namespace labeltok
