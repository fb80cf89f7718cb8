#include "labeltok/pll.hpp"

#include <algorithm>

#include "labeltok/binio.hpp"

namespace labeltok {

namespace {
constexpr binio::Magic kLabelMagic{'D', 'H', 'L', 'B'};
constexpr std::uint32_t kLabelVersion = 1;
} // namespace

LabelIndex::LabelIndex(std::vector<std::vector<LabelEntry>> per_node) {
    const std::size_t n = per_node.empty() ? 0 : per_node.size() - 1;
    offsets_.assign(n + 2, 0);
    std::size_t total = 0;
    for (std::size_t v = 1; v <= n; ++v) total += per_node[v].size();
    entries_.reserve(total);
    for (std::size_t v = 1; v <= n; ++v) {
        offsets_[v] = entries_.size();
        entries_.insert(entries_.end(), per_node[v].begin(), per_node[v].end());
        std::vector<LabelEntry>().swap(per_node[v]);
    }
    offsets_[n + 1] = entries_.size();
}

LabelIndex build_pll(const OrderedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<LabelEntry>> labels(n + 1);

    // root_dist[w]: distance from the current root to landmark w per L(root); kUnreachable when absent
    std::vector<std::uint32_t> root_dist(n + 1, kUnreachable);
    // visited_round[u] == root marks u as discovered in this round, so no per-round clears are needed
    std::vector<NodeId> visited_round(n + 1, 0);
    std::vector<std::uint32_t> depth(n + 1, 0);
    std::vector<NodeId> queue;
    queue.reserve(n);

    for (NodeId root = 1; root <= n; ++root) {
        for (const LabelEntry& e : labels[root]) root_dist[e.landmark] = e.distance;
        root_dist[root] = 0;

        queue.clear();
        queue.push_back(root);
        visited_round[root] = root;
        depth[root] = 0;

        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            const std::uint32_t d = depth[u];

            bool pruned = false;
            for (const LabelEntry& e : labels[u]) {
                const std::uint32_t rd = root_dist[e.landmark];
                if (rd != kUnreachable && rd + e.distance <= d) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;

            if (d > kMaxDistance) throw Error("hop distance " + std::to_string(d) + " exceeds label storage width");
            labels[u].push_back({root, static_cast<Distance>(d)});

            for (NodeId w : g.neighbors(u)) {
                // nodes ranked before the root already carry a full label; they are always pruned
                if (w < root || visited_round[w] == root) continue;
                visited_round[w] = root;
                depth[w] = d + 1;
                queue.push_back(w);
            }
        }

        for (const LabelEntry& e : labels[root]) root_dist[e.landmark] = kUnreachable;
    }
    return LabelIndex(std::move(labels));
}

QueryResult query_spd_counted(const LabelIndex& idx, NodeId u, NodeId v) {
    auto a = idx.label(u);
    auto b = idx.label(v);
    std::uint32_t best = kUnreachable;
    std::size_t i = 0, j = 0;
    // branch-light merge: both cursors advance on a match
    while (i < a.size() && j < b.size()) {
        const NodeId la = a[i].landmark;
        const NodeId lb = b[j].landmark;
        const std::uint32_t sum = std::uint32_t{a[i].distance} + b[j].distance;
        best = la == lb ? std::min(best, sum) : best;
        i += la <= lb;
        j += lb <= la;
    }
    Distance d = best == kUnreachable ? kInfDistance : static_cast<Distance>(std::min<std::uint32_t>(best, kMaxDistance));
    return {d, i + j};
}

Distance query_spd(const LabelIndex& idx, NodeId u, NodeId v) {
    return query_spd_counted(idx, u, v).distance;
}

DistanceTable build_reference_distances(const OrderedGraph& g, std::size_t cap) {
    const std::size_t n = g.node_count();
    if (n > cap) throw Error("reference distances: n=" + std::to_string(n) + " exceeds oracle cap " + std::to_string(cap));
    std::vector<Distance> values(n * n, kInfDistance);
    for (NodeId s = 1; s <= n; ++s) {
        auto dist = bfs_distances(g, s);
        for (NodeId t = 1; t <= n; ++t) {
            if (dist[t] != kUnreachable) values[(s - 1) * n + (t - 1)] = static_cast<Distance>(dist[t]);
        }
    }
    return DistanceTable(n, std::move(values));
}

void save_labels(const LabelIndex& idx, const std::filesystem::path& path) {
    binio::Writer w(path);
    w.magic(kLabelMagic);
    w.u32(kLabelVersion);
    w.u64(idx.node_count());
    for (NodeId v = 1; v <= idx.node_count(); ++v) {
        auto l = idx.label(v);
        w.u32(static_cast<std::uint32_t>(l.size()));
        for (const LabelEntry& e : l) {
            w.u32(e.landmark - 1);
            w.u16(e.distance);
        }
    }
    w.u32(w.crc());
    w.finish();
}

LabelIndex load_labels(const std::filesystem::path& path) {
    binio::Reader r(path);
    r.expect_magic(kLabelMagic);
    if (auto ver = r.u32(); ver != kLabelVersion) throw Error(path.string() + ": unsupported label version " + std::to_string(ver));
    const std::uint64_t n = r.u64();
    // each node needs at least a count and its self entry
    if (n > r.remaining() / 10) throw Error(path.string() + ": node count inconsistent with file size");
    std::vector<std::vector<LabelEntry>> labels(n + 1);
    for (NodeId v = 1; v <= n; ++v) {
        const std::uint32_t k = r.u32();
        if (k > r.remaining() / 6) throw Error(path.string() + ": truncated label of node " + std::to_string(v - 1));
        labels[v].reserve(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            NodeId lm = r.u32() + 1;
            Distance d = r.u16();
            labels[v].push_back({lm, d});
        }
    }
    const std::uint32_t expected = r.crc_so_far();
    if (r.u32() != expected) throw Error(path.string() + ": checksum mismatch");
    r.expect_end();

    for (NodeId v = 1; v <= n; ++v) {
        const auto& l = labels[v];
        bool ok = !l.empty() && l.back().landmark == v && l.back().distance == 0;
        for (std::size_t i = 0; ok && i < l.size(); ++i) {
            ok = l[i].landmark >= 1 && l[i].landmark <= v && (i == 0 || l[i - 1].landmark < l[i].landmark);
        }
        if (!ok) throw Error(path.string() + ": malformed label for node " + std::to_string(v - 1));
    }
    return LabelIndex(std::move(labels));
}

} // namespace labeltok
