#include "labeltok/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <string>
#include <string_view>

namespace labeltok {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on whitespace; returns the tokens as views into `line`.
std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<OriginalId> parse_id(std::string_view tok) {
    OriginalId v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

} // namespace

RawGraph RawGraph::from_edges(std::span<const std::pair<OriginalId, OriginalId>> edges,
                              std::span<const OriginalId> extra_ids) {
    RawGraph g;
    g.ids.reserve(edges.size() * 2 + extra_ids.size());
    g.ids.insert(g.ids.end(), extra_ids.begin(), extra_ids.end());
    for (auto [a, b] : edges) {
        g.ids.push_back(a);
        g.ids.push_back(b);
    }
    std::sort(g.ids.begin(), g.ids.end());
    g.ids.erase(std::unique(g.ids.begin(), g.ids.end()), g.ids.end());

    auto index_of = [&](OriginalId id) {
        return static_cast<std::uint32_t>(std::lower_bound(g.ids.begin(), g.ids.end(), id) - g.ids.begin());
    };
    g.edges.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) continue;
        auto ia = index_of(a), ib = index_of(b);
        if (ia > ib) std::swap(ia, ib);
        g.edges.emplace_back(ia, ib);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

RawGraph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list: " + path.string());

    std::vector<std::pair<OriginalId, OriginalId>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (toks.size() != 2) throw ParseError(path.string(), lineno, "expected two node ids");
        auto a = parse_id(toks[0]);
        auto b = parse_id(toks[1]);
        if (!a || !b) throw ParseError(path.string(), lineno, "node id is not an integer");
        edges.emplace_back(*a, *b);
    }
    if (edges.empty()) throw Error("empty graph: " + path.string());
    return RawGraph::from_edges(edges);
}

std::vector<std::uint32_t> degree_order(const RawGraph& g) {
    std::vector<std::uint32_t> deg(g.node_count(), 0);
    for (auto [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    std::vector<std::uint32_t> order(g.node_count());
    std::iota(order.begin(), order.end(), 0u);
    // ids are stored ascending, so comparing indices compares original ids
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (deg[x] != deg[y]) return deg[x] > deg[y];
        return x < y;
    });
    return order;
}

OrderedGraph reorder(const RawGraph& g, const OrderingRule& order_rule) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> order = order_rule(g);
    if (order.size() != n) throw Error("ordering rule returned wrong number of nodes");

    std::vector<NodeId> rank_of_index(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (order[r] >= n || rank_of_index[order[r]] != 0) throw Error("ordering rule is not a permutation");
        rank_of_index[order[r]] = static_cast<NodeId>(r + 1);
    }

    OrderedGraph og;
    og.rank_to_original_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) og.rank_to_original_[rank_of_index[i]] = g.ids[i];
    og.sorted_originals_ = g.ids;
    og.ranks_by_original_ = rank_of_index;

    og.offsets_.assign(n + 2, 0);
    for (auto [a, b] : g.edges) {
        ++og.offsets_[rank_of_index[a] + 1];
        ++og.offsets_[rank_of_index[b] + 1];
    }
    std::partial_sum(og.offsets_.begin(), og.offsets_.end(), og.offsets_.begin());
    og.neighbors_.resize(og.offsets_.back());
    std::vector<std::uint64_t> cursor(og.offsets_.begin(), og.offsets_.end() - 1);
    for (auto [a, b] : g.edges) {
        NodeId ra = rank_of_index[a], rb = rank_of_index[b];
        og.neighbors_[cursor[ra]++] = rb;
        og.neighbors_[cursor[rb]++] = ra;
    }
    for (NodeId v = 1; v <= n; ++v) {
        std::sort(og.neighbors_.begin() + static_cast<std::ptrdiff_t>(og.offsets_[v]),
                  og.neighbors_.begin() + static_cast<std::ptrdiff_t>(og.offsets_[v + 1]));
    }
    return og;
}

std::optional<NodeId> OrderedGraph::rank_of(OriginalId id) const {
    auto it = std::lower_bound(sorted_originals_.begin(), sorted_originals_.end(), id);
    if (it == sorted_originals_.end() || *it != id) return std::nullopt;
    return ranks_by_original_[static_cast<std::size_t>(it - sorted_originals_.begin())];
}

std::vector<std::uint32_t> bfs_distances(const OrderedGraph& g, NodeId src) {
    const std::size_t n = g.node_count();
    if (src == 0 || src > n) throw Error("bfs source out of range: " + std::to_string(src));
    std::vector<std::uint32_t> dist(n + 1, kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(n);
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId u = queue[head];
        for (NodeId w : g.neighbors(u)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

} // namespace labeltok
