#include "labeltok/generators.hpp"

#include <algorithm>
#include <numeric>

#include "labeltok/rng.hpp"

namespace labeltok::gen {

namespace {

std::vector<OriginalId> all_ids(std::size_t n) {
    std::vector<OriginalId> ids(n);
    std::iota(ids.begin(), ids.end(), OriginalId{0});
    return ids;
}

} // namespace

RawGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    auto rng = make_stream(seed, 0xE7ULL);
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (uniform_open01(rng) < p) edges.emplace_back(a, b);
        }
    }
    return RawGraph::from_edges(edges, all_ids(n));
}

RawGraph preferential_attachment(std::size_t n, std::size_t edges_per_node, std::uint64_t seed) {
    auto rng = make_stream(seed, 0xBAULL);
    const std::size_t core = std::min(n, edges_per_node + 1);
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    // every edge endpoint appears once here, so a uniform pick is degree-proportional
    std::vector<OriginalId> endpoints;
    for (std::size_t a = 0; a < core; ++a) {
        for (std::size_t b = a + 1; b < core; ++b) {
            edges.emplace_back(a, b);
            endpoints.push_back(static_cast<OriginalId>(a));
            endpoints.push_back(static_cast<OriginalId>(b));
        }
    }
    std::vector<OriginalId> targets;
    for (std::size_t v = core; v < n; ++v) {
        targets.clear();
        while (targets.size() < edges_per_node) {
            OriginalId t = endpoints[uniform_below(rng, endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (OriginalId t : targets) {
            edges.emplace_back(static_cast<OriginalId>(v), t);
            endpoints.push_back(static_cast<OriginalId>(v));
            endpoints.push_back(t);
        }
    }
    return RawGraph::from_edges(edges, all_ids(n));
}

RawGraph path(std::size_t n) {
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return RawGraph::from_edges(edges, all_ids(n));
}

} // namespace labeltok::gen
