#pragma once

#include <cstdint>

#include "labeltok/graph.hpp"

namespace labeltok::gen {

/// G(n, p) over ids 0..n-1; isolated nodes are kept.
RawGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment: each new node links to `edges_per_node` distinct earlier nodes
/// chosen proportionally to degree, starting from a clique of edges_per_node + 1 nodes.
RawGraph preferential_attachment(std::size_t n, std::size_t edges_per_node, std::uint64_t seed);

/// Path 0 - 1 - ... - (n-1).
RawGraph path(std::size_t n);

} // namespace labeltok::gen
