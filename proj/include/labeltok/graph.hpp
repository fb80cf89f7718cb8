#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "labeltok/common.hpp"

namespace labeltok {

using OriginalId = std::int64_t;

/**
 * Undirected simple graph as read from disk, keyed by the ids found in the input.
 *
 * Nodes are the distinct ids referenced by any edge line (self-loops included),
 * stored ascending. Edges are index pairs (a < b) into that id list, deduplicated.
 */
struct RawGraph {
    std::vector<OriginalId> ids;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    std::size_t node_count() const noexcept { return ids.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }

    /// Normalizes an arbitrary edge list: drops self-loops (keeping the node), collapses duplicates.
    /// `extra_ids` adds nodes that no edge mentions.
    static RawGraph from_edges(std::span<const std::pair<OriginalId, OriginalId>> edges,
                               std::span<const OriginalId> extra_ids = {});
};

RawGraph load_edge_list(const std::filesystem::path& path);

/**
 * Immutable compressed adjacency over ranks 1..n.
 *
 * Neighbor lists are sorted ascending and symmetric. Rank 0 is a sentinel
 * with an empty neighbor list so that rank-indexed arrays need no offset.
 */
class OrderedGraph {
public:
    OrderedGraph() = default;

    std::size_t node_count() const noexcept { return rank_to_original_.empty() ? 0 : rank_to_original_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(NodeId v) const { return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]); }

    OriginalId original_id(NodeId v) const { return rank_to_original_.at(v); }
    std::optional<NodeId> rank_of(OriginalId id) const;

    /// Ranks 1..n in ascending order of original id; lets callers lay out per-original-id data.
    std::span<const NodeId> ranks_by_original() const { return ranks_by_original_; }

    friend OrderedGraph reorder(const RawGraph& g, const std::function<std::vector<std::uint32_t>(const RawGraph&)>& order);

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> neighbors_;
    std::vector<OriginalId> rank_to_original_;
    std::vector<NodeId> ranks_by_original_;
    std::vector<OriginalId> sorted_originals_;
};

/// An ordering rule returns raw node indices (into RawGraph::ids) from rank 1 to rank n.
using OrderingRule = std::function<std::vector<std::uint32_t>(const RawGraph&)>;

/// Degree descending, ties broken by ascending original id.
std::vector<std::uint32_t> degree_order(const RawGraph& g);

OrderedGraph reorder(const RawGraph& g, const OrderingRule& order);

inline OrderedGraph reorder_by_degree(const RawGraph& g) { return reorder(g, degree_order); }

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Unweighted single-source hop distances indexed by rank; kUnreachable for other components and slot 0.
std::vector<std::uint32_t> bfs_distances(const OrderedGraph& g, NodeId src);

} // namespace labeltok
