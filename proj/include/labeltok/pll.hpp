#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "labeltok/common.hpp"
#include "labeltok/graph.hpp"

namespace labeltok {

struct LabelEntry {
    NodeId landmark;
    Distance distance;

    friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

/**
 * 2-hop cover built by pruned landmark labeling.
 *
 * For every node v the label L(v) is a list of (landmark, distance) pairs,
 * strictly ascending by landmark, where every landmark is <= v and the last
 * entry is the self entry (v, 0). Any two nodes in one component share a
 * landmark lying on one of their shortest paths.
 */
class LabelIndex {
public:
    LabelIndex() = default;

    /// Takes ownership of per-node lists (index 0 unused) and compacts them.
    explicit LabelIndex(std::vector<std::vector<LabelEntry>> per_node);

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 2; }
    std::size_t total_entries() const noexcept { return entries_.size(); }

    std::span<const LabelEntry> label(NodeId v) const {
        return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
    }

    friend bool operator==(const LabelIndex&, const LabelIndex&) = default;

private:
    std::vector<std::uint64_t> offsets_;  // size n + 2, rank-indexed
    std::vector<LabelEntry> entries_;
};

/// Pruned BFS from every node in rank order. Throws Error if a hop count exceeds kMaxDistance.
LabelIndex build_pll(const OrderedGraph& g);

struct QueryResult {
    Distance distance;
    std::size_t entries_touched;
};

/// Merge-join over the two sorted labels. kInfDistance when no landmark is shared.
Distance query_spd(const LabelIndex& idx, NodeId u, NodeId v);
QueryResult query_spd_counted(const LabelIndex& idx, NodeId u, NodeId v);

/// Dense all-pairs hop table from one full BFS per node; the brute-force reference for the labeling.
class DistanceTable {
public:
    static constexpr std::size_t kDefaultCap = 1000;

    DistanceTable() = default;
    DistanceTable(std::size_t n, std::vector<Distance> values) : n_(n), values_(std::move(values)) {}

    std::size_t node_count() const noexcept { return n_; }
    Distance at(NodeId u, NodeId v) const { return values_[(u - 1) * n_ + (v - 1)]; }

private:
    std::size_t n_ = 0;
    std::vector<Distance> values_;
};

DistanceTable build_reference_distances(const OrderedGraph& g, std::size_t cap = DistanceTable::kDefaultCap);

// "DHLB" label file. Landmarks are written 0-based (rank - 1), followed by a CRC-32 footer.
void save_labels(const LabelIndex& idx, const std::filesystem::path& path);
LabelIndex load_labels(const std::filesystem::path& path);

} // namespace labeltok
