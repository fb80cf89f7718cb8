#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "labeltok/common.hpp"
#include "labeltok/graph.hpp"
#include "labeltok/pll.hpp"

namespace labeltok {

struct WeightedArc {
    NodeId node;
    Distance distance;

    friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

/**
 * Directed view of a labeling: u -> w with weight d for every non-self entry (w, d) in L(u).
 *
 * Out-arcs always point to a smaller rank (landmarks precede their owners),
 * so the graph is acyclic. in_arcs(w) is the exact transpose: the owners of
 * every label that contains w, ascending.
 */
class LabelGraph {
public:
    LabelGraph() = default;
    explicit LabelGraph(const LabelIndex& idx);

    std::size_t node_count() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 2; }
    std::size_t edge_count() const noexcept { return out_arcs_.size(); }

    std::span<const WeightedArc> out_arcs(NodeId v) const {
        return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
    }
    std::span<const WeightedArc> in_arcs(NodeId v) const {
        return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
    }

    /// Weight of u -> w, or kInfDistance if the arc is absent.
    Distance arc(NodeId u, NodeId w) const;

private:
    std::vector<std::uint64_t> out_offsets_;
    std::vector<WeightedArc> out_arcs_;
    std::vector<std::uint64_t> in_offsets_;
    std::vector<WeightedArc> in_arcs_;
};

inline LabelGraph derive_label_graph(const LabelIndex& idx) { return LabelGraph(idx); }

struct Violation {
    int property;
    NodeId u;
    NodeId v;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every original edge {a, b} with a < b must appear as b -> a.
std::vector<Violation> check_property_1(const OrderedGraph& g, const LabelGraph& lg);

/// For v -> w in the label graph, no node ranked below w may lie on any shortest v..w path.
std::vector<Violation> check_property_3(const OrderedGraph& g, const LabelGraph& lg, const DistanceTable& oracle);

/**
 * If v is the smallest rank among all nodes on all shortest v..w paths, then w -> v exists.
 *
 * This is the provable form of the shortest-path landmark property. The
 * unrestricted form, where every node on a shortest path ranked above its
 * target must link to it, is reported by check_property_2_literal.
 */
std::vector<Violation> check_property_2_corrected(const OrderedGraph& g, const LabelGraph& lg, const DistanceTable& oracle);

/// Pairs (w, v) where w > v lies on some shortest u..v path but w -> v is missing. Informational only.
std::vector<Violation> check_property_2_literal(const OrderedGraph& g, const LabelGraph& lg, const DistanceTable& oracle);

/// Arcs whose weight differs from the oracle distance, reported as property 0.
std::vector<Violation> check_arc_weights(const LabelGraph& lg, const DistanceTable& oracle);

/// Writes "PROPERTY <k> OK" or one "PROPERTY <k> VIOLATION u=<..> v=<..>" line per violation, ids as ranks.
void write_property_report(std::ostream& os, int property, std::span<const Violation> violations);

} // namespace labeltok
