#include <gtest/gtest.h>

#include <random>

#include "labeltok/generators.hpp"
#include "labeltok/pll.hpp"
#include "labeltok/rng.hpp"
#include "support/fixtures.hpp"

using namespace labeltok;
using namespace labeltok::testing;

namespace {

std::vector<LabelEntry> as_vector(std::span<const LabelEntry> s) { return {s.begin(), s.end()}; }

// Brute-force distance with kUnreachable mapped onto the label sentinel.
Distance bfs_hops(const std::vector<std::uint32_t>& d, NodeId v) {
    return d[v] == kUnreachable ? kInfDistance : static_cast<Distance>(d[v]);
}

void expect_exact_against_bfs(const OrderedGraph& g, const LabelIndex& idx) {
    for (NodeId u = 1; u <= g.node_count(); ++u) {
        auto d = bfs_distances(g, u);
        for (NodeId v = 1; v <= g.node_count(); ++v) {
            ASSERT_EQ(query_spd(idx, u, v), bfs_hops(d, v)) << "u=" << u << " v=" << v;
        }
    }
}

} // namespace

TEST(BuildPll, PathGraphHandLabels) {
    LabelIndex idx = build_pll(path3());
    using V = std::vector<LabelEntry>;
    EXPECT_EQ(as_vector(idx.label(1)), (V{{1, 0}}));
    EXPECT_EQ(as_vector(idx.label(2)), (V{{1, 1}, {2, 0}}));
    EXPECT_EQ(as_vector(idx.label(3)), (V{{1, 1}, {3, 0}}));
    EXPECT_EQ(idx.total_entries(), 5u);
}

TEST(BuildPll, TriangleHandLabels) {
    LabelIndex idx = build_pll(triangle());
    using V = std::vector<LabelEntry>;
    EXPECT_EQ(as_vector(idx.label(1)), (V{{1, 0}}));
    EXPECT_EQ(as_vector(idx.label(2)), (V{{1, 1}, {2, 0}}));
    // round 3 adds nothing beyond the self entry
    EXPECT_EQ(as_vector(idx.label(3)), (V{{1, 1}, {2, 1}, {3, 0}}));
}

TEST(BuildPll, FiveNodePathHandLabels) {
    LabelIndex idx = build_pll(path5());
    using V = std::vector<LabelEntry>;
    EXPECT_EQ(as_vector(idx.label(4)), (V{{1, 1}, {4, 0}}));
    EXPECT_EQ(as_vector(idx.label(5)), (V{{1, 3}, {2, 2}, {3, 1}, {5, 0}}));
}

TEST(BuildPll, SingleAndIsolatedNodes) {
    LabelIndex one = build_pll(reorder_by_degree(RawGraph::from_edges({}, std::vector<OriginalId>{0})));
    ASSERT_EQ(one.node_count(), 1u);
    EXPECT_EQ(as_vector(one.label(1)), (std::vector<LabelEntry>{{1, 0}}));

    OrderedGraph g = reorder_by_degree(
        RawGraph::from_edges(std::vector<std::pair<OriginalId, OriginalId>>{{0, 1}}, std::vector<OriginalId>{5, 6}));
    LabelIndex idx = build_pll(g);
    for (OriginalId iso : {5, 6}) {
        NodeId v = *g.rank_of(iso);
        EXPECT_EQ(as_vector(idx.label(v)), (std::vector<LabelEntry>{{v, 0}}));
    }
}

TEST(QuerySpd, PathGraph) {
    LabelIndex idx = build_pll(path3());
    EXPECT_EQ(query_spd(idx, 2, 3), 2);
    EXPECT_EQ(query_spd(idx, 3, 2), 2);
    for (NodeId v = 1; v <= 3; ++v) EXPECT_EQ(query_spd(idx, v, v), 0);
    auto counted = query_spd_counted(idx, 2, 3);
    EXPECT_EQ(counted.distance, 2);
    EXPECT_LE(counted.entries_touched, 4u);
}

TEST(QuerySpd, DisconnectedIsInf) {
    OrderedGraph g = graph_from({{1, 2}, {2, 3}, {10, 11}});
    LabelIndex idx = build_pll(g);
    EXPECT_EQ(query_spd(idx, *g.rank_of(1), *g.rank_of(11)), kInfDistance);
    EXPECT_EQ(query_spd(idx, *g.rank_of(1), *g.rank_of(3)), 2);
}

TEST(QuerySpd, ExactOnRandomGraphs) {
    for (std::uint64_t seed = 100; seed < 105; ++seed) {
        OrderedGraph g = reorder_by_degree(gen::erdos_renyi(150, 0.03, seed));
        expect_exact_against_bfs(g, build_pll(g));
    }
    OrderedGraph pa = reorder_by_degree(gen::preferential_attachment(250, 2, 9));
    expect_exact_against_bfs(pa, build_pll(pa));
}

TEST(LabelIndexInvariants, SortedSelfEntryAndExactDistances) {
    OrderedGraph g = reorder_by_degree(gen::erdos_renyi(200, 0.02, 4));
    LabelIndex idx = build_pll(g);
    for (NodeId v = 1; v <= g.node_count(); ++v) {
        auto l = idx.label(v);
        ASSERT_FALSE(l.empty());
        EXPECT_EQ(l.back(), (LabelEntry{v, 0}));
        for (std::size_t i = 1; i < l.size(); ++i) EXPECT_LT(l[i - 1].landmark, l[i].landmark);
        auto d = bfs_distances(g, v);
        for (const LabelEntry& e : l) {
            EXPECT_LE(e.landmark, v);
            EXPECT_EQ(e.distance, d[e.landmark]);
        }
    }
}

TEST(QuerySpdCounted, MergeBoundAndConsistency) {
    OrderedGraph g = reorder_by_degree(gen::preferential_attachment(500, 3, 2));
    LabelIndex idx = build_pll(g);
    auto rng = make_stream(5, 5);
    for (int i = 0; i < 2000; ++i) {
        NodeId u = static_cast<NodeId>(1 + uniform_below(rng, g.node_count()));
        NodeId v = static_cast<NodeId>(1 + uniform_below(rng, g.node_count()));
        auto r = query_spd_counted(idx, u, v);
        EXPECT_LE(r.entries_touched, idx.label(u).size() + idx.label(v).size());
        EXPECT_EQ(r.distance, query_spd(idx, u, v));
    }
    for (NodeId v = 1; v <= g.node_count(); ++v) EXPECT_LE(query_spd_counted(idx, v, v).entries_touched, 2 * idx.label(v).size());
}

TEST(BuildPll, DeterministicBuilds) {
    OrderedGraph g = reorder_by_degree(gen::preferential_attachment(400, 2, 77));
    TempDir tmp;
    save_labels(build_pll(g), tmp / "a.dhlb");
    save_labels(build_pll(g), tmp / "b.dhlb");
    EXPECT_EQ(read_file(tmp / "a.dhlb"), read_file(tmp / "b.dhlb"));
}

TEST(BuildPll, DistanceOverflowIsRejected) {
    // rank 1 is the interior node next to one end, so its BFS reaches hop 69998
    OrderedGraph g = reorder_by_degree(gen::path(70000));
    EXPECT_THROW(build_pll(g), Error);
}

TEST(ReferenceDistances, MatchesRepeatedBfs) {
    OrderedGraph g = reorder_by_degree(gen::erdos_renyi(200, 0.05, 1));
    DistanceTable t = build_reference_distances(g);
    for (NodeId u = 1; u <= g.node_count(); ++u) {
        auto d = bfs_distances(g, u);
        for (NodeId v = 1; v <= g.node_count(); ++v) {
            EXPECT_EQ(t.at(u, v), bfs_hops(d, v));
            EXPECT_EQ(t.at(u, v), t.at(v, u));
        }
    }
}

TEST(ReferenceDistances, SingleNodeAndCap) {
    OrderedGraph one = reorder_by_degree(RawGraph::from_edges({}, std::vector<OriginalId>{3}));
    DistanceTable t = build_reference_distances(one);
    ASSERT_EQ(t.node_count(), 1u);
    EXPECT_EQ(t.at(1, 1), 0);
    EXPECT_THROW(build_reference_distances(reorder_by_degree(gen::path(20)), 10), Error);
}

TEST(LabelFile, GoldenBytesForPathGraph) {
    TempDir tmp;
    save_labels(build_pll(path3()), tmp / "p.dhlb");
    // magic, version 1, n = 3, then (count, (landmark - 1, distance)...) per node, then CRC-32
    const std::vector<unsigned char> expected = {
        'D', 'H', 'L', 'B', 1, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0,
        1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
        2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0,
        2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0,
        0xae, 0xc0, 0xd0, 0x0d,
    };
    const std::string bytes = read_file(tmp / "p.dhlb");
    EXPECT_EQ(std::vector<unsigned char>(bytes.begin(), bytes.end()), expected);
}

TEST(LabelFile, RoundTripAndCorruption) {
    OrderedGraph g = reorder_by_degree(gen::preferential_attachment(300, 3, 8));
    LabelIndex idx = build_pll(g);
    TempDir tmp;
    save_labels(idx, tmp / "l.dhlb");
    LabelIndex back = load_labels(tmp / "l.dhlb");
    EXPECT_EQ(back, idx);
    save_labels(back, tmp / "m.dhlb");
    EXPECT_EQ(read_file(tmp / "l.dhlb"), read_file(tmp / "m.dhlb"));

    std::string bytes = read_file(tmp / "l.dhlb");
    bytes[bytes.size() / 2] ^= 0x40;
    write_file(tmp / "bad.dhlb", bytes);
    EXPECT_THROW(load_labels(tmp / "bad.dhlb"), Error);

    write_file(tmp / "short.dhlb", read_file(tmp / "l.dhlb").substr(0, 30));
    EXPECT_THROW(load_labels(tmp / "short.dhlb"), Error);
}
