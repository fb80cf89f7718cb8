#include <gtest/gtest.h>

#include <numeric>

#include "labeltok/generators.hpp"
#include "labeltok/graph.hpp"
#include "support/fixtures.hpp"

using namespace labeltok;
using namespace labeltok::testing;

TEST(LoadEdgeList, MinimalPath) {
    TempDir tmp;
    write_file(tmp / "g.txt", "0 1\n1 2\n");
    RawGraph g = load_edge_list(tmp / "g.txt");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(LoadEdgeList, SelfLoopDroppedNodeKept) {
    TempDir tmp;
    write_file(tmp / "g.txt", "5 5\n");
    RawGraph g = load_edge_list(tmp / "g.txt");
    ASSERT_EQ(g.node_count(), 1u);
    EXPECT_EQ(g.ids[0], 5);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(LoadEdgeList, DuplicatesAndReversalsCollapse) {
    TempDir tmp;
    write_file(tmp / "g.txt", "0 1\n1 0\n0 1\n");
    RawGraph g = load_edge_list(tmp / "g.txt");
    EXPECT_EQ(g.node_count(), 2u);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(LoadEdgeList, CommentsBlanksAndTabs) {
    TempDir tmp;
    write_file(tmp / "g.txt", "# header\n\n  3\t4  \n# 9 9\n4 5\r\n");
    RawGraph g = load_edge_list(tmp / "g.txt");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(LoadEdgeList, ParseErrorCarriesLineNumber) {
    TempDir tmp;
    write_file(tmp / "g.txt", "0 1\n1 x\n");
    try {
        load_edge_list(tmp / "g.txt");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    write_file(tmp / "h.txt", "0 1 2\n");
    EXPECT_THROW(load_edge_list(tmp / "h.txt"), ParseError);
}

TEST(LoadEdgeList, EmptyAndMissing) {
    TempDir tmp;
    write_file(tmp / "g.txt", "# nothing\n\n");
    EXPECT_THROW(load_edge_list(tmp / "g.txt"), Error);
    EXPECT_THROW(load_edge_list(tmp / "absent.txt"), Error);
}

TEST(Reorder, StarCenterGetsRankOne) {
    OrderedGraph g = graph_from({{7, 1}, {7, 2}, {7, 3}});
    EXPECT_EQ(g.rank_of(7), 1u);
    EXPECT_EQ(g.original_id(1), 7);
}

TEST(Reorder, PathMiddleFirst) {
    // a=10, b=20, c=30 along a - b - c
    OrderedGraph g = graph_from({{10, 20}, {20, 30}});
    EXPECT_EQ(g.rank_of(20), 1u);
    EXPECT_EQ(g.rank_of(10), 2u);
    EXPECT_EQ(g.rank_of(30), 3u);
}

TEST(Reorder, TriangleTiesByOriginalId) {
    OrderedGraph g = graph_from({{9, 4}, {4, 6}, {6, 9}});
    EXPECT_EQ(g.rank_of(4), 1u);
    EXPECT_EQ(g.rank_of(6), 2u);
    EXPECT_EQ(g.rank_of(9), 3u);
    EXPECT_FALSE(g.rank_of(5).has_value());
}

TEST(Reorder, CustomOrderingHook) {
    RawGraph raw = RawGraph::from_edges(std::vector<std::pair<OriginalId, OriginalId>>{{1, 2}, {2, 3}});
    OrderedGraph g = reorder(raw, [](const RawGraph& r) {
        std::vector<std::uint32_t> order(r.node_count());
        std::iota(order.rbegin(), order.rend(), 0u);
        return order;
    });
    EXPECT_EQ(g.rank_of(3), 1u);
    EXPECT_EQ(g.rank_of(1), 3u);

    auto bad = [](const RawGraph&) { return std::vector<std::uint32_t>{0, 0, 1}; };
    EXPECT_THROW(reorder(raw, bad), Error);
}

TEST(Reorder, InvariantsOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RawGraph raw = gen::erdos_renyi(120, 0.04, seed);
        OrderedGraph g = reorder_by_degree(raw);
        ASSERT_EQ(g.node_count(), raw.node_count());

        std::size_t degree_sum = 0;
        for (NodeId v = 1; v <= g.node_count(); ++v) {
            degree_sum += g.degree(v);
            auto nb = g.neighbors(v);
            EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
            EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
            for (NodeId w : nb) {
                auto back = g.neighbors(w);
                EXPECT_TRUE(std::binary_search(back.begin(), back.end(), v));
                EXPECT_NE(w, v);
            }
            if (v > 1) {
                // degree descending, ties by original id
                const bool ordered = g.degree(v - 1) > g.degree(v) ||
                                     (g.degree(v - 1) == g.degree(v) && g.original_id(v - 1) < g.original_id(v));
                EXPECT_TRUE(ordered) << "ranks " << v - 1 << "," << v;
            }
            // bijection
            EXPECT_EQ(g.rank_of(g.original_id(v)), v);
        }
        EXPECT_EQ(degree_sum, 2 * raw.edge_count());
    }
}

TEST(Bfs, SmallPath) {
    OrderedGraph g = path3();
    auto d = bfs_distances(g, 2);
    EXPECT_EQ(d[1], 1u);
    EXPECT_EQ(d[2], 0u);
    EXPECT_EQ(d[3], 2u);
}

TEST(Bfs, ComponentsAreUnreachable) {
    OrderedGraph g = graph_from({{1, 2}, {3, 4}});
    auto d = bfs_distances(g, g.rank_of(1).value());
    EXPECT_EQ(d[*g.rank_of(3)], kUnreachable);
    EXPECT_EQ(d[*g.rank_of(4)], kUnreachable);
    EXPECT_EQ(d[*g.rank_of(2)], 1u);
}

TEST(Bfs, ParentIsOneCloser) {
    OrderedGraph g = reorder_by_degree(gen::preferential_attachment(300, 2, 3));
    for (NodeId s : {1u, 17u, 250u}) {
        auto d = bfs_distances(g, s);
        EXPECT_EQ(d[s], 0u);
        for (NodeId v = 1; v <= g.node_count(); ++v) {
            if (v == s) continue;
            ASSERT_NE(d[v], kUnreachable);
            std::uint32_t best = kUnreachable;
            for (NodeId w : g.neighbors(v)) best = std::min(best, d[w]);
            EXPECT_EQ(best, d[v] - 1);
        }
    }
}
