#include <gtest/gtest.h>

#include "labeltok/bias.hpp"
#include "labeltok/generators.hpp"
#include "support/fixtures.hpp"

using namespace labeltok;
using namespace labeltok::testing;

namespace {
constexpr std::uint32_t V = kVirtualSlot;
constexpr std::uint32_t P = kPadSlot;
constexpr std::uint16_t I = kBiasInf;
constexpr std::uint16_t M = kBiasMask;
} // namespace

TEST(BuildBias, PathGraphToken) {
    LabelIndex idx = build_pll(path3());
    const std::vector<std::uint32_t> token{V, 2, 1, P};
    BiasMatrix m = build_bias(idx, token, nullptr);
    ASSERT_EQ(m.dim, 4u);
    const std::vector<std::uint16_t> expected{
        I, I, I, M,
        I, 0, 1, M,
        I, 1, 0, M,
        M, M, M, M,
    };
    EXPECT_EQ(m.values, expected);
}

TEST(BuildBias, EgoOnlyTokenIsAllSentinels) {
    LabelIndex idx = build_pll(path3());
    const std::vector<std::uint32_t> token{V, 3, P, P};
    BiasMatrix m = build_bias(idx, token, nullptr);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == 1 && j == 1) EXPECT_EQ(m.at(i, j), 0);
            else EXPECT_TRUE(m.at(i, j) == I || m.at(i, j) == M);
        }
    }
}

TEST(PairCache, SecondLookupIsAHit) {
    LabelIndex idx = build_pll(path3());
    PairCache cache;
    EXPECT_EQ(cache.distance(idx, 2, 3), 2);
    EXPECT_EQ(cache.misses(), 1u);
    EXPECT_EQ(cache.distance(idx, 3, 2), 2);
    EXPECT_EQ(cache.misses(), 1u);
    EXPECT_EQ(cache.hits(), 1u);
    EXPECT_EQ(cache.size(), 1u);
}

TEST(PairCache, CapacityBoundsStorageNotResults) {
    OrderedGraph g = reorder_by_degree(gen::erdos_renyi(100, 0.05, 2));
    LabelIndex idx = build_pll(g);
    PairCache tiny(64);
    for (NodeId u = 1; u <= 100; ++u)
        for (NodeId v = u + 1; v <= 100; ++v) ASSERT_EQ(tiny.distance(idx, u, v), query_spd(idx, u, v));
    EXPECT_LE(tiny.size(), 64u);
}

TEST(BuildAllBias, SharedPairsAcrossTokensHitTheCache) {
    LabelIndex idx = build_pll(path3());
    TokenSet tokens;
    tokens.token_length = 4;
    // all three tokens contain the pair {2, 3}
    tokens.slots = {V, 1, 2, 3, V, 2, 3, P, V, 3, 2, P};
    BiasStats stats;
    BiasSet set = build_all_bias(idx, tokens, {}, &stats);
    EXPECT_EQ(stats.pair_requests, 3u + 1u + 1u);
    EXPECT_EQ(stats.cache_misses, 3u);
    EXPECT_EQ(stats.cache_hits, 2u);
    EXPECT_LE(stats.pair_requests, tokens.node_count() * 4u * 4u);
}

TEST(BuildAllBias, OracleSweepOnRandomGraph) {
    OrderedGraph g = reorder_by_degree(gen::erdos_renyi(200, 0.05, 11));
    LabelIndex idx = build_pll(g);
    LabelGraph lg(idx);
    SamplerConfig cfg;
    cfg.s_in = 6;
    cfg.s_out = 5;
    TokenSet tokens = sample_all_tokens(lg, cfg);
    BiasStats stats;
    BiasSet bias = build_all_bias(idx, tokens, {}, &stats);
    DistanceTable oracle = build_reference_distances(g);
    const std::size_t t = tokens.token_length;
    EXPECT_LE(stats.pair_requests, g.node_count() * t * t);
    EXPECT_GT(stats.hit_rate(), 0.0);
    for (NodeId v = 1; v <= g.node_count(); ++v) {
        auto tok = tokens.token(v);
        auto m = bias.matrix(v);
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                const auto value = m[i * t + j];
                EXPECT_EQ(value, m[j * t + i]);
                if (tok[i] == P || tok[j] == P) {
                    EXPECT_EQ(value, M);
                } else if (tok[i] == V || tok[j] == V) {
                    EXPECT_EQ(value, I);
                } else {
                    ASSERT_NE(value, I) << "real pair inside one token must be connected";
                    EXPECT_EQ(value, oracle.at(tok[i], tok[j]));
                }
            }
        }
    }
}

TEST(BuildAllBias, CacheAndThreadsAreTransparent) {
    OrderedGraph g = reorder_by_degree(gen::preferential_attachment(400, 3, 6));
    LabelIndex idx = build_pll(g);
    TokenSet tokens = sample_all_tokens(LabelGraph(idx), SamplerConfig{});
    BiasSet cached = build_all_bias(idx, tokens, {.threads = 1, .use_cache = true});
    BiasSet plain = build_all_bias(idx, tokens, {.threads = 1, .use_cache = false});
    BiasSet threaded = build_all_bias(idx, tokens, {.threads = 8, .use_cache = true});
    EXPECT_EQ(cached, plain);
    EXPECT_EQ(cached, threaded);
}

TEST(BiasFile, RoundTrip) {
    LabelIndex idx = build_pll(path3());
    TokenSet tokens;
    tokens.token_length = 4;
    tokens.slots = {V, 1, 2, 3, V, 2, 1, P, V, 3, 1, P};
    BiasSet set = build_all_bias(idx, tokens, {});
    TempDir tmp;
    save_bias(set, tmp / "b.dhbs");
    EXPECT_EQ(load_bias(tmp / "b.dhbs"), set);
    const std::string bytes = read_file(tmp / "b.dhbs");
    EXPECT_EQ(bytes.size(), 20u + 3u * 16u * 2u);
    EXPECT_EQ(bytes.substr(0, 4), "DHBS");
    // node 1, row 0, col 0: virtual pair -> INF
    EXPECT_EQ(bytes.substr(20, 2), std::string("\xFF\xFF", 2));
    write_file(tmp / "x.dhbs", bytes + "x");
    EXPECT_THROW(load_bias(tmp / "x.dhbs"), Error);
}
