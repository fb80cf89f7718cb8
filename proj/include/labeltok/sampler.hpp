#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <vector>

#include "labeltok/common.hpp"
#include "labeltok/labelgraph.hpp"

namespace labeltok {

/// Slot values outside the real rank range.
inline constexpr std::uint32_t kVirtualSlot = 0xFFFFFFFE;
inline constexpr std::uint32_t kPadSlot = 0xFFFFFFFF;

struct SamplerConfig {
    std::uint32_t s_in = 16;
    std::uint32_t s_out = 15;
    double r_in = -1.0;
    double r_out = -1.0;
    std::uint64_t seed = 42;
    /// Unused budget on one side may be spent on the other.
    bool rebalance = true;
    std::uint32_t virtual_count = 1;

    /// Real nodes per token: ego plus both neighbor budgets.
    std::uint32_t subgraph_size() const noexcept { return s_in + s_out + 1; }
    std::uint32_t token_length() const noexcept { return virtual_count + subgraph_size(); }

    /// Throws Error on non-finite exponents or an oversized token.
    void validate() const;
};

/**
 * Fixed-length token for one ego node.
 *
 * Layout: [VIRTUAL x virtual_count, ego, in-segment, out-segment]. Each
 * segment holds sampled neighbors ascending by rank, padded at its tail.
 */
using SubgraphToken = std::vector<std::uint32_t>;

/// Per-side slot counts after rebalancing: (in-segment length, out-segment length, in taken, out taken).
struct SegmentPlan {
    std::uint32_t in_len;
    std::uint32_t out_len;
    std::uint32_t in_take;
    std::uint32_t out_take;
};

SegmentPlan plan_segments(const SamplerConfig& cfg, std::size_t in_available, std::size_t out_available);

/**
 * Weighted sample without replacement of `k` arcs, weight distance^exponent,
 * using exponential keys. Returns the chosen nodes ascending.
 */
std::vector<NodeId> weighted_sample(std::span<const WeightedArc> candidates, std::uint32_t k, double exponent,
                                    std::mt19937_64& gen);

SubgraphToken sample_token(const LabelGraph& lg, NodeId v, const SamplerConfig& cfg, std::mt19937_64& gen);

/// Uses the per-node stream make_stream(cfg.seed, v).
SubgraphToken sample_token(const LabelGraph& lg, NodeId v, const SamplerConfig& cfg);

/// Tokens for ranks 1..n, flattened row-major (node v occupies row v - 1).
struct TokenSet {
    std::uint32_t token_length = 0;
    std::vector<std::uint32_t> slots;

    std::size_t node_count() const noexcept { return token_length == 0 ? 0 : slots.size() / token_length; }
    std::span<const std::uint32_t> token(NodeId v) const {
        return {slots.data() + std::size_t{v - 1} * token_length, token_length};
    }

    friend bool operator==(const TokenSet&, const TokenSet&) = default;
};

TokenSet sample_all_tokens(const LabelGraph& lg, const SamplerConfig& cfg, unsigned threads = 1);

// "DHTK" token file: real ids written as rank - 1.
void save_tokens(const TokenSet& tokens, const std::filesystem::path& path);
TokenSet load_tokens(const std::filesystem::path& path);

} // namespace labeltok
