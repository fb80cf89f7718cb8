#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "labeltok/common.hpp"
#include "labeltok/pll.hpp"
#include "labeltok/sampler.hpp"

namespace labeltok {

/// Bias codes. Finite hop counts occupy [0, kMaxDistance].
inline constexpr std::uint16_t kBiasInf = 0xFFFF;
inline constexpr std::uint16_t kBiasMask = 0xFFFE;

/// Square SPD matrix over the slots of one token, row-major.
struct BiasMatrix {
    std::uint32_t dim = 0;
    std::vector<std::uint16_t> values;

    std::uint16_t at(std::size_t i, std::size_t j) const { return values[i * dim + j]; }

    friend bool operator==(const BiasMatrix&, const BiasMatrix&) = default;
};

/**
 * Memo of pairwise label queries shared by all tokens.
 *
 * Neighboring tokens overlap heavily, so the same pair is requested many
 * times. Keys are unordered pairs. Once `capacity` entries are stored, new
 * pairs are computed but not inserted. Safe for concurrent use.
 */
class PairCache {
public:
    explicit PairCache(std::size_t capacity = std::size_t{1} << 22);

    /// Cached value of query_spd(idx, u, v), computing and inserting it on a miss.
    Distance distance(const LabelIndex& idx, NodeId u, NodeId v);

    std::uint64_t hits() const noexcept { return hits_.load(std::memory_order_relaxed); }
    std::uint64_t misses() const noexcept { return misses_.load(std::memory_order_relaxed); }
    std::size_t size() const;

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<std::uint64_t, Distance> map;
    };

    std::size_t per_shard_capacity_;
    std::unique_ptr<Shard[]> shards_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> misses_{0};
};

/// Fills a token's bias matrix. With a null cache every pair goes straight to the labels.
BiasMatrix build_bias(const LabelIndex& idx, std::span<const std::uint32_t> token, PairCache* cache);

struct BiasStats {
    std::uint64_t pair_requests = 0;  // real off-diagonal pairs, counted once per unordered pair per token
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;

    double hit_rate() const noexcept { return pair_requests == 0 ? 0.0 : static_cast<double>(cache_hits) / pair_requests; }
};

/// All bias matrices for a token set, flattened: node v's matrix starts at (v - 1) * token_length^2.
struct BiasSet {
    std::uint32_t token_length = 0;
    std::vector<std::uint16_t> values;

    std::size_t node_count() const noexcept {
        return token_length == 0 ? 0 : values.size() / (std::size_t{token_length} * token_length);
    }
    std::span<const std::uint16_t> matrix(NodeId v) const {
        const std::size_t sq = std::size_t{token_length} * token_length;
        return {values.data() + std::size_t{v - 1} * sq, sq};
    }

    friend bool operator==(const BiasSet&, const BiasSet&) = default;
};

struct BiasBuildOptions {
    unsigned threads = 1;
    bool use_cache = true;
    std::size_t cache_capacity = std::size_t{1} << 22;
};

BiasSet build_all_bias(const LabelIndex& idx, const TokenSet& tokens, const BiasBuildOptions& opts, BiasStats* stats = nullptr);

// "DHBS" bias file.
void save_bias(const BiasSet& bias, const std::filesystem::path& path);
BiasSet load_bias(const std::filesystem::path& path);

} // namespace labeltok
