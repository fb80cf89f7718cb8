#include "labeltok/bias.hpp"

#include <algorithm>

#include "labeltok/binio.hpp"
#include "labeltok/parallel.hpp"

namespace labeltok {

namespace {

constexpr binio::Magic kBiasMagic{'D', 'H', 'B', 'S'};
constexpr std::uint32_t kBiasVersion = 1;

// Writes the dim x dim matrix for `token` into `out`; returns the number of real pairs queried.
std::uint64_t fill_bias(const LabelIndex& idx, std::span<const std::uint32_t> token, PairCache* cache,
                        std::span<std::uint16_t> out) {
    const std::size_t dim = token.size();
    std::uint64_t requests = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::uint32_t a = token[i];
        for (std::size_t j = i; j < dim; ++j) {
            const std::uint32_t b = token[j];
            std::uint16_t value;
            if (a == kPadSlot || b == kPadSlot) {
                value = kBiasMask;
            } else if (a == kVirtualSlot || b == kVirtualSlot) {
                value = kBiasInf;
            } else if (i == j) {
                value = 0;
            } else {
                ++requests;
                value = cache ? cache->distance(idx, a, b) : query_spd(idx, a, b);
            }
            out[i * dim + j] = value;
            out[j * dim + i] = value;
        }
    }
    return requests;
}

} // namespace

PairCache::PairCache(std::size_t capacity)
    : per_shard_capacity_((capacity + kShards - 1) / kShards), shards_(std::make_unique<Shard[]>(kShards)) {}

Distance PairCache::distance(const LabelIndex& idx, NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (std::uint64_t{u} << 32) | v;
    Shard& shard = shards_[(key * 0x9E3779B97F4A7C15ULL) >> 58];
    {
        std::lock_guard lock(shard.mu);
        if (auto it = shard.map.find(key); it != shard.map.end()) {
            hits_.fetch_add(1, std::memory_order_relaxed);
            return it->second;
        }
    }
    misses_.fetch_add(1, std::memory_order_relaxed);
    // computed outside the lock; concurrent writers of one key store the same value
    const Distance d = query_spd(idx, u, v);
    std::lock_guard lock(shard.mu);
    if (shard.map.size() < per_shard_capacity_) shard.map.insert_or_assign(key, d);
    return d;
}

std::size_t PairCache::size() const {
    std::size_t total = 0;
    for (std::size_t s = 0; s < kShards; ++s) {
        std::lock_guard lock(shards_[s].mu);
        total += shards_[s].map.size();
    }
    return total;
}

BiasMatrix build_bias(const LabelIndex& idx, std::span<const std::uint32_t> token, PairCache* cache) {
    BiasMatrix m;
    m.dim = static_cast<std::uint32_t>(token.size());
    m.values.assign(std::size_t{m.dim} * m.dim, 0);
    fill_bias(idx, token, cache, m.values);
    return m;
}

BiasSet build_all_bias(const LabelIndex& idx, const TokenSet& tokens, const BiasBuildOptions& opts, BiasStats* stats) {
    BiasSet set;
    set.token_length = tokens.token_length;
    const std::size_t n = tokens.node_count();
    const std::size_t sq = std::size_t{set.token_length} * set.token_length;
    set.values.resize(n * sq);

    std::unique_ptr<PairCache> cache;
    if (opts.use_cache) cache = std::make_unique<PairCache>(opts.cache_capacity);

    std::atomic<std::uint64_t> requests{0};
    parallel_for(n, opts.threads, [&](std::size_t begin, std::size_t end) {
        std::uint64_t local = 0;
        for (std::size_t i = begin; i < end; ++i) {
            local += fill_bias(idx, tokens.token(static_cast<NodeId>(i + 1)), cache.get(),
                               std::span(set.values.data() + i * sq, sq));
        }
        requests.fetch_add(local, std::memory_order_relaxed);
    });

    if (stats) {
        stats->pair_requests = requests.load();
        stats->cache_hits = cache ? cache->hits() : 0;
        stats->cache_misses = cache ? cache->misses() : stats->pair_requests;
    }
    return set;
}

void save_bias(const BiasSet& bias, const std::filesystem::path& path) {
    binio::Writer w(path);
    w.magic(kBiasMagic);
    w.u32(kBiasVersion);
    w.u64(bias.node_count());
    w.u32(bias.token_length);
    for (std::uint16_t v : bias.values) w.u16(v);
    w.finish();
}

BiasSet load_bias(const std::filesystem::path& path) {
    binio::Reader r(path);
    r.expect_magic(kBiasMagic);
    if (auto ver = r.u32(); ver != kBiasVersion) throw Error(path.string() + ": unsupported bias version " + std::to_string(ver));
    const std::uint64_t n = r.u64();
    BiasSet set;
    set.token_length = r.u32();
    const std::size_t sq = std::size_t{set.token_length} * set.token_length;
    if (sq == 0 || n > r.remaining() / 2 / sq) throw Error(path.string() + ": header inconsistent with file size");
    set.values.resize(n * sq);
    for (auto& v : set.values) v = r.u16();
    r.expect_end();
    return set;
}

} // namespace labeltok
