#include "labeltok/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "labeltok/binio.hpp"
#include "labeltok/parallel.hpp"
#include "labeltok/rng.hpp"

namespace labeltok {

namespace {
constexpr binio::Magic kTokenMagic{'D', 'H', 'T', 'K'};
constexpr std::uint32_t kTokenVersion = 1;
constexpr std::uint32_t kMaxTokenLength = 1u << 16;
} // namespace

void SamplerConfig::validate() const {
    if (!std::isfinite(r_in) || !std::isfinite(r_out)) throw Error("sampling exponents must be finite");
    if (std::uint64_t{s_in} + s_out + 1 + virtual_count > kMaxTokenLength) throw Error("token length too large");
}

SegmentPlan plan_segments(const SamplerConfig& cfg, std::size_t in_available, std::size_t out_available) {
    auto take_in = static_cast<std::uint32_t>(std::min<std::size_t>(cfg.s_in, in_available));
    auto take_out = static_cast<std::uint32_t>(std::min<std::size_t>(cfg.s_out, out_available));
    if (cfg.rebalance) {
        const std::uint32_t spare_in = cfg.s_in - take_in;
        const std::uint32_t spare_out = cfg.s_out - take_out;
        take_in = static_cast<std::uint32_t>(std::min<std::size_t>(in_available, std::size_t{cfg.s_in} + spare_out));
        take_out = static_cast<std::uint32_t>(std::min<std::size_t>(out_available, std::size_t{cfg.s_out} + spare_in));
    }
    // at most one side borrows, and only from slack the other side left unused
    const std::uint32_t in_borrowed = take_in > cfg.s_in ? take_in - cfg.s_in : 0;
    const std::uint32_t out_borrowed = take_out > cfg.s_out ? take_out - cfg.s_out : 0;
    const std::uint32_t in_len = cfg.s_in + in_borrowed - out_borrowed;
    return {in_len, cfg.s_in + cfg.s_out - in_len, take_in, take_out};
}

std::vector<NodeId> weighted_sample(std::span<const WeightedArc> candidates, std::uint32_t k, double exponent,
                                    std::mt19937_64& gen) {
    std::vector<NodeId> chosen;
    if (k >= candidates.size()) {
        for (const WeightedArc& a : candidates) chosen.push_back(a.node);
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }
    // Exponential race: keep the k smallest E / w with E ~ Exp(1) and w = d^exponent.
    // Compared in log space so that extreme exponents cannot overflow the weight.
    struct Keyed {
        double key;
        NodeId node;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(candidates.size());
    for (const WeightedArc& a : candidates) {
        const double e = -std::log(uniform_open01(gen));
        keyed.push_back({std::log(e) - exponent * std::log(static_cast<double>(a.distance)), a.node});
    }
    auto less = [](const Keyed& x, const Keyed& y) { return x.key < y.key || (x.key == y.key && x.node < y.node); };
    std::nth_element(keyed.begin(), keyed.begin() + k, keyed.end(), less);
    for (std::uint32_t i = 0; i < k; ++i) chosen.push_back(keyed[i].node);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

SubgraphToken sample_token(const LabelGraph& lg, NodeId v, const SamplerConfig& cfg, std::mt19937_64& gen) {
    auto in = lg.in_arcs(v);
    auto out = lg.out_arcs(v);
    const SegmentPlan plan = plan_segments(cfg, in.size(), out.size());

    SubgraphToken token;
    token.reserve(cfg.token_length());
    token.assign(cfg.virtual_count, kVirtualSlot);
    token.push_back(v);

    auto append_segment = [&](const std::vector<NodeId>& picked, std::uint32_t len) {
        token.insert(token.end(), picked.begin(), picked.end());
        token.insert(token.end(), len - picked.size(), kPadSlot);
    };
    append_segment(weighted_sample(in, plan.in_take, cfg.r_in, gen), plan.in_len);
    append_segment(weighted_sample(out, plan.out_take, cfg.r_out, gen), plan.out_len);
    return token;
}

SubgraphToken sample_token(const LabelGraph& lg, NodeId v, const SamplerConfig& cfg) {
    auto gen = make_stream(cfg.seed, v);
    return sample_token(lg, v, cfg, gen);
}

TokenSet sample_all_tokens(const LabelGraph& lg, const SamplerConfig& cfg, unsigned threads) {
    cfg.validate();
    TokenSet set;
    set.token_length = cfg.token_length();
    const std::size_t n = lg.node_count();
    set.slots.resize(n * set.token_length);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SubgraphToken t = sample_token(lg, static_cast<NodeId>(i + 1), cfg);
            std::copy(t.begin(), t.end(), set.slots.begin() + static_cast<std::ptrdiff_t>(i * set.token_length));
        }
    });
    return set;
}

void save_tokens(const TokenSet& tokens, const std::filesystem::path& path) {
    binio::Writer w(path);
    w.magic(kTokenMagic);
    w.u32(kTokenVersion);
    w.u64(tokens.node_count());
    w.u32(tokens.token_length);
    for (std::uint32_t s : tokens.slots) w.u32(s >= kVirtualSlot ? s : s - 1);
    w.finish();
}

TokenSet load_tokens(const std::filesystem::path& path) {
    binio::Reader r(path);
    r.expect_magic(kTokenMagic);
    if (auto ver = r.u32(); ver != kTokenVersion) throw Error(path.string() + ": unsupported token version " + std::to_string(ver));
    const std::uint64_t n = r.u64();
    TokenSet set;
    set.token_length = r.u32();
    if (set.token_length == 0 || n > r.remaining() / 4 / set.token_length)
        throw Error(path.string() + ": header inconsistent with file size");
    set.slots.resize(n * set.token_length);
    for (auto& s : set.slots) {
        const std::uint32_t raw = r.u32();
        if (raw < kVirtualSlot && raw >= n) throw Error(path.string() + ": node id out of range");
        s = raw >= kVirtualSlot ? raw : raw + 1;
    }
    r.expect_end();
    return set;
}

} // namespace labeltok
