#include "labeltok/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string_view>

#include "labeltok/binio.hpp"
#include "labeltok/rng.hpp"

namespace labeltok {

namespace {

constexpr binio::Magic kFeatureMagic{'D', 'H', 'F', 'T'};
constexpr std::uint32_t kBundleVersion = 1;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view tok) {
    T v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
    return v;
}

bool is_skippable(std::string_view line) {
    line = trim(line);
    return line.empty() || line.front() == '#';
}

// Maps each data row of a CSV keyed by original id onto ranks; calls on_row(rank, fields[1..]).
template <typename OnRow>
void read_keyed_csv(const std::filesystem::path& path, const OrderedGraph& g, OnRow&& on_row) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<bool> seen(g.node_count() + 1, false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line)) continue;
        auto fields = split_commas(line);
        auto id = parse_number<OriginalId>(fields[0]);
        if (!id) throw ParseError(path.string(), lineno, "node id is not an integer");
        auto rank = g.rank_of(*id);
        if (!rank) throw ParseError(path.string(), lineno, "node " + std::to_string(*id) + " is not in the graph");
        if (seen[*rank]) throw ParseError(path.string(), lineno, "duplicate row for node " + std::to_string(*id));
        seen[*rank] = true;
        on_row(*rank, std::span<const std::string_view>(fields).subspan(1), lineno);
    }
    for (NodeId v = 1; v <= g.node_count(); ++v) {
        if (!seen[v]) throw Error(path.string() + ": missing row for node " + std::to_string(g.original_id(v)));
    }
}

bool starts_with_magic(const std::filesystem::path& path, const binio::Magic& m) {
    std::ifstream in(path, std::ios::binary);
    char head[4] = {};
    in.read(head, 4);
    return in.gcount() == 4 && std::equal(head, head + 4, m.begin());
}

std::string hex32(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open for writing: " + path.string());
    out << text;
    out.close();
    if (!out) throw Error("write failed: " + path.string());
}

std::size_t count_data_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string line;
    std::size_t k = 0;
    while (std::getline(in, line)) k += is_skippable(line) ? 0 : 1;
    return k;
}

} // namespace

FeatureMatrix load_features(const std::filesystem::path& path, const OrderedGraph& g) {
    const std::size_t n = g.node_count();
    FeatureMatrix out;
    out.rows = n;

    if (starts_with_magic(path, kFeatureMagic)) {
        FeatureMatrix raw = read_features_binary(path);
        if (raw.rows != n)
            throw Error(path.string() + ": dimension mismatch, " + std::to_string(raw.rows) + " rows for " + std::to_string(n) + " nodes");
        out.dim = raw.dim;
        out.values.resize(n * out.dim);
        auto ranks = g.ranks_by_original();
        for (std::size_t i = 0; i < n; ++i) {
            auto src = raw.row(i);
            std::copy(src.begin(), src.end(), out.values.begin() + static_cast<std::ptrdiff_t>((ranks[i] - 1) * out.dim));
        }
        return out;
    }

    std::optional<std::uint32_t> dim;
    read_keyed_csv(path, g, [&](NodeId v, std::span<const std::string_view> fields, std::size_t lineno) {
        if (!dim) {
            dim = static_cast<std::uint32_t>(fields.size());
            if (*dim == 0 || fields[0].empty()) throw ParseError(path.string(), lineno, "row has no feature values");
            out.dim = *dim;
            out.values.assign(n * out.dim, 0.0f);
        }
        if (fields.size() != *dim)
            throw ParseError(path.string(), lineno, "dimension mismatch, expected " + std::to_string(*dim) + " values");
        for (std::size_t k = 0; k < fields.size(); ++k) {
            auto x = parse_number<float>(fields[k]);
            if (!x) throw ParseError(path.string(), lineno, "bad feature value '" + std::string(fields[k]) + "'");
            if (!std::isfinite(*x)) throw ParseError(path.string(), lineno, "non-finite feature value");
            out.values[(v - 1) * out.dim + k] = *x;
        }
    });
    return out;
}

void save_features(const FeatureMatrix& fm, const std::filesystem::path& path) {
    if (fm.dim == 0) throw Error("feature matrix has zero columns");
    binio::Writer w(path);
    w.magic(kFeatureMagic);
    w.u64(fm.rows);
    w.u32(fm.dim);
    for (float x : fm.values) w.f32(x);
    w.finish();
}

FeatureMatrix read_features_binary(const std::filesystem::path& path) {
    binio::Reader r(path);
    r.expect_magic(kFeatureMagic);
    FeatureMatrix fm;
    fm.rows = r.u64();
    fm.dim = r.u32();
    if (fm.dim == 0) throw Error(path.string() + ": zero feature dimension");
    if (fm.rows > r.remaining() / 4 / fm.dim) throw Error(path.string() + ": header inconsistent with file size");
    fm.values.resize(fm.rows * fm.dim);
    for (auto& x : fm.values) {
        x = r.f32();
        if (!std::isfinite(x)) throw Error(path.string() + ": non-finite feature value");
    }
    r.expect_end();
    return fm;
}

ClassLabels load_class_labels(const std::filesystem::path& path, const OrderedGraph& g) {
    ClassLabels out;
    out.classes.assign(g.node_count(), 0);
    read_keyed_csv(path, g, [&](NodeId v, std::span<const std::string_view> fields, std::size_t lineno) {
        if (fields.size() != 1) throw ParseError(path.string(), lineno, "expected node-id,class");
        auto c = parse_number<std::uint32_t>(fields[0]);
        if (!c) throw ParseError(path.string(), lineno, "class is not a non-negative integer");
        out.classes[v - 1] = *c;
    });
    std::vector<bool> used;
    for (auto c : out.classes) {
        if (c >= used.size()) used.resize(c + 1, false);
        used[c] = true;
    }
    out.num_classes = static_cast<std::uint32_t>(used.size());
    for (std::size_t c = 0; c < used.size(); ++c) {
        if (!used[c]) throw Error(path.string() + ": classes are not contiguous, class " + std::to_string(c) + " unused");
    }
    return out;
}

const char* to_string(SplitTag tag) {
    switch (tag) {
    case SplitTag::Train: return "train";
    case SplitTag::Valid: return "valid";
    case SplitTag::Test: return "test";
    }
    return "?";
}

SplitAssignment make_splits(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error("splits need at least one node");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    auto gen = make_stream(seed, 0x5B117ULL);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(gen, i + 1)]);

    const std::size_t train = n * 6 / 10;
    const std::size_t valid = n * 2 / 10;
    SplitAssignment s;
    s.seed = seed;
    s.tags.assign(n, SplitTag::Test);
    for (std::size_t i = 0; i < train; ++i) s.tags[perm[i]] = SplitTag::Train;
    for (std::size_t i = train; i < train + valid; ++i) s.tags[perm[i]] = SplitTag::Valid;
    return s;
}

void export_bundle(const std::filesystem::path& dir, const BundleInputs& in) {
    namespace bf = bundle_files;
    const std::size_t n = in.tokens.node_count();
    if (in.features.dim == 0) throw Error("feature matrix has zero columns");
    if (in.bias.token_length != in.tokens.token_length) throw Error("bias and token lengths disagree");
    if (in.bias.node_count() != n || in.features.rows != n || in.labels.classes.size() != n || in.splits.tags.size() != n)
        throw Error("bundle parts disagree on node count");

    std::filesystem::create_directories(dir);
    // a stale manifest must not vouch for half-written files
    std::filesystem::remove(dir / bf::kManifest);

    save_tokens(in.tokens, dir / bf::kTokens);
    save_bias(in.bias, dir / bf::kBias);
    save_features(in.features, dir / bf::kFeatures);

    std::string labels;
    std::string splits;
    for (std::size_t i = 0; i < n; ++i) {
        labels += std::to_string(i) + ',' + std::to_string(in.labels.classes[i]) + '\n';
        splits += std::to_string(i) + ',' + to_string(in.splits.tags[i]) + '\n';
    }
    write_text(dir / bf::kLabels, labels);
    write_text(dir / bf::kSplits, splits);

    std::ostringstream m;
    m << "# labeltok bundle\n";
    m << "bundle_version=" << kBundleVersion << '\n';
    m << "n=" << n << '\n';
    m << "token_length=" << in.tokens.token_length << '\n';
    m << "feature_dim=" << in.features.dim << '\n';
    m << "num_classes=" << in.labels.num_classes << '\n';
    m << "split_seed=" << in.splits.seed << '\n';
    for (const auto& [k, v] : in.config) m << "config." << k << '=' << v << '\n';
    for (const char* name : {bf::kTokens, bf::kBias, bf::kFeatures, bf::kLabels, bf::kSplits}) {
        m << "file." << name << '=' << std::filesystem::file_size(dir / name) << ' ' << hex32(binio::crc32_file(dir / name)) << '\n';
    }
    write_text(dir / bf::kManifest, m.str());
}

ManifestEntries read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    ManifestEntries out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line)) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(path.string(), lineno, "expected key=value");
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

BundleCheck verify_bundle(const std::filesystem::path& dir) {
    namespace bf = bundle_files;
    BundleCheck check;
    auto& problems = check.problems;

    ManifestEntries entries;
    try {
        entries = read_manifest(dir / bf::kManifest);
    } catch (const Error& e) {
        problems.push_back(e.what());
        return check;
    }
    std::map<std::string, std::string> kv(entries.begin(), entries.end());
    auto number = [&](const std::string& key) -> std::optional<std::uint64_t> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return parse_number<std::uint64_t>(it->second);
    };
    auto n = number("n");
    auto token_length = number("token_length");
    if (!n || !token_length) {
        problems.push_back("manifest lacks n or token_length");
        return check;
    }

    for (const char* name : {bf::kTokens, bf::kBias, bf::kFeatures, bf::kLabels, bf::kSplits}) {
        auto it = kv.find(std::string("file.") + name);
        if (it == kv.end()) {
            problems.push_back(std::string("manifest does not list ") + name);
            continue;
        }
        const auto path = dir / name;
        if (!std::filesystem::exists(path)) {
            problems.push_back(std::string("missing file ") + name);
            continue;
        }
        std::istringstream fields(it->second);
        std::uint64_t size = 0;
        std::string crc;
        fields >> size >> crc;
        if (std::filesystem::file_size(path) != size) problems.push_back(std::string("size mismatch for ") + name);
        if (hex32(binio::crc32_file(path)) != crc) problems.push_back(std::string("checksum mismatch for ") + name);
    }
    if (!problems.empty()) return check;

    try {
        TokenSet tokens = load_tokens(dir / bf::kTokens);
        if (tokens.node_count() != *n || tokens.token_length != *token_length) problems.push_back("token header disagrees with manifest");
        BiasSet bias = load_bias(dir / bf::kBias);
        if (bias.node_count() != *n || bias.token_length != *token_length) problems.push_back("bias header disagrees with manifest");
        FeatureMatrix fm = read_features_binary(dir / bf::kFeatures);
        if (fm.rows != *n) problems.push_back("feature header disagrees with manifest");
        if (auto fd = number("feature_dim"); !fd || *fd != fm.dim) problems.push_back("feature_dim disagrees with feature file");
    } catch (const Error& e) {
        problems.push_back(e.what());
    }
    for (const char* name : {bf::kLabels, bf::kSplits}) {
        if (count_data_lines(dir / name) != *n) problems.push_back(std::string(name) + " row count disagrees with manifest");
    }
    return check;
}

} // namespace labeltok
