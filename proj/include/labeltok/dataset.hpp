#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "labeltok/bias.hpp"
#include "labeltok/graph.hpp"
#include "labeltok/sampler.hpp"

namespace labeltok {

/// Dense float32 node attributes, one row per node.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::uint32_t dim = 0;
    std::vector<float> values;

    std::span<const float> row(std::size_t i) const { return {values.data() + i * dim, dim}; }

    friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;
};

/**
 * Reads features for the nodes of `g` and returns them in rank order.
 *
 * CSV input is "node-id,f1,...,fk" keyed by original id ('#' comments and
 * blank lines skipped). Binary input is a "DHFT" file whose rows follow
 * ascending original id. Every node needs exactly one finite row.
 */
FeatureMatrix load_features(const std::filesystem::path& path, const OrderedGraph& g);

// "DHFT" feature file, rows written as stored.
void save_features(const FeatureMatrix& fm, const std::filesystem::path& path);
FeatureMatrix read_features_binary(const std::filesystem::path& path);

struct ClassLabels {
    std::vector<std::uint32_t> classes;  // index v - 1
    std::uint32_t num_classes = 0;

    friend bool operator==(const ClassLabels&, const ClassLabels&) = default;
};

/// CSV "node-id,class" keyed by original id; classes must cover 0..C-1 without gaps.
ClassLabels load_class_labels(const std::filesystem::path& path, const OrderedGraph& g);

enum class SplitTag : std::uint8_t { Train, Valid, Test };

const char* to_string(SplitTag tag);

struct SplitAssignment {
    std::vector<SplitTag> tags;  // index v - 1
    std::uint64_t seed = 0;

    friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

/// Random 60/20/20 split: floor(0.6n) train, floor(0.2n) valid, the rest test.
/// Below five nodes the valid part is empty.
SplitAssignment make_splits(std::size_t n, std::uint64_t seed);

using ManifestEntries = std::vector<std::pair<std::string, std::string>>;

struct BundleInputs {
    const TokenSet& tokens;
    const BiasSet& bias;
    const FeatureMatrix& features;
    const ClassLabels& labels;
    const SplitAssignment& splits;
    ManifestEntries config;
};

namespace bundle_files {
inline constexpr const char* kTokens = "tokens.dhtk";
inline constexpr const char* kBias = "bias.dhbs";
inline constexpr const char* kFeatures = "features.dhft";
inline constexpr const char* kLabels = "labels.csv";
inline constexpr const char* kSplits = "splits.csv";
inline constexpr const char* kManifest = "MANIFEST";
} // namespace bundle_files

/// Writes the five data files, then MANIFEST with their sizes and CRC-32 checksums.
void export_bundle(const std::filesystem::path& dir, const BundleInputs& in);

struct BundleCheck {
    std::vector<std::string> problems;
    bool ok() const noexcept { return problems.empty(); }
};

/// Re-reads every file named in MANIFEST and checks checksums, sizes and header agreement.
BundleCheck verify_bundle(const std::filesystem::path& dir);

/// Parses "key=value" lines, skipping '#' comments.
ManifestEntries read_manifest(const std::filesystem::path& path);

} // namespace labeltok
