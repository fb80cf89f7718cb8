#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "labeltok/dataset.hpp"
#include "labeltok/sampler.hpp"

namespace labeltok {

struct PipelineConfig {
    SamplerConfig sampler;
    std::filesystem::path graph;
    std::filesystem::path features;
    std::filesystem::path classes;
    std::filesystem::path labels;  // DHLB label index
    std::filesystem::path out;
    bool verify = false;           // check every bias entry against brute-force BFS when n <= oracle_cap
    unsigned threads = 1;
    std::size_t oracle_cap = 1000;
    bool use_cache = true;

    /// Echoed into MANIFEST as config.<key>=<value>, in this order.
    ManifestEntries manifest_entries() const;
};

/*
 * Command implementations behind the CLI. Each returns the process exit code,
 * writes results to `out` and diagnostics to `err`.
 */

int cmd_label(const std::filesystem::path& graph, const std::filesystem::path& labels_out, std::ostream& out, std::ostream& err);

int cmd_precompute(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

/// Ids are ranks, or original ids when `graph` is given.
int cmd_query(const std::filesystem::path& labels, std::int64_t u, std::int64_t v,
              const std::optional<std::filesystem::path>& graph, std::ostream& out, std::ostream& err);

int cmd_verify(const std::filesystem::path& graph, const std::filesystem::path& labels, std::size_t oracle_cap,
               std::ostream& out, std::ostream& err);

int cmd_check_bundle(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

/// label + precompute; the index is written to <out>/index.dhlb unless cfg.labels is set.
int cmd_run(PipelineConfig cfg, std::ostream& out, std::ostream& err);

} // namespace labeltok
