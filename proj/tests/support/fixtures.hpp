#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <unistd.h>
#include <vector>

#include "labeltok/graph.hpp"

#ifndef LABELTOK_TEST_DATA_DIR
#error "LABELTOK_TEST_DATA_DIR must be defined"
#endif

namespace labeltok::testing {

inline std::filesystem::path data_dir() { return LABELTOK_TEST_DATA_DIR; }

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("labeltok_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline OrderedGraph graph_from(std::vector<std::pair<OriginalId, OriginalId>> edges) {
    return reorder_by_degree(RawGraph::from_edges(edges));
}

/// Ranks 1 - 2, 1 - 3.
inline OrderedGraph path3() { return graph_from({{1, 2}, {1, 3}}); }

inline OrderedGraph triangle() { return graph_from({{1, 2}, {2, 3}, {1, 3}}); }

/// Path 4 - 1 - 2 - 3 - 5; ranks equal the ids. L(5) holds landmarks 1, 2, 3 at distances 3, 2, 1.
inline OrderedGraph path5() { return graph_from({{4, 1}, {1, 2}, {2, 3}, {3, 5}}); }

} // namespace labeltok::testing
