#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace labeltok {

/// Internal node id: the 1-based rank under the graph ordering. 0 is never a real node.
using NodeId = std::uint32_t;

/// Hop count as stored in labels and bias matrices.
using Distance = std::uint16_t;

inline constexpr Distance kInfDistance = 0xFFFF;
/// Largest storable finite hop count; anything larger is rejected rather than wrapped.
inline constexpr Distance kMaxDistance = 0xFFF0;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace labeltok
