#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "labeltok/common.hpp"

namespace labeltok::binio {

using Magic = std::array<char, 4>;

std::uint32_t crc32_update(std::uint32_t crc, std::span<const std::byte> bytes);
std::uint32_t crc32_file(const std::filesystem::path& path);

/// Little-endian buffered writer; crc() covers everything written so far.
class Writer {
public:
    explicit Writer(const std::filesystem::path& path);

    void magic(const Magic& m) { bytes(std::as_bytes(std::span(m))); }
    void u16(std::uint16_t v) { le(v); }
    void u32(std::uint32_t v) { le(v); }
    void u64(std::uint64_t v) { le(v); }
    void f32(float v) {
        std::uint32_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        le(bits);
    }
    void bytes(std::span<const std::byte> data);

    std::uint32_t crc() const;
    /// Flushes and closes; throws on any stream failure.
    void finish();

private:
    template <typename T>
    void le(T v) {
        std::array<std::byte, sizeof(T)> buf;
        for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<std::byte>((v >> (8 * i)) & 0xFF);
        bytes(buf);
    }
    void flush_buffer();

    std::filesystem::path path_;
    std::ofstream out_;
    std::vector<std::byte> buf_;
    std::uint32_t crc_ = 0;
};

/// Whole-file little-endian reader with bounds checks.
class Reader {
public:
    explicit Reader(const std::filesystem::path& path);

    void expect_magic(const Magic& m);
    std::uint16_t u16() { return le<std::uint16_t>(); }
    std::uint32_t u32() { return le<std::uint32_t>(); }
    std::uint64_t u64() { return le<std::uint64_t>(); }
    float f32() {
        std::uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }

    std::size_t offset() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }
    /// CRC-32 of bytes [0, offset()).
    std::uint32_t crc_so_far() const;
    void expect_end();

private:
    template <typename T>
    T le() {
        need(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<T>(data_[pos_ + i]) << (8 * i));
        pos_ += sizeof(T);
        return v;
    }
    void need(std::size_t k);

    std::string path_;
    std::vector<std::uint8_t> data_;
    std::size_t pos_ = 0;
};

} // namespace labeltok::binio
