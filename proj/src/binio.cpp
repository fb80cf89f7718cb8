#include "labeltok/binio.hpp"

#include <zlib.h>

#include <algorithm>

namespace labeltok::binio {

namespace {
constexpr std::size_t kBufferSize = 1 << 20;
}

std::uint32_t crc32_update(std::uint32_t crc, std::span<const std::byte> bytes) {
    // zlib takes uInt lengths; feed in chunks
    const auto* p = reinterpret_cast<const Bytef*>(bytes.data());
    std::size_t left = bytes.size();
    uLong c = crc;
    while (left > 0) {
        auto chunk = static_cast<uInt>(std::min<std::size_t>(left, 1u << 30));
        c = ::crc32(c, p, chunk);
        p += chunk;
        left -= chunk;
    }
    return static_cast<std::uint32_t>(c);
}

std::uint32_t crc32_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<char> buf(kBufferSize);
    std::uint32_t crc = 0;
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        auto got = static_cast<std::size_t>(in.gcount());
        if (got == 0) break;
        crc = crc32_update(crc, std::as_bytes(std::span(buf.data(), got)));
    }
    return crc;
}

Writer::Writer(const std::filesystem::path& path) : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw Error("cannot open for writing: " + path.string());
    buf_.reserve(kBufferSize);
}

void Writer::bytes(std::span<const std::byte> data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
    if (buf_.size() >= kBufferSize) flush_buffer();
}

std::uint32_t Writer::crc() const {
    return crc32_update(crc_, buf_);
}

void Writer::flush_buffer() {
    crc_ = crc32_update(crc_, buf_);
    out_.write(reinterpret_cast<const char*>(buf_.data()), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
    if (!out_) throw Error("write failed: " + path_.string());
}

void Writer::finish() {
    flush_buffer();
    out_.close();
    if (!out_) throw Error("write failed: " + path_.string());
}

Reader::Reader(const std::filesystem::path& path) : path_(path.string()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path_);
    in.seekg(0, std::ios::end);
    auto size = static_cast<std::size_t>(in.tellg());
    in.seekg(0);
    data_.resize(size);
    in.read(reinterpret_cast<char*>(data_.data()), static_cast<std::streamsize>(size));
    if (!in) throw Error("read failed: " + path_);
}

void Reader::need(std::size_t k) {
    if (remaining() < k) throw Error(path_ + ": truncated file at offset " + std::to_string(pos_));
}

void Reader::expect_magic(const Magic& m) {
    need(4);
    if (std::memcmp(data_.data() + pos_, m.data(), 4) != 0)
        throw Error(path_ + ": bad magic, expected " + std::string(m.data(), 4));
    pos_ += 4;
}

std::uint32_t Reader::crc_so_far() const {
    return crc32_update(0, std::as_bytes(std::span(data_.data(), pos_)));
}

void Reader::expect_end() {
    if (remaining() != 0) throw Error(path_ + ": " + std::to_string(remaining()) + " trailing bytes");
}

} // namespace labeltok::binio
