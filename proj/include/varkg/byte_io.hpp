#pragma once

// Little-endian packing helpers for the binary containers.

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "varkg/error.hpp"

namespace varkg::byte_io {

template <typename T>
void put(std::string& out, T value) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

inline void put_f64(std::string& out, double v) { put(out, std::bit_cast<std::uint64_t>(v)); }

inline void put_str(std::string& out, std::string_view s) {
    put(out, static_cast<std::uint32_t>(s.size()));
    out.append(s);
}

/** Bounds-checked reader; every overrun throws InputError. */
class Reader {
public:
    Reader(std::string_view bytes, std::string what) : bytes_(bytes), what_(std::move(what)) {}

    template <typename T>
    T get() {
        need(sizeof(T));
        using U = std::make_unsigned_t<T>;
        U u = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            u |= static_cast<U>(static_cast<U>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i));
        }
        pos_ += sizeof(T);
        return static_cast<T>(u);
    }
    double get_f64() { return std::bit_cast<double>(get<std::uint64_t>()); }
    std::string get_str() {
        auto n = get<std::uint32_t>();
        need(n);
        std::string s(bytes_.substr(pos_, n));
        pos_ += n;
        return s;
    }
    std::string_view raw(std::size_t n) {
        need(n);
        auto s = bytes_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& message) const { throw InputError(what_ + ": " + message); }

private:
    void need(std::size_t n) const {
        if (remaining() < n) fail("truncated data");
    }
    std::string_view bytes_;
    std::string what_;
    std::size_t pos_ = 0;
};

}  // namespace varkg::byte_io
