// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace govchain {

using Bytes = std::vector<std::uint8_t>;
using Hash32 = std::array<std::uint8_t, 32>;
using Address20 = std::array<std::uint8_t, 20>;

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);

template <std::size_t N>
std::array<std::uint8_t, N> array_from_hex(std::string_view hex) {
    Bytes raw = from_hex(hex);
    if (raw.size() != N)
        throw std::invalid_argument("hex string decodes to " + std::to_string(raw.size()) +
                                    " bytes, expected " + std::to_string(N));
    std::array<std::uint8_t, N> out{};
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

// Big-endian integer appenders; all canonical encodings in this project are
// big-endian with length-prefixed variable fields.
void put_u16_be(Bytes& out, std::uint16_t v);
void put_u32_be(Bytes& out, std::uint32_t v);
void put_u64_be(Bytes& out, std::uint64_t v);

inline void put_bytes(Bytes& out, std::span<const std::uint8_t> data) {
    out.insert(out.end(), data.begin(), data.end());
}

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cursor over a byte buffer; throws DecodeError on underrun.
class ByteReader {
  public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8();
    std::uint16_t u16_be();
    std::uint32_t u32_be();
    std::uint64_t u64_be();
    std::span<const std::uint8_t> take(std::size_t n);

    template <std::size_t N>
    std::array<std::uint8_t, N> take_array() {
        auto s = take(N);
        std::array<std::uint8_t, N> out{};
        std::copy(s.begin(), s.end(), out.begin());
        return out;
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }
    void expect_end() const {
        if (!done()) throw DecodeError("trailing bytes after decode");
    }

  private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

} // namespace govchain
