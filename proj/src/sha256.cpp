// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "govchain/sha256.hpp"

#include <mutex>

#include <sodium.h>

namespace govchain {

namespace detail {
void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
    });
}
} // namespace detail

Hash32 sha256(std::span<const std::uint8_t> data) {
    detail::ensure_sodium();
    Hash32 out{};
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

} // namespace govchain
