// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "govchain/bytes.hpp"

namespace govchain {

Hash32 sha256(std::span<const std::uint8_t> data);

inline Hash32 sha256(const Bytes& data) {
    return sha256(std::span<const std::uint8_t>(data));
}

inline Hash32 sha256(std::string_view text) {
    return sha256(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

} // namespace govchain
