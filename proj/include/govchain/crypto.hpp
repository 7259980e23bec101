// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <compare>
#include <filesystem>
#include <optional>

#include "govchain/bytes.hpp"

namespace govchain {

// Ed25519 throughout: 32-byte public keys, 64-byte secret keys (seed || public),
// 64-byte detached signatures, 32-byte seeds.
inline constexpr std::string_view kSignatureScheme = "ed25519";
inline constexpr std::size_t kPublicKeySize = 32;
inline constexpr std::size_t kPrivateKeySize = 64;
inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::size_t kSeedSize = 32;

// SHA-256 of a participant's public key; doubles as the map key for
// registries, so ordering is lexicographic over the digest bytes.
struct Identity {
    Hash32 digest{};

    auto operator<=>(const Identity&) const = default;
    std::string hex() const { return to_hex(digest); }
    // Short prefix for human-readable output.
    std::string brief() const { return hex().substr(0, 8); }
};

struct BlockchainAddress {
    Address20 bytes{};

    auto operator<=>(const BlockchainAddress&) const = default;
    std::string hex() const { return to_hex(bytes); }
};

struct KeyPair {
    std::array<std::uint8_t, kPublicKeySize> public_key{};
    std::array<std::uint8_t, kPrivateKeySize> private_key{};
};

struct Signature {
    std::array<std::uint8_t, kSignatureSize> bytes{};
    Identity signer;

    auto operator<=>(const Signature&) const = default;
};

KeyPair generate_keypair();
KeyPair generate_keypair(const std::array<std::uint8_t, kSeedSize>& seed);

Identity derive_identity(std::span<const std::uint8_t> public_key);
BlockchainAddress derive_address(std::span<const std::uint8_t> public_key);

// Detached signature; the signer identity is derived from the public half
// embedded in the secret key. Throws std::invalid_argument on a malformed key.
Signature sign(std::span<const std::uint8_t> private_key, std::span<const std::uint8_t> message);

// True iff sig was produced by the matching private key over exactly message.
// Malformed inputs return false rather than throwing.
bool verify(std::span<const std::uint8_t> public_key, std::span<const std::uint8_t> message,
            const Signature& sig) noexcept;

struct Wallet {
    Identity identity;
    BlockchainAddress address;
    KeyPair keypair;
    std::uint64_t created_at = 0; // ms since epoch

    bool operator==(const Wallet&) const = default;
};

Wallet create_wallet(const KeyPair& keypair, std::uint64_t now_ms);

// Wallet file: one JSON object with keys scheme, public_key, private_key,
// identity, address (all lowercase hex) and created_at (integer ms).
std::string wallet_to_json(const Wallet& wallet);
Wallet wallet_from_json(std::string_view text);
void save_wallet(const Wallet& wallet, const std::filesystem::path& path);
Wallet load_wallet(const std::filesystem::path& path);

} // namespace govchain
