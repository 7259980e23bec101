// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "govchain/crypto.hpp"

#include <fstream>
#include <sstream>

#include <sodium.h>

#include <json.hpp>

#include "govchain/sha256.hpp"

namespace govchain {

namespace detail {
void ensure_sodium(); // sha256.cpp
}

static_assert(kPublicKeySize == crypto_sign_PUBLICKEYBYTES);
static_assert(kPrivateKeySize == crypto_sign_SECRETKEYBYTES);
static_assert(kSignatureSize == crypto_sign_BYTES);
static_assert(kSeedSize == crypto_sign_SEEDBYTES);

KeyPair generate_keypair() {
    detail::ensure_sodium();
    KeyPair kp;
    if (crypto_sign_keypair(kp.public_key.data(), kp.private_key.data()) != 0)
        throw std::runtime_error("entropy source unavailable");
    return kp;
}

KeyPair generate_keypair(const std::array<std::uint8_t, kSeedSize>& seed) {
    detail::ensure_sodium();
    KeyPair kp;
    crypto_sign_seed_keypair(kp.public_key.data(), kp.private_key.data(), seed.data());
    return kp;
}

Identity derive_identity(std::span<const std::uint8_t> public_key) {
    if (public_key.empty()) throw std::invalid_argument("public key must be non-empty");
    return Identity{sha256(public_key)};
}

BlockchainAddress derive_address(std::span<const std::uint8_t> public_key) {
    if (public_key.empty()) throw std::invalid_argument("public key must be non-empty");
    Hash32 digest = sha256(public_key);
    BlockchainAddress addr;
    std::copy(digest.begin() + (digest.size() - addr.bytes.size()), digest.end(),
              addr.bytes.begin());
    return addr;
}

Signature sign(std::span<const std::uint8_t> private_key, std::span<const std::uint8_t> message) {
    detail::ensure_sodium();
    if (private_key.size() != kPrivateKeySize)
        throw std::invalid_argument("private key must be 64 bytes");
    Signature sig;
    crypto_sign_detached(sig.bytes.data(), nullptr, message.data(), message.size(),
                         private_key.data());
    // The secret key embeds the public half in its last 32 bytes.
    sig.signer = derive_identity(private_key.subspan(kSeedSize));
    return sig;
}

bool verify(std::span<const std::uint8_t> public_key, std::span<const std::uint8_t> message,
            const Signature& sig) noexcept {
    if (public_key.size() != kPublicKeySize) return false;
    detail::ensure_sodium();
    return crypto_sign_verify_detached(sig.bytes.data(), message.data(), message.size(),
                                       public_key.data()) == 0;
}

Wallet create_wallet(const KeyPair& keypair, std::uint64_t now_ms) {
    Wallet w;
    w.identity = derive_identity(keypair.public_key);
    w.address = derive_address(keypair.public_key);
    w.keypair = keypair;
    w.created_at = now_ms;
    return w;
}

std::string wallet_to_json(const Wallet& wallet) {
    nlohmann::ordered_json j;
    j["scheme"] = kSignatureScheme;
    j["public_key"] = to_hex(wallet.keypair.public_key);
    j["private_key"] = to_hex(wallet.keypair.private_key);
    j["identity"] = wallet.identity.hex();
    j["address"] = wallet.address.hex();
    j["created_at"] = wallet.created_at;
    return j.dump();
}

Wallet wallet_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("scheme").get<std::string>() != kSignatureScheme)
        throw std::invalid_argument("unsupported wallet scheme: " +
                                    j.at("scheme").get<std::string>());
    Wallet w;
    w.keypair.public_key = array_from_hex<kPublicKeySize>(j.at("public_key").get<std::string>());
    w.keypair.private_key = array_from_hex<kPrivateKeySize>(j.at("private_key").get<std::string>());
    w.identity.digest = array_from_hex<32>(j.at("identity").get<std::string>());
    w.address.bytes = array_from_hex<20>(j.at("address").get<std::string>());
    w.created_at = j.at("created_at").get<std::uint64_t>();
    if (w.identity != derive_identity(w.keypair.public_key) ||
        w.address != derive_address(w.keypair.public_key))
        throw std::invalid_argument("wallet identity/address do not match the public key");
    return w;
}

void save_wallet(const Wallet& wallet, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open wallet file for writing: " + path.string());
    out << wallet_to_json(wallet) << '\n';
}

Wallet load_wallet(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open wallet file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return wallet_from_json(buf.str());
}

} // namespace govchain
