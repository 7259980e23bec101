// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "govchain/crypto.hpp"

namespace govchain {

// A signed ledger record. The payload is opaque (an application record or an
// off-chain document anchor). Carrying the sender's public key makes signature
// checks self-contained; sender must equal SHA-256(sender_public_key).
//
// Canonical encoding (big-endian, length-prefixed payload):
//   signed portion:  sender(32) || payload_len(4) || payload || tx_nonce(8) || timestamp(8)
//   full encoding:   signed portion || sender_public_key(32) || signature(64)
// tx_id = SHA-256(full encoding).
struct Transaction {
    Identity sender;
    Bytes payload;
    std::uint64_t tx_nonce = 0;  // per-sender counter, starts at 1
    std::uint64_t timestamp = 0; // ms
    std::array<std::uint8_t, kPublicKeySize> sender_public_key{};
    Signature signature;

    bool operator==(const Transaction&) const = default;
};

Bytes tx_signing_bytes(const Transaction& tx);
Bytes tx_canonical_bytes(const Transaction& tx);
Hash32 hash_transaction(const Transaction& tx);

Transaction make_transaction(const Wallet& sender, Bytes payload, std::uint64_t tx_nonce,
                             std::uint64_t timestamp_ms);

// Signature valid over the signed portion, and sender/signer consistent with
// the embedded public key.
bool transaction_signature_valid(const Transaction& tx);

void encode_transaction(Bytes& out, const Transaction& tx);
Transaction decode_transaction(ByteReader& reader);

} // namespace govchain
