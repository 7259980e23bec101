// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "govchain/transaction.hpp"

#include <limits>

#include "govchain/sha256.hpp"

namespace govchain {

Bytes tx_signing_bytes(const Transaction& tx) {
    if (tx.payload.size() > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("transaction payload too large");
    Bytes out;
    out.reserve(32 + 4 + tx.payload.size() + 16);
    put_bytes(out, tx.sender.digest);
    put_u32_be(out, static_cast<std::uint32_t>(tx.payload.size()));
    put_bytes(out, tx.payload);
    put_u64_be(out, tx.tx_nonce);
    put_u64_be(out, tx.timestamp);
    return out;
}

Bytes tx_canonical_bytes(const Transaction& tx) {
    Bytes out = tx_signing_bytes(tx);
    put_bytes(out, tx.sender_public_key);
    put_bytes(out, tx.signature.bytes);
    return out;
}

Hash32 hash_transaction(const Transaction& tx) {
    return sha256(tx_canonical_bytes(tx));
}

Transaction make_transaction(const Wallet& sender, Bytes payload, std::uint64_t tx_nonce,
                             std::uint64_t timestamp_ms) {
    Transaction tx;
    tx.sender = sender.identity;
    tx.payload = std::move(payload);
    tx.tx_nonce = tx_nonce;
    tx.timestamp = timestamp_ms;
    tx.sender_public_key = sender.keypair.public_key;
    tx.signature = sign(sender.keypair.private_key, tx_signing_bytes(tx));
    return tx;
}

bool transaction_signature_valid(const Transaction& tx) {
    if (derive_identity(tx.sender_public_key) != tx.sender) return false;
    if (tx.signature.signer != tx.sender) return false;
    return verify(tx.sender_public_key, tx_signing_bytes(tx), tx.signature);
}

void encode_transaction(Bytes& out, const Transaction& tx) {
    Bytes canonical = tx_canonical_bytes(tx);
    put_bytes(out, canonical);
}

Transaction decode_transaction(ByteReader& reader) {
    Transaction tx;
    tx.sender.digest = reader.take_array<32>();
    std::uint32_t payload_len = reader.u32_be();
    auto payload = reader.take(payload_len);
    tx.payload.assign(payload.begin(), payload.end());
    tx.tx_nonce = reader.u64_be();
    tx.timestamp = reader.u64_be();
    tx.sender_public_key = reader.take_array<kPublicKeySize>();
    tx.signature.bytes = reader.take_array<kSignatureSize>();
    tx.signature.signer = tx.sender;
    return tx;
}

} // namespace govchain
