// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <vector>

#include "govchain/bytes.hpp"

namespace govchain {

// Which side of the running hash the sibling sits on when folding a proof.
enum class ProofSide : std::uint8_t { Left = 0, Right = 1 };

struct ProofStep {
    Hash32 hash{};
    ProofSide side = ProofSide::Right;

    bool operator==(const ProofStep&) const = default;
};

// Binary SHA-256 tree over transaction hashes. Internal node = SHA-256(left || right);
// a level of odd width duplicates its last hash; a single leaf is its own root.
class MerkleTree {
  public:
    static MerkleTree build(std::vector<Hash32> leaves); // throws on empty input

    const Hash32& root() const { return levels_.back().front(); }
    std::size_t leaf_count() const { return levels_.front().size(); }
    const std::vector<Hash32>& leaves() const { return levels_.front(); }
    const std::vector<std::vector<Hash32>>& levels() const { return levels_; }

    // Inclusion proof for the leaf at index; length is ceil(log2(leaf_count)).
    std::vector<ProofStep> proof(std::size_t index) const; // throws std::out_of_range

  private:
    MerkleTree() = default;
    std::vector<std::vector<Hash32>> levels_; // levels_[0] = leaves, back() = [root]
};

Hash32 build_merkle_root(const std::vector<Hash32>& leaves);

bool verify_proof(const Hash32& leaf, const std::vector<ProofStep>& proof, const Hash32& root);

} // namespace govchain
