// Copyright (c) 2026 The govchain developers. Licensed under the Apache
// License, Version 2.0. See the COPYING file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "govchain/merkle.hpp"

#include "govchain/sha256.hpp"

namespace govchain {

namespace {
Hash32 hash_pair(const Hash32& left, const Hash32& right) {
    std::array<std::uint8_t, 64> buf;
    std::copy(left.begin(), left.end(), buf.begin());
    std::copy(right.begin(), right.end(), buf.begin() + 32);
    return sha256(std::span<const std::uint8_t>(buf));
}
} // namespace

MerkleTree MerkleTree::build(std::vector<Hash32> leaves) {
    if (leaves.empty()) throw std::invalid_argument("merkle tree requires at least one leaf");
    MerkleTree tree;
    tree.levels_.push_back(std::move(leaves));
    while (tree.levels_.back().size() > 1) {
        const auto& below = tree.levels_.back();
        std::vector<Hash32> level;
        level.reserve((below.size() + 1) / 2);
        for (std::size_t i = 0; i < below.size(); i += 2) {
            const Hash32& left = below[i];
            const Hash32& right = (i + 1 < below.size()) ? below[i + 1] : below[i];
            level.push_back(hash_pair(left, right));
        }
        tree.levels_.push_back(std::move(level));
    }
    return tree;
}

std::vector<ProofStep> MerkleTree::proof(std::size_t index) const {
    if (index >= leaf_count()) throw std::out_of_range("merkle proof index out of range");
    std::vector<ProofStep> steps;
    for (std::size_t depth = 0; depth + 1 < levels_.size(); ++depth) {
        const auto& level = levels_[depth];
        std::size_t sibling = (index % 2 == 0) ? index + 1 : index - 1;
        if (sibling >= level.size()) sibling = index; // odd width duplicates the last hash
        steps.push_back({level[sibling],
                         (index % 2 == 0) ? ProofSide::Right : ProofSide::Left});
        index /= 2;
    }
    return steps;
}

Hash32 build_merkle_root(const std::vector<Hash32>& leaves) {
    return MerkleTree::build(leaves).root();
}

bool verify_proof(const Hash32& leaf, const std::vector<ProofStep>& proof, const Hash32& root) {
    Hash32 acc = leaf;
    for (const ProofStep& step : proof)
        acc = (step.side == ProofSide::Right) ? hash_pair(acc, step.hash)
                                              : hash_pair(step.hash, acc);
    return acc == root;
}

} // namespace govchain
