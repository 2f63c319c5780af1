#pragma once

#include <cstdint>
#include <vector>

#include "vivc/bytes.hpp"

namespace vivc {

struct PathNode {
    Bytes32 sibling{};
    bool sibling_on_left = false;
};

using MerklePath = std::vector<PathNode>;

// node = SHA-256("VIVC/node" || left || right); odd node duplicated upward;
// a single leaf is its own root.
Bytes32 merkle_root(const std::vector<Bytes32>& leaves);

// Sibling list bottom-up; length == ceil(log2(leaf count)), 0 for a singleton.
MerklePath merkle_open(const std::vector<Bytes32>& leaves, size_t index);

bool merkle_verify(const Bytes32& root, const Bytes32& leaf, const MerklePath& path,
                   size_t index);

}  // namespace vivc
