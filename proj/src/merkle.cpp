#include "vivc/merkle.hpp"

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

static constexpr std::string_view kNodeTag = "VIVC/node";

static Bytes32 hash_node(const Bytes32& left, const Bytes32& right) {
    return sha256({as_span(kNodeTag), left, right}, HashPurpose::Node);
}

Bytes32 merkle_root(const std::vector<Bytes32>& leaves) {
    if (leaves.empty()) throw Error(ErrorCode::EmptyLeaves, "merkle_root of no leaves");
    std::vector<Bytes32> level = leaves;
    while (level.size() > 1) {
        if (level.size() % 2 != 0) level.push_back(level.back());
        std::vector<Bytes32> next;
        next.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2)
            next.push_back(hash_node(level[i], level[i + 1]));
        level = std::move(next);
    }
    return level[0];
}

MerklePath merkle_open(const std::vector<Bytes32>& leaves, size_t index) {
    if (index >= leaves.size())
        throw Error(ErrorCode::IndexOutOfRange, "merkle_open index out of range");
    MerklePath path;
    std::vector<Bytes32> level = leaves;
    size_t i = index;
    while (level.size() > 1) {
        if (level.size() % 2 != 0) level.push_back(level.back());
        size_t sib = i ^ 1;
        path.push_back({level[sib], sib < i});
        std::vector<Bytes32> next;
        next.reserve(level.size() / 2);
        for (size_t j = 0; j < level.size(); j += 2)
            next.push_back(hash_node(level[j], level[j + 1]));
        level = std::move(next);
        i /= 2;
    }
    return path;
}

bool merkle_verify(const Bytes32& root, const Bytes32& leaf, const MerklePath& path,
                   size_t index) {
    Bytes32 h = leaf;
    size_t i = index;
    for (const auto& node : path) {
        // position markers must agree with the claimed index
        if (node.sibling_on_left != (i % 2 == 1)) return false;
        h = node.sibling_on_left ? hash_node(node.sibling, h) : hash_node(h, node.sibling);
        i /= 2;
    }
    return h == root;
}

}  // namespace vivc
