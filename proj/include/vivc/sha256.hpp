#pragma once

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "vivc/bytes.hpp"

namespace vivc {

// What a SHA-256 invocation is spent on. The step counter is the sequential
// work metric (one unit per chain step); node covers Merkle interior hashing.
enum class HashPurpose { Step, Node, Leaf, Other };

struct HashCounters {
    std::atomic<uint64_t> step{0};
    std::atomic<uint64_t> node{0};
    std::atomic<uint64_t> leaf{0};
    std::atomic<uint64_t> other{0};

    void reset() { step = node = leaf = other = 0; }
    uint64_t total() const { return step + node + leaf + other; }
};

HashCounters& hash_counters();

// SHA-256 per FIPS 180-4, counted against the given purpose.
Bytes32 sha256(std::span<const uint8_t> data, HashPurpose purpose = HashPurpose::Other);
Bytes32 sha256(std::initializer_list<std::span<const uint8_t>> parts,
               HashPurpose purpose = HashPurpose::Other);

}  // namespace vivc
