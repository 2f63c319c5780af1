#pragma once

#include <cstdint>
#include <vector>

#include "vivc/bytes.hpp"
#include "vivc/commitment.hpp"
#include "vivc/merkle.hpp"
#include "vivc/trusted_setup.hpp"

namespace vivc {

struct Checkpoint {
    uint64_t index = 0;  // step number; multiples of c plus the final step T
    HashState state{};
};

struct CheckpointTrace {
    std::vector<Checkpoint> checkpoints;  // m = ceil(T/c) + 1 entries
    uint64_t interval = 0;
    uint64_t T = 0;
};

struct CheckpointOpening {
    uint64_t leaf_index = 0;
    Checkpoint checkpoint;
    MerklePath path;
};

struct SegmentChallenge {
    uint64_t segment = 0;  // in [0, m-1)
    CheckpointOpening start;
    CheckpointOpening end;
};

struct EvalProof {
    uint32_t lambda = 0;
    uint64_t T = 0;
    uint64_t interval = 0;
    uint64_t k = 0;
    HashState x{};
    HashState y{};
    Bytes32 er{};  // Merkle root over checkpoint leaves
    Commitment witness_commitment;
    std::vector<SegmentChallenge> challenges;
};

struct StateProof {
    uint64_t step_index = 0;
    CheckpointOpening anchor;  // nearest checkpoint at or before step_index
    uint64_t offset = 0;       // step_index - anchor index, <= c
    HashState state{};         // claimed state at step_index
};

// SHA-256("VIVC/seed" || pk || x || cw): binds the chain to the statement and
// the committed witness without revealing w.
HashState seed_state(const Bytes32& pk, const HashState& x, const Commitment& cw);

// leaf = SHA-256("VIVC/leaf" || index_be64 || state)
Bytes32 checkpoint_leaf(uint64_t index, const HashState& state);

std::vector<Bytes32> trace_leaves(const CheckpointTrace& trace);

struct EvalResult {
    EvalProof proof;
    CheckpointTrace trace;
};

// The Eval stage: commit w, seed the chain, run T sequential steps recording
// checkpoints every c steps and at T, commit the checkpoints in a Merkle tree
// and open k Fiat-Shamir-challenged segments. The chain costs exactly T step
// hashes and is never parallelized.
EvalResult eval(const KeyPair& kp, const HashState& x, std::span<const uint8_t> w,
                uint64_t T, uint64_t c, uint64_t k, std::span<const uint8_t> rng_seed);

// Prove the state at an arbitrary step i <= T: Merkle-open the nearest
// preceding checkpoint; the consumer re-derives state_i in offset <= c steps.
StateProof prove_state(const CheckpointTrace& trace, uint64_t i);

}  // namespace vivc
