#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vivc/bytes.hpp"
#include "vivc/commitment.hpp"
#include "vivc/randomness.hpp"

namespace vivc {

struct KeyPair {
    uint32_t lambda = 0;
    Bytes32 pk{};
    Bytes32 vk{};
    Bytes32 binding{};  // SHA-256("VIVC/bind" || pk || vk), re-checkable by anyone

    bool operator==(const KeyPair&) const = default;
};

Bytes32 compute_binding(const Bytes32& pk, const Bytes32& vk);
bool binding_valid(const KeyPair& kp);

// pk = SHA-256("VIVC/pk" || lambda_be32 || seed), vk likewise with "VIVC/vk".
// The seed is the toxic waste: it is not stored anywhere and callers must
// discard it after setup.
KeyPair trusted_setup(uint32_t lambda, std::span<const uint8_t> setup_seed);

struct CeremonyChain {
    std::vector<Bytes32> contributions;
    Bytes32 srs{};  // left fold from the genesis constant

    CeremonyChain();
};

Bytes32 ceremony_genesis();

// Appends SHA-256(entropy) and refolds srs_i = SHA-256("VIVC/srs" || srs_{i-1} || c_i).
// The final srs is suitable as a setup_seed; one honest contributor suffices.
CeremonyChain ceremony_contribute(const CeremonyChain& chain, std::span<const uint8_t> entropy);

struct TranscriptRound {
    uint64_t alpha = 0;
    Commitment commitment;
    Opening opening;
    int verifier_bit = 0;
};

struct SetupTranscript {
    std::vector<TranscriptRound> rounds;
    int final_bit = 0;
};

// The precomputation loop: per round the prover commits to (pk || x || w ||
// round index) with fresh randomness, the verifier decommits and emits a bit;
// alpha halves until 1. corrupt_round (if set) simulates a prover whose
// opening at that round does not match, which halts the transcript.
SetupTranscript algorithm1_precompute(Rand128 r, const KeyPair& kp, const HashState& x,
                                      std::span<const uint8_t> w,
                                      std::span<const uint8_t> rng_seed,
                                      std::optional<uint64_t> corrupt_round = std::nullopt);

}  // namespace vivc
