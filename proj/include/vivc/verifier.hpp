#pragma once

#include <optional>
#include <string>

#include "vivc/prover.hpp"

namespace vivc {

enum class RejectReason {
    BindingInvalid,
    ChallengeMismatch,
    PathInvalid,
    SegmentMismatch,
    FinalStateMismatch,
    MalformedProof,
};

const char* reject_reason_name(RejectReason r);

struct Verdict {
    bool accepted = false;
    std::optional<double> D;  // entropy factor, present iff accepted
    std::optional<RejectReason> reason;

    static Verdict accept(double d) { return {true, d, std::nullopt}; }
    static Verdict reject(RejectReason r) { return {false, std::nullopt, r}; }
};

// Binary Shannon entropy of the output's ones-fraction, in [0, 1] bits.
double entropy_D(const HashState& y);

// Spot-check verification: rebind the Fiat-Shamir challenges, then for each
// challenged segment check both Merkle paths against Er and re-hash the
// segment. Cost is independent of T at fixed (c, k). Never throws on
// adversarial content; structural nonsense yields MalformedProof.
Verdict verify(const KeyPair& kp, const HashState& x, const EvalProof& proof);

// Checkpoint verification: one Merkle path plus offset <= c re-hash steps.
bool verify_checkpoint(const KeyPair& kp, const Bytes32& er, const StateProof& sp, uint64_t m);

}  // namespace vivc
