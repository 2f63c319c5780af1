#include "vivc/verifier.hpp"

#include <bit>
#include <cmath>

#include "vivc/randomness.hpp"
#include "vivc/seq_hash.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::BindingInvalid: return "BindingInvalid";
        case RejectReason::ChallengeMismatch: return "ChallengeMismatch";
        case RejectReason::PathInvalid: return "PathInvalid";
        case RejectReason::SegmentMismatch: return "SegmentMismatch";
        case RejectReason::FinalStateMismatch: return "FinalStateMismatch";
        case RejectReason::MalformedProof: return "MalformedProof";
    }
    return "Unknown";
}

double entropy_D(const HashState& y) {
    int ones = 0;
    for (uint8_t b : y) ones += std::popcount(b);
    double p = ones / 256.0;
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Verdict verify(const KeyPair& kp, const HashState& x, const EvalProof& proof) {
    if (!binding_valid(kp) || kp.lambda != proof.lambda)
        return Verdict::reject(RejectReason::BindingInvalid);

    const uint64_t T = proof.T, c = proof.interval, k = proof.k;
    if (proof.x != x || T < 1 || T > kTMax || c < 1 || c > T)
        return Verdict::reject(RejectReason::MalformedProof);
    const uint64_t m = (T + c - 1) / c + 1;
    if (k < 1 || k > m - 1 || proof.challenges.size() != k)
        return Verdict::reject(RejectReason::MalformedProof);

    auto expected = fiat_shamir_indices({proof.er}, proof.y, k, m - 1, proof.witness_commitment.digest);
    for (uint64_t j = 0; j < k; ++j)
        if (proof.challenges[j].segment != expected[j])
            return Verdict::reject(RejectReason::ChallengeMismatch);

    HashState seed = seed_state(kp.pk, x, proof.witness_commitment);

    // canonical order: first failing check of the first failing challenge
    for (const auto& ch : proof.challenges) {
        const uint64_t seg = ch.segment;
        const uint64_t start_index = seg * c;
        const uint64_t end_index = std::min((seg + 1) * c, T);
        if (ch.start.leaf_index != seg || ch.end.leaf_index != seg + 1 ||
            ch.start.checkpoint.index != start_index || ch.end.checkpoint.index != end_index)
            return Verdict::reject(RejectReason::MalformedProof);

        for (const auto& opening : {ch.start, ch.end}) {
            Bytes32 leaf = checkpoint_leaf(opening.checkpoint.index, opening.checkpoint.state);
            if (!merkle_verify(proof.er, leaf, opening.path, opening.leaf_index))
                return Verdict::reject(RejectReason::PathInvalid);
        }

        if (seg == 0 && ch.start.checkpoint.state != seed)
            return Verdict::reject(RejectReason::SegmentMismatch);
        if (iterate(ch.start.checkpoint.state, end_index - start_index) != ch.end.checkpoint.state)
            return Verdict::reject(RejectReason::SegmentMismatch);
        if (end_index == T && ch.end.checkpoint.state != proof.y)
            return Verdict::reject(RejectReason::FinalStateMismatch);
    }
    return Verdict::accept(entropy_D(proof.y));
}

bool verify_checkpoint(const KeyPair& kp, const Bytes32& er, const StateProof& sp, uint64_t m) {
    if (!binding_valid(kp)) return false;
    if (sp.anchor.leaf_index >= m || sp.step_index < sp.anchor.checkpoint.index) return false;
    if (sp.offset != sp.step_index - sp.anchor.checkpoint.index) return false;

    Bytes32 leaf = checkpoint_leaf(sp.anchor.checkpoint.index, sp.anchor.checkpoint.state);
    if (!merkle_verify(er, leaf, sp.anchor.path, sp.anchor.leaf_index)) return false;
    return iterate(sp.anchor.checkpoint.state, sp.offset) == sp.state;
}

}  // namespace vivc
