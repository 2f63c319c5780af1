#include "vivc/prover.hpp"

#include "vivc/errors.hpp"
#include "vivc/randomness.hpp"
#include "vivc/seq_hash.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

HashState seed_state(const Bytes32& pk, const HashState& x, const Commitment& cw) {
    static constexpr std::string_view tag = "VIVC/seed";
    return sha256({as_span(tag), pk, x, cw.digest});
}

Bytes32 checkpoint_leaf(uint64_t index, const HashState& state) {
    static constexpr std::string_view tag = "VIVC/leaf";
    auto idx = be64(index);
    return sha256({as_span(tag), idx, state}, HashPurpose::Leaf);
}

std::vector<Bytes32> trace_leaves(const CheckpointTrace& trace) {
    std::vector<Bytes32> leaves;
    leaves.reserve(trace.checkpoints.size());
    for (const auto& cp : trace.checkpoints) leaves.push_back(checkpoint_leaf(cp.index, cp.state));
    return leaves;
}

static CheckpointOpening open_checkpoint(const CheckpointTrace& trace,
                                         const std::vector<Bytes32>& leaves, uint64_t leaf_index) {
    return {leaf_index, trace.checkpoints[leaf_index], merkle_open(leaves, leaf_index)};
}

EvalResult eval(const KeyPair& kp, const HashState& x, std::span<const uint8_t> w,
                uint64_t T, uint64_t c, uint64_t k, std::span<const uint8_t> rng_seed) {
    if (!binding_valid(kp))
        throw Error(ErrorCode::BindingInvalid, "key pair binding does not verify");
    if (T < 1 || T > kTMax) throw Error(ErrorCode::DelayTooLarge, "need 1 <= T <= 2^32");
    if (c < 1 || c > T) throw Error(ErrorCode::BadInterval, "need 1 <= c <= T");
    const uint64_t m = (T + c - 1) / c + 1;
    if (k < 1 || k > m - 1)
        throw Error(ErrorCode::BadChallengeCount, "need 1 <= k <= m-1");

    SessionRng rng(rng_seed);
    Commitment cw = commit(w, rng.next());

    EvalResult res;
    auto& trace = res.trace;
    trace.interval = c;
    trace.T = T;
    trace.checkpoints.reserve(m);

    // The delay itself: one strand, exactly T step invocations.
    HashState s = seed_state(kp.pk, x, cw);
    trace.checkpoints.push_back({0, s});
    for (uint64_t i = 1; i <= T; ++i) {
        s = step(s);
        if (i % c == 0 || i == T) trace.checkpoints.push_back({i, s});
    }

    auto leaves = trace_leaves(trace);
    auto& proof = res.proof;
    proof.lambda = kp.lambda;
    proof.T = T;
    proof.interval = c;
    proof.k = k;
    proof.x = x;
    proof.y = s;
    proof.er = merkle_root(leaves);
    proof.witness_commitment = cw;

    auto segments = fiat_shamir_indices({proof.er}, proof.y, k, m - 1, proof.witness_commitment.digest);
    proof.challenges.reserve(k);
    for (uint64_t seg : segments) {
        SegmentChallenge ch;
        ch.segment = seg;
        ch.start = open_checkpoint(trace, leaves, seg);
        ch.end = open_checkpoint(trace, leaves, seg + 1);
        proof.challenges.push_back(std::move(ch));
    }
    return res;
}

StateProof prove_state(const CheckpointTrace& trace, uint64_t i) {
    if (i > trace.T) throw Error(ErrorCode::IndexOutOfRange, "step index beyond T");
    const uint64_t c = trace.interval;
    // checkpoints are at 0, c, 2c, ... plus T; leaf j holds index min(j*c, T)
    uint64_t leaf_index = i == trace.T ? trace.checkpoints.size() - 1 : i / c;
    const auto& anchor = trace.checkpoints[leaf_index];
    auto leaves = trace_leaves(trace);

    StateProof sp;
    sp.step_index = i;
    sp.anchor = {leaf_index, anchor, merkle_open(leaves, leaf_index)};
    sp.offset = i - anchor.index;
    sp.state = iterate(anchor.state, sp.offset);
    return sp;
}

}  // namespace vivc
