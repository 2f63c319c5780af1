#include "vivc/trusted_setup.hpp"

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

Bytes32 compute_binding(const Bytes32& pk, const Bytes32& vk) {
    static constexpr std::string_view tag = "VIVC/bind";
    return sha256({as_span(tag), pk, vk});
}

bool binding_valid(const KeyPair& kp) {
    return kp.binding == compute_binding(kp.pk, kp.vk) && kp.pk != kp.vk;
}

KeyPair trusted_setup(uint32_t lambda, std::span<const uint8_t> setup_seed) {
    if (lambda != 80 && lambda != 128 && lambda != 256)
        throw Error(ErrorCode::BadLambda, "lambda must be one of 80, 128, 256");
    if (setup_seed.empty())
        throw Error(ErrorCode::EmptySeed, "setup seed must be nonempty");
    auto lam = be32(lambda);
    KeyPair kp;
    kp.lambda = lambda;
    kp.pk = sha256({as_span(std::string_view("VIVC/pk")), lam, setup_seed});
    kp.vk = sha256({as_span(std::string_view("VIVC/vk")), lam, setup_seed});
    kp.binding = compute_binding(kp.pk, kp.vk);
    return kp;
}

Bytes32 ceremony_genesis() {
    static constexpr std::string_view tag = "VIVC/genesis";
    return sha256(as_span(tag));
}

CeremonyChain::CeremonyChain() : srs(ceremony_genesis()) {}

CeremonyChain ceremony_contribute(const CeremonyChain& chain, std::span<const uint8_t> entropy) {
    if (entropy.empty())
        throw Error(ErrorCode::EmptyEntropy, "contribution entropy must be nonempty");
    static constexpr std::string_view tag = "VIVC/srs";
    CeremonyChain next = chain;
    Bytes32 contribution = sha256(entropy);
    next.contributions.push_back(contribution);
    next.srs = sha256({as_span(tag), chain.srs, contribution});
    return next;
}

SetupTranscript algorithm1_precompute(Rand128 r, const KeyPair& kp, const HashState& x,
                                      std::span<const uint8_t> w,
                                      std::span<const uint8_t> rng_seed,
                                      std::optional<uint64_t> corrupt_round) {
    if (!binding_valid(kp))
        throw Error(ErrorCode::BindingInvalid, "key pair binding does not verify");

    SessionRng rng(rng_seed);
    SetupTranscript tr;
    // One round per loop iteration of "while alpha != 1": exactly
    // ceil(log2 alpha_0) rounds on an honest run.
    for (AlphaState a = derive_alpha(r); a.alpha != 1; a = alpha_next(a)) {
        TranscriptRound round;
        round.alpha = a.alpha;

        auto idx = be64(a.round);
        Bytes message = concat({kp.pk, x, w, idx});
        Bytes32 randomness = rng.next();
        round.commitment = commit(message, randomness);
        round.opening = {message, randomness};
        if (corrupt_round && *corrupt_round == a.round)
            round.opening.randomness[0] ^= 0x01;

        round.verifier_bit = decommit(round.commitment, round.opening) ? 1 : 0;
        tr.rounds.push_back(std::move(round));
        if (tr.rounds.back().verifier_bit == 0) {
            tr.final_bit = 0;
            return tr;
        }
    }
    tr.final_bit = 1;
    return tr;
}

}  // namespace vivc
