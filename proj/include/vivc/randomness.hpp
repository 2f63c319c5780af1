#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vivc/bytes.hpp"
#include "vivc/commitment.hpp"
#include "vivc/seq_hash.hpp"

namespace vivc {

// 128-bit beacon value; rand_gen guarantees >= 2 so logs are defined.
using Rand128 = unsigned __int128;

std::string rand128_to_string(Rand128 v);

struct AlphaState {
    uint64_t alpha = 1;
    uint64_t round = 0;
};

// ceil(log2(v)) for v >= 1
int ceil_log2_u128(Rand128 v);
int ceil_log2_u64(uint64_t v);

// R = first 16 bytes of SHA-256("VIVC/randgen" || seed), big-endian;
// values below 2 are re-drawn by appending an 8-byte counter.
Rand128 rand_gen(std::span<const uint8_t> seed);

// R_a = ceil(log2(ceil(log2(R))))
int double_log(Rand128 r);

// alpha_0 = ceil(log2 R) ^ R_a; the precomputation loop budget.
AlphaState derive_alpha(Rand128 r);

// Halving schedule with fixpoint at 1; alpha_0 reaches 1 in exactly
// ceil(log2 alpha_0) rounds.
AlphaState alpha_next(const AlphaState& a);

// T = T_min + (R mod (T_max - T_min + 1))
IterCount derive_delay(Rand128 r, IterCount t_min, IterCount t_max);

// index_j = SHA-256("VIVC/fs" || root || y || j_be64 || context) mod m.
// Callers binding extra material (e.g. a witness commitment) pass it as context.
std::vector<uint64_t> fiat_shamir_indices(const Commitment& root, const HashState& y,
                                          uint64_t k, uint64_t m,
                                          std::span<const uint8_t> context = {});

// Deterministic per-session randomness stream: SHA-256("VIVC/rng" || seed || ctr).
class SessionRng {
public:
    explicit SessionRng(std::span<const uint8_t> seed)
        : seed_(seed.begin(), seed.end()) {}

    Bytes32 next();

private:
    Bytes seed_;
    uint64_t counter_ = 0;
};

}  // namespace vivc
