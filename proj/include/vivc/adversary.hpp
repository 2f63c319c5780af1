#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "vivc/prover.hpp"
#include "vivc/verifier.hpp"

namespace vivc {

using BigInt = boost::multiprecision::cpp_int;

// Desk-scale stand-in for a group of unknown order: small RSA-style modulus.
// The factorization lives only in test oracles, never here.
struct GroupParams {
    BigInt modulus;
    std::vector<BigInt> generators;  // each coprime to the modulus
};

GroupParams make_group(const BigInt& modulus, const std::vector<BigInt>& generators);

// sum_{i=1..q} t^i — the exponent of prod_i g^{t^i} under group multiplication
BigInt exponent_sum(uint64_t t, uint32_t q);

// t^{q(q+1)/2} — the literal exponent of the product formula's other reading;
// diverges from exponent_sum except in degenerate cases, reported side by side
BigInt product_exponent(uint64_t t, uint32_t q);

// prod_{i=1..q} g^{t^i} mod N via q independent modular exponentiations
// (the parallelizable form)
BigInt eval_group_product(const GroupParams& g, size_t gen_index, uint64_t t, uint32_t q);

struct SpeedupReport {
    uint64_t T = 0;
    unsigned q = 0;
    int trials = 0;
    int guess_bits = 0;  // 256 means the full state space
    uint64_t guesses_per_worker = 0;
    uint64_t successes = 0;
    double success_rate = 0.0;
    double analytic_bound = 0.0;  // q * guesses / 2^guess_bits
    double honest_wall_ms = 0.0;
    double parallel_wall_ms = 0.0;
    double speedup = 1.0;
};

// Adversary splits the chain among q workers who must guess their segment's
// start state in a 2^guess_bits-truncated space; success means some worker
// guesses its target. Measures the parallel wall-time speedup alongside.
SpeedupReport parallel_attack_sim(uint64_t T, unsigned q, int trials, int guess_bits,
                                  uint64_t guesses_per_worker, uint64_t rng_seed);

struct BenchRow {
    uint64_t T = 0;
    double eval_wall_ms = 0.0;
    uint64_t eval_hash_count = 0;    // step invocations of the chain; == T
    double verify_wall_ms = 0.0;
    uint64_t verify_hash_count = 0;  // step invocations of segment re-hashing
    uint64_t verify_total_hashes = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    uint64_t interval = 0;
    uint64_t k = 0;
    double slope_ms_per_step = 0.0;
    double intercept_ms = 0.0;
    double r_squared = 0.0;
};

BenchReport sequentiality_bench(const std::vector<uint64_t>& t_values, uint64_t c, uint64_t k,
                                int repeats);

enum class ForgeStrategy { BitFlip, WrongY, ReplayedChallenges, RegraftedTree };

struct ForgeOutcome {
    Verdict verdict;
    size_t corrupted_segments = 0;  // RegraftedTree only
};

// Applies the named forgery to an honest proof (the trace is the cheating
// prover's own material) and runs verify on the result.
ForgeOutcome forge_attempt(const KeyPair& kp, const HashState& x, const EvalProof& proof,
                           const CheckpointTrace& trace, ForgeStrategy strategy,
                           double delta, uint64_t rng_seed);

// Cheating prover: injects errors at round(delta * (m-1)) segment boundaries,
// continues the chain from each injected state, and rebuilds a fully
// consistent Merkle tree and Fiat-Shamir challenge set over the bad chain.
// Caught only when a challenged segment is a corrupted one.
ForgeOutcome regraft_prover(const KeyPair& kp, const HashState& x, const EvalProof& proof,
                            const CheckpointTrace& trace, double delta, uint64_t rng_seed);

}  // namespace vivc
