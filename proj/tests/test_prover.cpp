#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vivc/errors.hpp"
#include "vivc/prover.hpp"
#include "vivc/seq_hash.hpp"
#include "vivc/sha256.hpp"

using namespace vivc;

static std::span<const uint8_t> sv(std::string_view s) { return as_span(s); }

static KeyPair kp() { return trusted_setup(128, sv("prover-tests")); }

TEST_CASE("seed_state pins and avalanche") {
    auto pair = trusted_setup(128, sv("ceremony-1"));
    HashState x;
    x.fill(0x11);
    Bytes32 r;
    r.fill(0x22);
    Commitment cw = commit(sv("witness"), r);
    CHECK(to_hex(cw.digest) ==
          "685af524977f0da21e9b9a0f1f9137a8f7554310c4d987dd1e6b399f264b21ef");
    auto s = seed_state(pair.pk, x, cw);
    CHECK(s == seed_state(pair.pk, x, cw));
    // Python hashlib over b"VIVC/seed" + pk + x + cw
    CHECK(to_hex(s) == "da28f94e615900954fe8174a6547b06a98398a24464870a0a82eabce0df17b42");

    std::mt19937_64 rng(41);
    for (int i = 0; i < 64; ++i) {
        auto pk2 = pair.pk;
        auto x2 = x;
        auto cw2 = cw;
        switch (i % 3) {
            case 0: pk2[rng() % 32] ^= uint8_t(1) << (rng() % 8); break;
            case 1: x2[rng() % 32] ^= uint8_t(1) << (rng() % 8); break;
            default: cw2.digest[rng() % 32] ^= uint8_t(1) << (rng() % 8); break;
        }
        CHECK(seed_state(pk2, x2, cw2) != s);
    }
}

TEST_CASE("minimal chain T=1 c=1") {
    auto pair = kp();
    HashState x{};
    auto res = eval(pair, x, sv("w"), 1, 1, 1, sv("rng"));
    CHECK(res.trace.checkpoints.size() == 2);
    CHECK(res.proof.y == step(seed_state(pair.pk, x, res.proof.witness_commitment)));
    CHECK(res.proof.er != Bytes32{});
}

TEST_CASE("interval affects only the commitment layout, not y") {
    auto pair = kp();
    HashState x{};
    x[3] = 7;
    auto a = eval(pair, x, sv("w"), 1024, 32, 5, sv("rng"));
    auto b = eval(pair, x, sv("w"), 1024, 128, 5, sv("rng"));
    CHECK(a.proof.y == b.proof.y);
    CHECK(a.proof.er != b.proof.er);
}

TEST_CASE("T=8 c=2 matches the independent Merkle oracle over 5 leaves") {
    auto pair = kp();
    HashState x{};
    auto res = eval(pair, x, sv("w"), 8, 2, 2, sv("rng"));
    REQUIRE(res.trace.checkpoints.size() == 5);
    std::vector<Bytes32> leaves;
    static constexpr std::string_view tag = "VIVC/leaf";
    for (const auto& cp : res.trace.checkpoints) {
        auto idx = be64(cp.index);
        leaves.push_back(sha256({as_span(tag), idx, cp.state}));
    }
    CHECK(res.proof.er == oracle::merkle_root(leaves));
}

TEST_CASE("chain recomputation oracle agrees for random runs") {
    auto pair = kp();
    std::mt19937_64 rng(43);
    for (int i = 0; i < 5; ++i) {
        HashState x = oracle::random_state(rng);
        uint64_t T = 1 + rng() % 4096;
        uint64_t c = 1 + rng() % T;
        uint64_t m = (T + c - 1) / c + 1;
        uint64_t k = 1 + rng() % (m - 1);
        auto res = eval(pair, x, sv("w"), T, c, k, sv("rng"));
        CHECK(res.proof.y ==
              iterate(seed_state(pair.pk, x, res.proof.witness_commitment), T));
        // checkpoint structure
        CHECK(res.trace.checkpoints.size() == m);
        CHECK(res.trace.checkpoints.front().index == 0);
        CHECK(res.trace.checkpoints.back().index == T);
        for (size_t j = 0; j + 1 < res.trace.checkpoints.size(); ++j) {
            const auto& a = res.trace.checkpoints[j];
            const auto& b = res.trace.checkpoints[j + 1];
            CHECK(b.state == iterate(a.state, b.index - a.index));
        }
        // every challenge verifies and re-hashes
        auto leaves = trace_leaves(res.trace);
        for (const auto& ch : res.proof.challenges) {
            CHECK(merkle_verify(res.proof.er,
                                checkpoint_leaf(ch.start.checkpoint.index, ch.start.checkpoint.state),
                                ch.start.path, ch.start.leaf_index));
            CHECK(iterate(ch.start.checkpoint.state,
                          ch.end.checkpoint.index - ch.start.checkpoint.index) ==
                  ch.end.checkpoint.state);
        }
    }
}

TEST_CASE("the chain costs exactly T step hashes, never parallelized") {
    auto pair = kp();
    HashState x{};
    hash_counters().reset();
    eval(pair, x, sv("w"), 2048, 64, 10, sv("rng"));
    CHECK(hash_counters().step.load() == 2048);
}

TEST_CASE("parameter validation") {
    auto pair = kp();
    HashState x{};
    CHECK_THROWS_AS(eval(pair, x, sv("w"), 8, 0, 1, sv("rng")), Error);
    CHECK_THROWS_AS(eval(pair, x, sv("w"), 8, 9, 1, sv("rng")), Error);
    CHECK_THROWS_AS(eval(pair, x, sv("w"), 8, 2, 0, sv("rng")), Error);
    CHECK_THROWS_AS(eval(pair, x, sv("w"), 8, 2, 5, sv("rng")), Error);  // k > m-1
    KeyPair bad = pair;
    bad.pk[0] ^= 1;
    CHECK_THROWS_AS(eval(bad, x, sv("w"), 8, 2, 2, sv("rng")), Error);
}

TEST_CASE("prove_state") {
    auto pair = kp();
    HashState x{};
    auto res = eval(pair, x, sv("w"), 100, 8, 3, sv("rng"));

    SUBCASE("at a checkpoint: pure Merkle proof") {
        auto sp = prove_state(res.trace, 16);
        CHECK(sp.offset == 0);
        CHECK(sp.state == res.trace.checkpoints[2].state);
    }
    SUBCASE("offset 3 re-derivation needs exactly 3 steps") {
        auto sp = prove_state(res.trace, 8 * 4 + 3);
        CHECK(sp.offset == 3);
        hash_counters().reset();
        CHECK(iterate(sp.anchor.checkpoint.state, sp.offset) == sp.state);
        CHECK(hash_counters().step.load() == 3);
    }
    SUBCASE("i = T proves the final output") {
        auto sp = prove_state(res.trace, 100);
        CHECK(sp.offset == 0);
        CHECK(sp.state == res.proof.y);
    }
    SUBCASE("out of range refused") {
        CHECK_THROWS_AS(prove_state(res.trace, 101), Error);
    }
}
