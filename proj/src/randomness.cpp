#include "vivc/randomness.hpp"

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

std::string rand128_to_string(Rand128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), char('0' + int(v % 10)));
        v /= 10;
    }
    return s;
}

int ceil_log2_u128(Rand128 v) {
    int bits = 0;
    bool pow2 = true;
    Rand128 x = v;
    while (x > 1) {
        if (x & 1) pow2 = false;
        x >>= 1;
        ++bits;
    }
    return pow2 ? bits : bits + 1;
}

int ceil_log2_u64(uint64_t v) { return ceil_log2_u128(v); }

static Rand128 read_u128_be(const Bytes32& d) {
    Rand128 r = 0;
    for (int i = 0; i < 16; ++i) r = r << 8 | d[i];
    return r;
}

Rand128 rand_gen(std::span<const uint8_t> seed) {
    if (seed.empty()) throw Error(ErrorCode::EmptySeed, "rand_gen seed must be nonempty");
    static constexpr std::string_view tag = "VIVC/randgen";
    Bytes32 d = sha256({as_span(tag), seed});
    Rand128 r = read_u128_be(d);
    for (uint64_t ctr = 1; r < 2; ++ctr) {
        auto c = be64(ctr);
        d = sha256({as_span(tag), seed, c});
        r = read_u128_be(d);
    }
    return r;
}

int double_log(Rand128 r) { return ceil_log2_u128(Rand128(ceil_log2_u128(r))); }

AlphaState derive_alpha(Rand128 r) {
    if (r < 4) throw Error(ErrorCode::RTooSmall, "derive_alpha requires R >= 4");
    uint64_t base = uint64_t(ceil_log2_u128(r));  // <= 128
    int exp = double_log(r);                      // <= 7
    uint64_t alpha = 1;
    for (int i = 0; i < exp; ++i) alpha *= base;  // <= 128^7 = 2^49
    return {alpha, 0};
}

AlphaState alpha_next(const AlphaState& a) {
    uint64_t next = (a.alpha + 1) / 2;
    if (next < 1) next = 1;
    return {next, a.round + 1};
}

IterCount derive_delay(Rand128 r, IterCount t_min, IterCount t_max) {
    if (t_min < 1 || t_min > t_max || t_max > kTMax)
        throw Error(ErrorCode::BadRange, "need 1 <= T_min <= T_max <= 2^32");
    Rand128 span = Rand128(t_max) - t_min + 1;
    return t_min + IterCount(r % span);
}

std::vector<uint64_t> fiat_shamir_indices(const Commitment& root, const HashState& y,
                                          uint64_t k, uint64_t m,
                                          std::span<const uint8_t> context) {
    static constexpr std::string_view tag = "VIVC/fs";
    std::vector<uint64_t> out;
    out.reserve(k);
    for (uint64_t j = 0; j < k; ++j) {
        auto jb = be64(j);
        Bytes32 d = sha256({as_span(tag), root.digest, y, jb, context});
        // full 256-bit digest reduced mod m (m <= 2^32 so the fold fits u64)
        uint64_t r = 0;
        for (uint8_t b : d) r = (r << 8 | b) % m;
        out.push_back(r);
    }
    return out;
}

Bytes32 SessionRng::next() {
    static constexpr std::string_view tag = "VIVC/rng";
    auto c = be64(counter_++);
    return sha256({as_span(tag), seed_, c});
}

}  // namespace vivc
