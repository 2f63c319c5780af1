#include "vivc/seq_hash.hpp"

#include <cmath>
#include <random>

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

static constexpr std::string_view kStepTag = "VIVC/step";

HashState step(const HashState& s) {
    return sha256({as_span(kStepTag), s}, HashPurpose::Step);
}

HashState iterate(HashState s, IterCount n) {
    if (n > kTMax)
        throw Error(ErrorCode::DelayTooLarge, "n exceeds T_max = 2^32");
    for (IterCount i = 0; i < n; ++i) s = step(s);
    return s;
}

RhoResult rho_length(const std::function<uint64_t(uint64_t)>& f, uint64_t start) {
    // Brent: find cycle length, then tail length.
    uint64_t power = 1, cycle = 1;
    uint64_t tortoise = start, hare = f(start);
    while (tortoise != hare) {
        if (power == cycle) {
            tortoise = hare;
            power *= 2;
            cycle = 0;
        }
        hare = f(hare);
        ++cycle;
    }
    tortoise = start;
    hare = start;
    for (uint64_t i = 0; i < cycle; ++i) hare = f(hare);
    uint64_t tail = 0;
    while (tortoise != hare) {
        tortoise = f(tortoise);
        hare = f(hare);
        ++tail;
    }
    return {tail, cycle};
}

static uint64_t truncated_step(uint64_t v, int bits) {
    HashState s{};
    auto enc = be64(v);
    std::copy(enc.begin(), enc.end(), s.end() - 8);
    HashState out = step(s);
    uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r = r << 8 | out[i];
    return bits == 64 ? r : r & ((uint64_t(1) << bits) - 1);
}

CycleStats cycle_experiment(int bits, int trials, uint64_t rng_seed) {
    CycleStats st;
    st.bits = bits;
    st.trials = trials;
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<uint64_t> dist(0, (uint64_t(1) << bits) - 1);

    double sum = 0, sum2 = 0, tails = 0, cycles = 0;
    for (int i = 0; i < trials; ++i) {
        auto r = rho_length([bits](uint64_t v) { return truncated_step(v, bits); }, dist(rng));
        double total = double(r.total());
        sum += total;
        sum2 += total * total;
        tails += double(r.tail);
        cycles += double(r.cycle);
    }
    st.mean_rho = sum / trials;
    st.mean_tail = tails / trials;
    st.mean_cycle = cycles / trials;
    double var = (sum2 - sum * sum / trials) / std::max(1, trials - 1);
    st.stderr_rho = std::sqrt(var / trials);
    return st;
}

}  // namespace vivc
