#pragma once

#include <cstdint>
#include <functional>

#include "vivc/bytes.hpp"

namespace vivc {

using IterCount = uint64_t;

// Delay parameters above this are refused (DelayTooLarge).
inline constexpr IterCount kTMax = uint64_t(1) << 32;

// One application of the root function g: SHA-256("VIVC/step" || s).
HashState step(const HashState& s);

// n-fold composition of step; iterate(s, 0) == s. Sequential by contract:
// this loop is the delay and must never be parallelized internally.
HashState iterate(HashState s, IterCount n);

struct RhoResult {
    uint64_t tail;   // steps before entering the cycle
    uint64_t cycle;  // cycle length
    uint64_t total() const { return tail + cycle; }
};

// Brent cycle detection on an arbitrary function over uint64 values.
RhoResult rho_length(const std::function<uint64_t(uint64_t)>& f, uint64_t start);

struct CycleStats {
    int bits = 0;
    int trials = 0;
    double mean_rho = 0.0;    // mean tail+cycle length
    double stderr_rho = 0.0;  // standard error of the mean
    double mean_tail = 0.0;
    double mean_cycle = 0.0;
};

// Toy-scale analog of the iterated-hash uniqueness argument: the step
// function truncated to `bits` bits, rho-detected from random starts.
// Random-function expectation for the mean is sqrt(pi * 2^bits / 2).
CycleStats cycle_experiment(int bits, int trials, uint64_t rng_seed = 1);

}  // namespace vivc
