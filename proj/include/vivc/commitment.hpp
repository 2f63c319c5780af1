#pragma once

#include "vivc/bytes.hpp"

namespace vivc {

struct Commitment {
    Bytes32 digest{};

    bool operator==(const Commitment&) const = default;
};

struct Opening {
    Bytes message;
    Bytes32 randomness{};
};

// digest = SHA-256("VIVC/com" || len64(message) || message || randomness)
Commitment commit(std::span<const uint8_t> message, const Bytes32& randomness);

bool decommit(const Commitment& c, const Opening& o);

}  // namespace vivc
