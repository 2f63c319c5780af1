#include "vivc/commitment.hpp"

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

static constexpr std::string_view kComTag = "VIVC/com";

Commitment commit(std::span<const uint8_t> message, const Bytes32& randomness) {
    if (message.size() >= (uint64_t(1) << 32))
        throw Error(ErrorCode::MessageTooLong, "message must be < 2^32 bytes");
    auto len = be64(message.size());
    return {sha256({as_span(kComTag), len, message, randomness})};
}

bool decommit(const Commitment& c, const Opening& o) {
    return commit(o.message, o.randomness) == c;
}

}  // namespace vivc
