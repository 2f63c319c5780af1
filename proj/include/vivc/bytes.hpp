#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vivc {

using Bytes = std::vector<uint8_t>;
using Bytes32 = std::array<uint8_t, 32>;

// 32-byte digest carried through the sequential iteration.
using HashState = Bytes32;

std::string to_hex(std::span<const uint8_t> data);
std::optional<Bytes> from_hex(std::string_view hex);
std::optional<Bytes32> bytes32_from_hex(std::string_view hex);

// big-endian encodings used in all hash preimages
std::array<uint8_t, 8> be64(uint64_t v);
std::array<uint8_t, 4> be32(uint32_t v);

inline Bytes concat(std::initializer_list<std::span<const uint8_t>> parts) {
    Bytes out;
    size_t n = 0;
    for (auto p : parts) n += p.size();
    out.reserve(n);
    for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline std::span<const uint8_t> as_span(std::string_view s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace vivc
