#include "vivc/sha256.hpp"

#include <openssl/evp.h>

#include "vivc/errors.hpp"

namespace vivc {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DelayTooLarge: return "DelayTooLarge";
        case ErrorCode::MessageTooLong: return "MessageTooLong";
        case ErrorCode::EmptySeed: return "EmptySeed";
        case ErrorCode::EmptyEntropy: return "EmptyEntropy";
        case ErrorCode::RTooSmall: return "RTooSmall";
        case ErrorCode::BadRange: return "BadRange";
        case ErrorCode::BadLambda: return "BadLambda";
        case ErrorCode::BindingInvalid: return "BindingInvalid";
        case ErrorCode::BadInterval: return "BadInterval";
        case ErrorCode::BadChallengeCount: return "BadChallengeCount";
        case ErrorCode::EmptyLeaves: return "EmptyLeaves";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::BadGenerator: return "BadGenerator";
        case ErrorCode::MalformedProof: return "MalformedProof";
    }
    return "Unknown";
}

HashCounters& hash_counters() {
    static HashCounters counters;
    return counters;
}

static void count(HashPurpose purpose) {
    auto& c = hash_counters();
    switch (purpose) {
        case HashPurpose::Step: c.step.fetch_add(1, std::memory_order_relaxed); break;
        case HashPurpose::Node: c.node.fetch_add(1, std::memory_order_relaxed); break;
        case HashPurpose::Leaf: c.leaf.fetch_add(1, std::memory_order_relaxed); break;
        case HashPurpose::Other: c.other.fetch_add(1, std::memory_order_relaxed); break;
    }
}

Bytes32 sha256(std::span<const uint8_t> data, HashPurpose purpose) {
    Bytes32 out;
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr);
    count(purpose);
    return out;
}

Bytes32 sha256(std::initializer_list<std::span<const uint8_t>> parts, HashPurpose purpose) {
    thread_local EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    for (auto p : parts) EVP_DigestUpdate(ctx, p.data(), p.size());
    Bytes32 out;
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, out.data(), &len);
    count(purpose);
    return out;
}

}  // namespace vivc
