#pragma once

#include <string>

#include "vivc/adversary.hpp"
#include "vivc/prover.hpp"
#include "vivc/trusted_setup.hpp"

namespace vivc {

inline constexpr int kFileVersion = 1;

// All serializers emit version-tagged JSON with lowercase-hex byte fields and
// fixed field order. Parsers reject unknown versions and malformed content
// with Error(MalformedProof); they never crash on adversarial bytes.

std::string keypair_to_json(const KeyPair& kp);
KeyPair keypair_from_json(const std::string& text);

std::string proof_to_json(const EvalProof& proof);
EvalProof proof_from_json(const std::string& text);

std::string trace_to_json(const CheckpointTrace& trace);
CheckpointTrace trace_from_json(const std::string& text);

std::string ceremony_to_json(const CeremonyChain& chain);
CeremonyChain ceremony_from_json(const std::string& text);

std::string transcript_to_json(const SetupTranscript& tr);

std::string bench_report_to_json(const BenchReport& rep);
BenchReport bench_report_from_json(const std::string& text);
std::string bench_report_to_table(const BenchReport& rep);

}  // namespace vivc
