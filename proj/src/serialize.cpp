#include "vivc/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

namespace vivc {

using json = nlohmann::ordered_json;

static Error malformed(const std::string& what) {
    return Error(ErrorCode::MalformedProof, what);
}

static json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw malformed("not a JSON object");
    return j;
}

static void check_version(const json& j) {
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != kFileVersion)
        throw malformed("missing or unsupported version");
}

static uint64_t get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) throw malformed(std::string("bad field ") + key);
    return j[key].get<uint64_t>();
}

static Bytes32 get_b32(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw malformed(std::string("bad field ") + key);
    auto v = bytes32_from_hex(j[key].get<std::string>());
    if (!v) throw malformed(std::string("bad hex in ") + key);
    return *v;
}

std::string keypair_to_json(const KeyPair& kp) {
    json j;
    j["version"] = kFileVersion;
    j["lambda"] = kp.lambda;
    j["pk_hex"] = to_hex(kp.pk);
    j["vk_hex"] = to_hex(kp.vk);
    j["binding_hex"] = to_hex(kp.binding);
    return j.dump(2) + "\n";
}

KeyPair keypair_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    KeyPair kp;
    uint64_t lambda = get_u64(j, "lambda");
    if (lambda != 80 && lambda != 128 && lambda != 256) throw malformed("bad lambda");
    kp.lambda = uint32_t(lambda);
    kp.pk = get_b32(j, "pk_hex");
    kp.vk = get_b32(j, "vk_hex");
    kp.binding = get_b32(j, "binding_hex");
    return kp;
}

static json opening_to_json(const CheckpointOpening& o) {
    json j;
    j["leaf_index"] = o.leaf_index;
    j["index"] = o.checkpoint.index;
    j["state_hex"] = to_hex(o.checkpoint.state);
    json path = json::array();
    for (const auto& n : o.path) {
        json e;
        e["sibling_hex"] = to_hex(n.sibling);
        e["side"] = n.sibling_on_left ? "left" : "right";
        path.push_back(std::move(e));
    }
    j["path"] = std::move(path);
    return j;
}

static CheckpointOpening opening_from_json(const json& j) {
    if (!j.is_object()) throw malformed("challenge opening is not an object");
    CheckpointOpening o;
    o.leaf_index = get_u64(j, "leaf_index");
    o.checkpoint.index = get_u64(j, "index");
    o.checkpoint.state = get_b32(j, "state_hex");
    if (!j.contains("path") || !j["path"].is_array()) throw malformed("bad path");
    for (const auto& e : j["path"]) {
        if (!e.is_object()) throw malformed("bad path node");
        PathNode n;
        n.sibling = get_b32(e, "sibling_hex");
        if (!e.contains("side") || !e["side"].is_string()) throw malformed("bad path side");
        std::string side = e["side"].get<std::string>();
        if (side != "left" && side != "right") throw malformed("bad path side");
        n.sibling_on_left = side == "left";
        o.path.push_back(std::move(n));
    }
    if (o.path.size() > 64) throw malformed("path too long");
    return o;
}

std::string proof_to_json(const EvalProof& proof) {
    json j;
    j["version"] = kFileVersion;
    j["lambda"] = proof.lambda;
    j["T"] = proof.T;
    j["interval"] = proof.interval;
    j["k"] = proof.k;
    j["x_hex"] = to_hex(proof.x);
    j["y_hex"] = to_hex(proof.y);
    j["er_hex"] = to_hex(proof.er);
    j["cw_hex"] = to_hex(proof.witness_commitment.digest);
    json challenges = json::array();
    for (const auto& ch : proof.challenges) {
        json e;
        e["segment"] = ch.segment;
        e["start"] = opening_to_json(ch.start);
        e["end"] = opening_to_json(ch.end);
        challenges.push_back(std::move(e));
    }
    j["challenges"] = std::move(challenges);
    return j.dump(2) + "\n";
}

EvalProof proof_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    EvalProof p;
    uint64_t lambda = get_u64(j, "lambda");
    if (lambda > 0xffffffffull) throw malformed("bad lambda");
    p.lambda = uint32_t(lambda);
    p.T = get_u64(j, "T");
    p.interval = get_u64(j, "interval");
    p.k = get_u64(j, "k");
    p.x = get_b32(j, "x_hex");
    p.y = get_b32(j, "y_hex");
    p.er = get_b32(j, "er_hex");
    p.witness_commitment.digest = get_b32(j, "cw_hex");
    if (!j.contains("challenges") || !j["challenges"].is_array()) throw malformed("bad challenges");
    if (j["challenges"].size() > 4096) throw malformed("too many challenges");
    for (const auto& e : j["challenges"]) {
        if (!e.is_object()) throw malformed("bad challenge");
        SegmentChallenge ch;
        ch.segment = get_u64(e, "segment");
        if (!e.contains("start") || !e.contains("end")) throw malformed("bad challenge");
        ch.start = opening_from_json(e["start"]);
        ch.end = opening_from_json(e["end"]);
        p.challenges.push_back(std::move(ch));
    }
    return p;
}

std::string trace_to_json(const CheckpointTrace& trace) {
    json j;
    j["version"] = kFileVersion;
    j["T"] = trace.T;
    j["interval"] = trace.interval;
    json cps = json::array();
    for (const auto& cp : trace.checkpoints) {
        json e;
        e["index"] = cp.index;
        e["state_hex"] = to_hex(cp.state);
        cps.push_back(std::move(e));
    }
    j["checkpoints"] = std::move(cps);
    return j.dump(2) + "\n";
}

CheckpointTrace trace_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    CheckpointTrace t;
    t.T = get_u64(j, "T");
    t.interval = get_u64(j, "interval");
    if (t.interval < 1 || t.interval > t.T) throw malformed("bad interval");
    if (!j.contains("checkpoints") || !j["checkpoints"].is_array()) throw malformed("bad checkpoints");
    const uint64_t expect = (t.T + t.interval - 1) / t.interval + 1;
    if (j["checkpoints"].size() != expect) throw malformed("checkpoint count mismatch");
    for (const auto& e : j["checkpoints"]) {
        if (!e.is_object()) throw malformed("bad checkpoint");
        Checkpoint cp;
        cp.index = get_u64(e, "index");
        cp.state = get_b32(e, "state_hex");
        if (!t.checkpoints.empty() && cp.index <= t.checkpoints.back().index)
            throw malformed("checkpoint indices not increasing");
        t.checkpoints.push_back(cp);
    }
    if (t.checkpoints.empty() || t.checkpoints.front().index != 0 ||
        t.checkpoints.back().index != t.T)
        throw malformed("checkpoint boundaries wrong");
    return t;
}

std::string ceremony_to_json(const CeremonyChain& chain) {
    json j;
    j["version"] = kFileVersion;
    json cs = json::array();
    for (const auto& c : chain.contributions) cs.push_back(to_hex(c));
    j["contributions"] = std::move(cs);
    j["srs_hex"] = to_hex(chain.srs);
    return j.dump(2) + "\n";
}

CeremonyChain ceremony_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    if (!j.contains("contributions") || !j["contributions"].is_array())
        throw malformed("bad contributions");
    CeremonyChain chain;
    Bytes32 srs = chain.srs;  // genesis
    std::vector<Bytes32> contributions;
    for (const auto& e : j["contributions"]) {
        if (!e.is_string()) throw malformed("bad contribution");
        auto c = bytes32_from_hex(e.get<std::string>());
        if (!c) throw malformed("bad contribution hex");
        contributions.push_back(*c);
    }
    // refold and cross-check the recorded srs
    static constexpr std::string_view tag = "VIVC/srs";
    for (const auto& c : contributions) srs = sha256({as_span(tag), srs, c});
    if (srs != get_b32(j, "srs_hex")) throw malformed("srs does not match contribution fold");
    chain.contributions = std::move(contributions);
    chain.srs = srs;
    return chain;
}

std::string transcript_to_json(const SetupTranscript& tr) {
    json rounds = json::array();
    for (const auto& r : tr.rounds) {
        json e;
        e["alpha"] = r.alpha;
        e["commitment_hex"] = to_hex(r.commitment.digest);
        e["message_hex"] = to_hex(r.opening.message);
        e["randomness_hex"] = to_hex(r.opening.randomness);
        e["verifier_bit"] = r.verifier_bit;
        rounds.push_back(std::move(e));
    }
    json j;
    j["version"] = kFileVersion;
    j["rounds"] = std::move(rounds);
    j["final_bit"] = tr.final_bit;
    return j.dump(2) + "\n";
}

std::string bench_report_to_json(const BenchReport& rep) {
    json j;
    j["version"] = kFileVersion;
    j["interval"] = rep.interval;
    j["k"] = rep.k;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json e;
        e["T"] = r.T;
        e["eval_wall_ms"] = r.eval_wall_ms;
        e["eval_hash_count"] = r.eval_hash_count;
        e["verify_wall_ms"] = r.verify_wall_ms;
        e["verify_hash_count"] = r.verify_hash_count;
        e["verify_total_hashes"] = r.verify_total_hashes;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["slope_ms_per_step"] = rep.slope_ms_per_step;
    j["intercept_ms"] = rep.intercept_ms;
    j["r_squared"] = rep.r_squared;
    return j.dump(2) + "\n";
}

BenchReport bench_report_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    BenchReport rep;
    rep.interval = get_u64(j, "interval");
    rep.k = get_u64(j, "k");
    if (!j.contains("rows") || !j["rows"].is_array()) throw malformed("bad rows");
    for (const auto& e : j["rows"]) {
        BenchRow r;
        r.T = get_u64(e, "T");
        r.eval_wall_ms = e.at("eval_wall_ms").get<double>();
        r.eval_hash_count = get_u64(e, "eval_hash_count");
        r.verify_wall_ms = e.at("verify_wall_ms").get<double>();
        r.verify_hash_count = get_u64(e, "verify_hash_count");
        r.verify_total_hashes = get_u64(e, "verify_total_hashes");
        rep.rows.push_back(r);
    }
    rep.slope_ms_per_step = j.at("slope_ms_per_step").get<double>();
    rep.intercept_ms = j.at("intercept_ms").get<double>();
    rep.r_squared = j.at("r_squared").get<double>();
    return rep;
}

std::string bench_report_to_table(const BenchReport& rep) {
    std::ostringstream out;
    char line[160];
    snprintf(line, sizeof line, "%10s %14s %16s %14s %18s %20s\n", "T", "eval_ms",
             "eval_hashes", "verify_ms", "verify_hashes", "verify_total_hashes");
    out << line;
    for (const auto& r : rep.rows) {
        snprintf(line, sizeof line, "%10llu %14.3f %16llu %14.3f %18llu %20llu\n",
                 (unsigned long long)r.T, r.eval_wall_ms, (unsigned long long)r.eval_hash_count,
                 r.verify_wall_ms, (unsigned long long)r.verify_hash_count,
                 (unsigned long long)r.verify_total_hashes);
        out << line;
    }
    snprintf(line, sizeof line, "fit: slope=%.6g ms/step intercept=%.4g ms R^2=%.4f\n",
             rep.slope_ms_per_step, rep.intercept_ms, rep.r_squared);
    out << line;
    return out.str();
}

}  // namespace vivc
