#include <CLI11.hpp>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vivc/errors.hpp"
#include "vivc/sha256.hpp"

#include "vivc/adversary.hpp"
#include "vivc/serialize.hpp"
#include "vivc/verifier.hpp"

using namespace vivc;

namespace {

// exit codes: 0 accept/success, 1 reject, 2 error
constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot write " + path);
    out << content;
}

struct SeedOpts {
    std::string seed;
    std::string seed_hex;
    std::string seed_file;

    void attach(CLI::App* app) {
        app->add_option("--seed", seed, "seed as a UTF-8 string");
        app->add_option("--seed-hex", seed_hex, "seed as hex bytes");
        app->add_option("--seed-file", seed_file, "file whose bytes are the seed");
    }

    Bytes resolve() const {
        if (!seed.empty()) return Bytes(seed.begin(), seed.end());
        if (!seed_hex.empty()) {
            auto v = from_hex(seed_hex);
            if (!v) throw CliError("--seed-hex is not valid hex");
            return *v;
        }
        if (!seed_file.empty()) {
            std::string content = read_file(seed_file);
            return Bytes(content.begin(), content.end());
        }
        if (const char* env = std::getenv("VIVC_SEED"); env && *env)
            return Bytes(env, env + std::strlen(env));
        throw CliError("no seed given (--seed/--seed-hex/--seed-file or VIVC_SEED)");
    }
};

KeyPair load_keypair(const std::string& path) {
    KeyPair kp = keypair_from_json(read_file(path));
    if (!binding_valid(kp)) throw Error(ErrorCode::BindingInvalid, "keypair binding check failed");
    return kp;
}

HashState parse_x(const std::string& x_hex, const Bytes& seed) {
    if (!x_hex.empty()) {
        auto x = bytes32_from_hex(x_hex);
        if (!x) throw CliError("--x must be 64 hex chars");
        return *x;
    }
    static constexpr std::string_view tag = "VIVC/x";
    return sha256({as_span(tag), seed});
}

// accepts "1024" or "2^14"
uint64_t parse_t(const std::string& s) {
    size_t caret = s.find('^');
    try {
        if (caret == std::string::npos) return std::stoull(s);
        uint64_t base = std::stoull(s.substr(0, caret));
        uint64_t exp = std::stoull(s.substr(caret + 1));
        uint64_t v = 1;
        for (uint64_t i = 0; i < exp; ++i) v *= base;
        return v;
    } catch (const std::exception&) {
        throw CliError("cannot parse delay value '" + s + "'");
    }
}

std::vector<uint64_t> parse_t_list(const std::string& s) {
    std::vector<uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_t(item));
    if (out.empty()) throw CliError("empty T list");
    return out;
}

void shred_file(const std::string& path) {
    std::error_code ec;
    auto size = std::filesystem::file_size(path, ec);
    if (!ec) {
        std::ofstream out(path, std::ios::binary | std::ios::in);
        std::string zeros(size, '\0');
        out.write(zeros.data(), std::streamsize(zeros.size()));
    }
    std::filesystem::remove(path, ec);
}

bool g_quiet = false;

void say(const std::string& line) {
    if (!g_quiet) std::cout << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"V_IVC: iterated-hash verifiable delay function with Merkle checkpoints"};
    app.require_subcommand(1);
    app.add_flag("--quiet", g_quiet, "suppress informational output");

    // setup
    auto* setup = app.add_subcommand("setup", "generate a proving/verifying key pair");
    uint32_t lambda = 128;
    std::string out_path = "keypair.json";
    bool shred = false;
    SeedOpts setup_seed;
    setup->add_option("--lambda", lambda, "security parameter: 80, 128 or 256");
    setup->add_option("--out", out_path, "output keypair file");
    setup->add_flag("--shred-seed", shred, "overwrite and delete the seed file afterwards");
    setup_seed.attach(setup);

    // contribute
    auto* contribute = app.add_subcommand("contribute", "append a ceremony contribution");
    std::string ceremony_path = "ceremony.json";
    std::string entropy;
    std::string entropy_file;
    contribute->add_option("--ceremony", ceremony_path, "ceremony chain file (created if absent)");
    contribute->add_option("--entropy", entropy, "contribution entropy string");
    contribute->add_option("--entropy-file", entropy_file, "file with contribution entropy");

    // shared eval options
    std::string keypair_path = "keypair.json";
    std::string x_hex;
    std::string witness = "witness";
    std::string t_str;
    std::string t_min_str, t_max_str;
    uint64_t interval = 0;
    uint64_t k = 20;
    std::string proof_path = "proof.json";
    std::string trace_path;
    SeedOpts eval_seed;

    auto add_eval_opts = [&](CLI::App* cmd) {
        cmd->add_option("--keypair", keypair_path, "keypair file");
        cmd->add_option("--x", x_hex, "statement input, 64 hex chars (default: derived from seed)");
        cmd->add_option("--witness", witness, "witness string (kept private; only its commitment is published)");
        cmd->add_option("--t", t_str, "fixed delay T (accepts 2^N)");
        cmd->add_option("--t-min", t_min_str, "lower delay bound for seed-derived T");
        cmd->add_option("--t-max", t_max_str, "upper delay bound for seed-derived T");
        cmd->add_option("--interval", interval, "checkpoint interval c (default max(1, T/1024))");
        cmd->add_option("--k", k, "challenge count");
        eval_seed.attach(cmd);
    };

    auto* evalc = app.add_subcommand("eval", "run the delay and emit a proof");
    add_eval_opts(evalc);
    evalc->add_option("--out", proof_path, "output proof file");
    evalc->add_option("--trace-out", trace_path, "also write the checkpoint trace");

    // verify
    auto* verifyc = app.add_subcommand("verify", "verify a proof (stateless on-chain analog)");
    std::string v_keypair = "keypair.json", v_proof = "proof.json";
    verifyc->add_option("--keypair", v_keypair, "keypair file");
    verifyc->add_option("--proof", v_proof, "proof file");

    // checkpoint
    auto* checkpointc = app.add_subcommand("checkpoint", "prove and verify an intermediate state");
    std::string c_keypair = "keypair.json", c_trace = "trace.json", c_proof = "proof.json";
    uint64_t c_index = 0;
    checkpointc->add_option("--keypair", c_keypair, "keypair file");
    checkpointc->add_option("--trace", c_trace, "checkpoint trace file from eval --trace-out");
    checkpointc->add_option("--proof", c_proof, "proof file (source of Er)");
    checkpointc->add_option("--index", c_index, "step index to prove")->required();

    // bench
    auto* benchc = app.add_subcommand("bench", "sequentiality benchmark");
    std::string bench_t = "2^14,2^16,2^18";
    uint64_t bench_c = 64, bench_k = 20;
    int repeats = 3;
    std::string bench_out;
    benchc->add_option("--t", bench_t, "comma-separated delays, e.g. 2^14,2^16,2^18");
    benchc->add_option("--interval", bench_c, "checkpoint interval c");
    benchc->add_option("--k", bench_k, "challenge count");
    benchc->add_option("--repeats", repeats, "timing repeats per row");
    benchc->add_option("--out", bench_out, "write the JSON report here");

    // attack
    auto* attackc = app.add_subcommand("attack", "forgery and parallel-adversary harness");
    std::string strategy = "bit-flip";
    double delta = 0.1;
    int trials = 100;
    unsigned aq = 8;
    std::string attack_t = "1024";
    int guess_bits = 256;
    uint64_t guesses = 1;
    attackc->add_option("--strategy", strategy,
                        "bit-flip | wrong-y | replayed-challenges | regrafted-tree | parallel");
    attackc->add_option("--delta", delta, "fraction of corrupted segments (regrafted-tree)");
    attackc->add_option("--trials", trials, "number of attempts");
    attackc->add_option("--q", aq, "parallel workers (parallel strategy)");
    attackc->add_option("--t", attack_t, "delay T for the underlying honest proof");
    attackc->add_option("--guess-bits", guess_bits, "truncated guess space (parallel strategy)");
    attackc->add_option("--guesses", guesses, "guesses per worker per trial (parallel strategy)");

    // roundtrip
    auto* roundtripc = app.add_subcommand("roundtrip", "eval then verify in one step");
    add_eval_opts(roundtripc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (setup->parsed()) {
            Bytes seed = setup_seed.resolve();
            KeyPair kp = trusted_setup(lambda, seed);
            write_file(out_path, keypair_to_json(kp));
            if (shred && !setup_seed.seed_file.empty()) shred_file(setup_seed.seed_file);
            say("binding " + to_hex(kp.binding));
            return kOk;
        }

        if (contribute->parsed()) {
            CeremonyChain chain;
            if (std::filesystem::exists(ceremony_path))
                chain = ceremony_from_json(read_file(ceremony_path));
            Bytes e;
            if (!entropy.empty())
                e.assign(entropy.begin(), entropy.end());
            else if (!entropy_file.empty()) {
                std::string content = read_file(entropy_file);
                e.assign(content.begin(), content.end());
            } else
                throw CliError("need --entropy or --entropy-file");
            chain = ceremony_contribute(chain, e);
            write_file(ceremony_path, ceremony_to_json(chain));
            say("srs " + to_hex(chain.srs));
            return kOk;
        }

        if (evalc->parsed() || roundtripc->parsed()) {
            KeyPair kp = load_keypair(keypair_path);
            Bytes seed = eval_seed.resolve();
            uint64_t T;
            if (!t_str.empty()) {
                T = parse_t(t_str);
            } else if (!t_min_str.empty() && !t_max_str.empty()) {
                Rand128 r = rand_gen(seed);
                T = derive_delay(r, parse_t(t_min_str), parse_t(t_max_str));
            } else {
                throw CliError("need --t or both --t-min and --t-max");
            }
            uint64_t c = interval > 0 ? interval : std::max<uint64_t>(1, T / 1024);
            uint64_t m = (T + c - 1) / c + 1;
            uint64_t kk = std::min<uint64_t>(k, m - 1);
            HashState x = parse_x(x_hex, seed);
            auto res = eval(kp, x, as_span(std::string_view(witness)), T, c, kk, seed);
            say("T " + std::to_string(T));
            say("y " + to_hex(res.proof.y));
            say("er " + to_hex(res.proof.er));
            if (evalc->parsed()) {
                write_file(proof_path, proof_to_json(res.proof));
                if (!trace_path.empty()) write_file(trace_path, trace_to_json(res.trace));
                return kOk;
            }
            Verdict v = verify(kp, x, res.proof);
            if (v.accepted) {
                char buf[32];
                snprintf(buf, sizeof buf, "%.6f", *v.D);
                std::cout << buf << "\n";
                return kOk;
            }
            std::cout << reject_reason_name(*v.reason) << "\n";
            return kReject;
        }

        if (verifyc->parsed()) {
            KeyPair kp;
            EvalProof proof;
            try {
                kp = keypair_from_json(read_file(v_keypair));
                proof = proof_from_json(read_file(v_proof));
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kError;
            }
            Verdict v = verify(kp, proof.x, proof);
            if (v.accepted) {
                char buf[32];
                snprintf(buf, sizeof buf, "%.6f", *v.D);
                std::cout << buf << "\n";
                return kOk;
            }
            std::cout << reject_reason_name(*v.reason) << "\n";
            return kReject;
        }

        if (checkpointc->parsed()) {
            KeyPair kp;
            CheckpointTrace trace;
            EvalProof proof;
            try {
                kp = load_keypair(c_keypair);
                trace = trace_from_json(read_file(c_trace));
                proof = proof_from_json(read_file(c_proof));
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kError;
            }
            StateProof sp = prove_state(trace, c_index);
            bool ok = verify_checkpoint(kp, proof.er, sp, trace.checkpoints.size());
            say("state " + to_hex(sp.state));
            if (ok) {
                std::cout << "ok\n";
                return kOk;
            }
            std::cout << "checkpoint rejected\n";
            return kReject;
        }

        if (benchc->parsed()) {
            auto rep = sequentiality_bench(parse_t_list(bench_t), bench_c, bench_k, repeats);
            std::cout << bench_report_to_table(rep);
            if (!bench_out.empty()) write_file(bench_out, bench_report_to_json(rep));
            return kOk;
        }

        if (attackc->parsed()) {
            if (strategy == "parallel") {
                auto rep = parallel_attack_sim(parse_t(attack_t), aq, trials, guess_bits,
                                               guesses, 42);
                std::cout << "q " << rep.q << " trials " << rep.trials << " successes "
                          << rep.successes << " rate " << rep.success_rate << " bound "
                          << rep.analytic_bound << " speedup " << rep.speedup << "\n";
                return kOk;
            }
            ForgeStrategy fs;
            if (strategy == "bit-flip") fs = ForgeStrategy::BitFlip;
            else if (strategy == "wrong-y") fs = ForgeStrategy::WrongY;
            else if (strategy == "replayed-challenges") fs = ForgeStrategy::ReplayedChallenges;
            else if (strategy == "regrafted-tree") fs = ForgeStrategy::RegraftedTree;
            else throw CliError("unknown strategy " + strategy);

            KeyPair kp = trusted_setup(128, as_span(std::string_view("attack-setup")));
            uint64_t T = parse_t(attack_t);
            uint64_t c = std::max<uint64_t>(1, T / 100);
            HashState x{};
            auto res = eval(kp, x, as_span(std::string_view("attack-w")), T, c,
                            std::min<uint64_t>(20, (T + c - 1) / c), as_span(std::string_view("attack-rng")));
            int accepts = 0, rejects = 0;
            for (int i = 0; i < trials; ++i) {
                auto out = forge_attempt(kp, x, res.proof, res.trace, fs, delta, uint64_t(i) + 1);
                out.verdict.accepted ? ++accepts : ++rejects;
            }
            std::cout << "strategy " << strategy << " trials " << trials << " accepts "
                      << accepts << " rejects " << rejects << "\n";
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
