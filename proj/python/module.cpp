#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vivc/adversary.hpp"
#include "vivc/errors.hpp"
#include "vivc/serialize.hpp"
#include "vivc/verifier.hpp"

namespace py = pybind11;
using namespace vivc;

namespace {

Bytes to_bytes(const py::bytes& b) {
    std::string s = b;
    return Bytes(s.begin(), s.end());
}

HashState to_state(const py::bytes& b) {
    std::string s = b;
    if (s.size() != 32) throw py::value_error("expected exactly 32 bytes");
    HashState out;
    std::copy(s.begin(), s.end(), out.begin());
    return out;
}

py::bytes from32(const Bytes32& b) {
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

}  // namespace

PYBIND11_MODULE(_vivc, m) {
    m.doc() = "iterated-hash verifiable delay function with Merkle-committed checkpoints";

    m.def("step", [](const py::bytes& s) { return from32(step(to_state(s))); });
    m.def("iterate", [](const py::bytes& s, uint64_t n) {
        return from32(iterate(to_state(s), n));
    });
    m.def("entropy_d", [](const py::bytes& y) { return entropy_D(to_state(y)); });

    m.def("commit", [](const py::bytes& message, const py::bytes& randomness) {
        return from32(commit(to_bytes(message), to_state(randomness)).digest);
    });
    m.def("decommit", [](const py::bytes& digest, const py::bytes& message,
                         const py::bytes& randomness) {
        return decommit({to_state(digest)}, {to_bytes(message), to_state(randomness)});
    });

    m.def("rand_gen_str", [](const py::bytes& seed) {
        return rand128_to_string(rand_gen(to_bytes(seed)));
    });
    m.def("derive_delay", [](const std::string& r_dec, uint64_t t_min, uint64_t t_max) {
        Rand128 r = 0;
        for (char c : r_dec) {
            if (c < '0' || c > '9') throw py::value_error("decimal string expected");
            r = r * 10 + (c - '0');
        }
        return derive_delay(r, t_min, t_max);
    });

    m.def("trusted_setup_json", [](uint32_t lambda, const py::bytes& seed) {
        return keypair_to_json(trusted_setup(lambda, to_bytes(seed)));
    });

    m.def("eval_json", [](const std::string& keypair_json, const py::bytes& x,
                          const py::bytes& w, uint64_t T, uint64_t c, uint64_t k,
                          const py::bytes& rng_seed) {
        KeyPair kp = keypair_from_json(keypair_json);
        auto res = eval(kp, to_state(x), to_bytes(w), T, c, k, to_bytes(rng_seed));
        return py::make_tuple(proof_to_json(res.proof), trace_to_json(res.trace));
    });

    m.def("verify_json", [](const std::string& keypair_json, const std::string& proof_json) {
        KeyPair kp = keypair_from_json(keypair_json);
        EvalProof proof = proof_from_json(proof_json);
        Verdict v = verify(kp, proof.x, proof);
        return py::make_tuple(v.accepted,
                              v.accepted ? py::object(py::float_(*v.D))
                                         : py::object(py::str(reject_reason_name(*v.reason))));
    });

    m.def("merkle_root", [](const std::vector<py::bytes>& leaves) {
        std::vector<Bytes32> l;
        for (const auto& leaf : leaves) l.push_back(to_state(leaf));
        return from32(merkle_root(l));
    });

    m.def("cycle_experiment", [](int bits, int trials, uint64_t rng_seed) {
        auto st = cycle_experiment(bits, trials, rng_seed);
        py::dict d;
        d["bits"] = st.bits;
        d["trials"] = st.trials;
        d["mean_rho"] = st.mean_rho;
        d["stderr_rho"] = st.stderr_rho;
        d["mean_tail"] = st.mean_tail;
        d["mean_cycle"] = st.mean_cycle;
        return d;
    }, py::arg("bits"), py::arg("trials"), py::arg("rng_seed") = 1);

    py::register_exception<Error>(m, "VivcError");
}
