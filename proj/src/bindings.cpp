#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "topoqec/circuit.hpp"
#include "topoqec/css.hpp"
#include "topoqec/defects.hpp"
#include "topoqec/fixtures.hpp"
#include "topoqec/threshold.hpp"

namespace py = pybind11;
using namespace topoqec;

namespace {

std::vector<std::size_t> chain_edges(const Chain& c) { return c.bits.set_bits(); }

NoiseModel model_from_name(const std::string& noise, double p) {
    if (noise == "iid-z") return NoiseModel::iid_z(p);
    if (noise == "depolarizing") return NoiseModel::depolarizing(p);
    if (noise == "phenomenological") return NoiseModel::phenomenological(p, p);
    throw std::invalid_argument("unknown noise model: " + noise);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Surface-code toolkit: stabilizer simulation, matching decoders, "
              "distillation analytics";

    py::class_<PauliProduct>(m, "PauliProduct")
        .def(py::init(&PauliProduct::parse), py::arg("text"))
        .def_static("identity", &PauliProduct::identity)
        .def_property_readonly("num_qubits", &PauliProduct::num_qubits)
        .def_property_readonly("weight", &PauliProduct::weight)
        .def("commutes_with", &PauliProduct::commutes_with)
        .def("hermitian", &PauliProduct::hermitian)
        .def("__mul__", [](const PauliProduct& a, const PauliProduct& b) { return a * b; })
        .def("__eq__", [](const PauliProduct& a, const PauliProduct& b) { return a == b; })
        .def("__str__", &PauliProduct::str)
        .def("__repr__", [](const PauliProduct& p) { return "PauliProduct('" + p.str() + "')"; });

    py::class_<MeasureOutcome>(m, "MeasureOutcome")
        .def_readonly("outcome", &MeasureOutcome::outcome)
        .def_readonly("deterministic", &MeasureOutcome::deterministic)
        .def_property_readonly("probability", &MeasureOutcome::probability);

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>(),
             py::arg("seed"), py::arg("k0") = 0, py::arg("k1") = 0, py::arg("k2") = 0);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>())
        .def("add_edge", &Graph::add_edge)
        .def_static("chain", &Graph::chain);

    py::class_<StabilizerTableau>(m, "StabilizerTableau")
        .def_static("zero_state", &StabilizerTableau::zero_state)
        .def_static("plus_state", &StabilizerTableau::plus_state)
        .def_static("from_generators", &StabilizerTableau::from_generators)
        .def_static("graph_state", &StabilizerTableau::graph_state)
        .def_property_readonly("num_qubits", &StabilizerTableau::num_qubits)
        .def_property_readonly("num_generators", &StabilizerTableau::num_generators)
        .def("apply_h", &StabilizerTableau::apply_h)
        .def("apply_s", &StabilizerTableau::apply_s)
        .def("apply_sdg", &StabilizerTableau::apply_sdg)
        .def("apply_x", &StabilizerTableau::apply_x)
        .def("apply_y", &StabilizerTableau::apply_y)
        .def("apply_z", &StabilizerTableau::apply_z)
        .def("apply_cnot", &StabilizerTableau::apply_cnot)
        .def("apply_cz", &StabilizerTableau::apply_cz)
        .def("measure",
             [](StabilizerTableau& t, const PauliProduct& p, RngStream& rng) {
                 return t.measure(p, rng);
             })
        .def("measure_forced",
             [](StabilizerTableau& t, const PauliProduct& p, int forced) {
                 return t.measure_forced(p, forced);
             })
        .def("contains", &StabilizerTableau::contains)
        .def("same_group", &StabilizerTableau::same_group)
        .def("canonical", [](const StabilizerTableau& t) {
            std::vector<std::string> out;
            for (const auto& g : t.canonical()) out.push_back(g.str());
            return out;
        });

    m.def("parse_circuit", &CliffordCircuit::parse, py::arg("text"),
          "Parse the line-based circuit format (H 3 / CNOT 0 1 / CZ 2 4 / M 0 1 2).");
    py::class_<CliffordCircuit>(m, "CliffordCircuit")
        .def_property_readonly("num_qubits", [](const CliffordCircuit& c) { return c.n; })
        .def("__str__", &CliffordCircuit::str);
    m.def(
        "outcome_probability",
        [](const CliffordCircuit& c, const std::vector<int>& bits) {
            return outcome_probability(c, bits).value();
        },
        py::arg("circuit"), py::arg("outcome"),
        "Exact strong-simulation probability of a masked outcome.");
    m.def(
        "sample_circuit",
        [](const CliffordCircuit& c, std::size_t shots, std::uint64_t seed) {
            RngStream rng(seed);
            const std::vector<PauliBasisMixture> inputs(c.n, PauliBasisMixture::zero());
            std::vector<std::vector<int>> out;
            for (std::size_t s = 0; s < shots; ++s) out.push_back(weak_sample(c, inputs, rng));
            return out;
        },
        py::arg("circuit"), py::arg("shots"), py::arg("seed"),
        "Weak simulation from |0...0> inputs.");

    py::class_<CodeFixture>(m, "CodeFixture")
        .def_readonly("name", &CodeFixture::name)
        .def_readonly("n", &CodeFixture::n)
        .def_property_readonly("generators",
                               [](const CodeFixture& f) {
                                   std::vector<std::string> out;
                                   for (const auto& g : f.generators) out.push_back(g.str());
                                   return out;
                               })
        .def_property_readonly("logical_x", [](const CodeFixture& f) {
            std::vector<std::string> out;
            for (const auto& g : f.logical_x) out.push_back(g.str());
            return out;
        });
    m.def("code_fixture", &code_fixture);
    m.def("code_fixture_names", &code_fixture_names);

    py::class_<SurfaceCodeLayout>(m, "SurfaceCodeLayout")
        .def_property_readonly("num_qubits",
                               [](const SurfaceCodeLayout& c) { return c.num_qubits; })
        .def_property_readonly("num_generators",
                               [](const SurfaceCodeLayout& c) { return c.num_generators; })
        .def_property_readonly("num_logical_pairs",
                               [](const SurfaceCodeLayout& c) { return c.num_logical_pairs; })
        .def("distance_exact", &distance_exact);
    m.def(
        "build_code",
        [](const std::string& kind, std::size_t n) {
            return build_code(code_kind_from_name(kind), n);
        },
        py::arg("kind"), py::arg("size"));

    m.def(
        "decode_trial",
        [](const SurfaceCodeLayout& code, const std::string& noise, double p,
           std::uint64_t seed, std::size_t trial) {
            RngStream rng(seed, code.n, 0, trial);
            return !threshold_trial_fails(code, model_from_name(noise, p), "mwpm",
                                          code.n, rng);
        },
        py::arg("code"), py::arg("noise"), py::arg("p"), py::arg("seed"), py::arg("trial"),
        "Sample one error, decode it, and report success.");

    m.def(
        "decode_syndrome",
        [](const SurfaceCodeLayout& code, const std::vector<std::size_t>& defects,
           const std::string& basis) {
            Syndrome s;
            s.vertex_flags = BitVec(code.surface.num_vertices);
            s.face_flags = BitVec(code.surface.num_faces);
            for (auto d : defects) {
                if (basis == "Z" || code.kind == CodeKind::Bitflip)
                    s.vertex_flags.set(d);
                else
                    s.face_flags.set(d);
            }
            const DecodeResult res = decode_2d(code, s, basis.at(0));
            py::dict out;
            out["recovery_edges"] = chain_edges(res.recovery);
            std::vector<std::pair<std::size_t, std::size_t>> pairs = res.matching;
            out["matching"] = pairs;
            return out;
        },
        py::arg("code"), py::arg("defects"), py::arg("basis") = "Z");

    py::class_<ResultRow>(m, "ResultRow")
        .def_readonly("code", &ResultRow::code)
        .def_readonly("size", &ResultRow::size)
        .def_readonly("p", &ResultRow::p)
        .def_readonly("trials", &ResultRow::trials)
        .def_readonly("failures", &ResultRow::failures)
        .def_readonly("logical_error_rate", &ResultRow::logical_error_rate)
        .def_readonly("standard_error", &ResultRow::standard_error);
    py::class_<ResultTable>(m, "ResultTable")
        .def_readonly("rows", &ResultTable::rows)
        .def("csv", &ResultTable::csv);
    m.def(
        "run_threshold_experiment",
        [](const std::string& code, std::vector<std::size_t> sizes, double p_min, double p_max,
           std::size_t steps, std::size_t trials, const std::string& noise,
           const std::string& decoder, std::size_t rounds, std::uint64_t seed,
           unsigned threads) {
            ExperimentConfig cfg;
            cfg.code = code;
            cfg.sizes = std::move(sizes);
            cfg.p_min = p_min;
            cfg.p_max = p_max;
            cfg.steps = steps;
            cfg.trials = trials;
            cfg.noise = noise;
            cfg.decoder = decoder;
            cfg.rounds = rounds;
            cfg.seed = seed;
            return run_threshold_experiment(cfg, threads);
        },
        py::arg("code") = "toric", py::arg("sizes") = std::vector<std::size_t>{8, 12, 16},
        py::arg("p_min") = 0.08, py::arg("p_max") = 0.13, py::arg("steps") = 11,
        py::arg("trials") = 10000, py::arg("noise") = "iid-z", py::arg("decoder") = "mwpm",
        py::arg("rounds") = 0, py::arg("seed") = 1, py::arg("threads") = 0);
    m.def("estimate_crossing", [](const ResultTable& t) -> py::object {
        const auto est = estimate_crossing(t);
        if (!est) return py::none();
        py::dict out;
        out["p_th"] = est->p_th;
        out["low"] = est->lo;
        out["high"] = est->hi;
        out["pairwise"] = est->pairwise;
        return out;
    });

    m.def("syndrome_bias_phenomenological", [](double p_data, double p_meas) {
        return syndrome_bias(NoiseModel::phenomenological(p_data, p_meas));
    });
    m.def("syndrome_bias_circuit", [](double p2) {
        return syndrome_bias(NoiseModel::circuit_level(p2));
    });
    m.def("coupling_from_p", &coupling_from_p);

    m.def("distill_curve", [](double p) {
        const DistillPoint pt = distill_curve(p);
        return std::make_pair(pt.p_pass, pt.p_out);
    });
    m.def("distill_threshold", []() {
        const DistillThreshold th = distill_threshold();
        return std::make_pair(th.fixed_point, th.octahedron_bound);
    });
    m.def("distill_cost", [](double p, double eps) {
        const DistillCost c = distill_cost(p, eps);
        py::dict out;
        out["rounds"] = c.rounds;
        out["states"] = c.states;
        out["closed_form_estimate"] = c.closed_form_estimate;
        return out;
    });

    m.def(
        "concat_analytics",
        [](double c, double n, double p, double m_size) {
            const ConcatAnalytics a = concat_analytics(c, n, p, m_size);
            py::dict out;
            out["threshold"] = a.threshold;
            out["level_error"] = a.level_error;
            out["levels_needed"] =
                a.levels_needed ? py::cast(*a.levels_needed) : py::object(py::none());
            out["total_resources"] = a.total_resources;
            return out;
        },
        py::arg("c"), py::arg("n"), py::arg("p"), py::arg("m"));

    m.def(
        "braid_cnot_verify",
        [](std::size_t n, unsigned braids, std::uint64_t seed) {
            const BraidReport r = braid_cnot_verify(n, braids, seed);
            py::dict out;
            out["cnot_verified"] = r.cnot_verified;
            out["definite_values_ok"] = r.definite_values_ok;
            out["byproduct"] = std::vector<int>(r.byproduct, r.byproduct + 4);
            out["detail"] = r.detail;
            return out;
        },
        py::arg("n") = 9, py::arg("braids") = 1, py::arg("seed") = 7);
}
