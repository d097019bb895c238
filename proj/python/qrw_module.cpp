#include "qrw/generator.hpp"
#include "qrw/oracle.hpp"
#include "qrw/qasm.hpp"
#include "qrw/rewriter.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qrw;

namespace {

RuleSet rules_from_arg(const std::string& spec) {
    if (auto builtin = builtin_by_name(spec)) {
        return *builtin;
    }
    RuleSet rs;
    rs.name = spec;
    rs.rules = parse_rules(spec);
    return rs;
}

py::dict metrics_dict(const CircuitMetrics& m) {
    py::dict d;
    d["n"] = m.n;
    d["gates"] = m.total;
    d["m1"] = m.m1;
    d["m2"] = m.m2;
    d["m3"] = m.m3;
    d["depth"] = m.depth;
    d["l"] = m.l;
    d["d1"] = m.d1;
    d["d2"] = m.d2;
    return d;
}

} // namespace

PYBIND11_MODULE(_qrewriting, m) {
    m.doc() = "Pattern-matching quantum circuit rewriting engine";

    py::class_<Instruction>(m, "Instruction")
        .def(py::init([](const std::string& gate, std::vector<std::uint32_t> qubits,
                         std::vector<double> angles) {
                 auto id = gate_from_name(gate);
                 if (!id) {
                     throw py::value_error("unknown gate '" + gate + "'");
                 }
                 return Instruction(*id, std::move(qubits), std::move(angles));
             }),
             py::arg("gate"), py::arg("qubits"), py::arg("angles") = std::vector<double>{})
        .def_property_readonly("gate",
                               [](const Instruction& i) { return std::string(i.kind().name); })
        .def_readonly("qubits", &Instruction::qubits)
        .def_readonly("angles", &Instruction::angles)
        .def("__repr__", [](const Instruction& i) {
            std::string s = std::string(i.kind().name) + "(";
            for (std::size_t k = 0; k < i.qubits.size(); ++k) {
                s += (k ? "," : "") + std::to_string(i.qubits[k]);
            }
            return s + ")";
        });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::uint32_t>(), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def("__len__", &Circuit::size)
        .def("__getitem__",
             [](const Circuit& c, std::size_t i) {
                 if (i >= c.size()) {
                     throw py::index_error();
                 }
                 return c[i];
             })
        .def("append", &Circuit::append)
        .def("gate_sequence", &Circuit::gate_sequence)
        .def("depth", &Circuit::depth)
        .def("metrics", [](const Circuit& c) { return metrics_dict(c.metrics()); })
        .def("remove_identities", &Circuit::remove_identities)
        .def("__repr__", [](const Circuit& c) {
            return "Circuit(n=" + std::to_string(c.num_qubits()) +
                   ", gates=" + std::to_string(c.size()) + ")";
        });

    py::class_<RuleSet>(m, "RuleSet")
        .def_readonly("name", &RuleSet::name)
        .def("__len__", &RuleSet::size)
        .def("rule_names", [](const RuleSet& rs) {
            std::vector<std::string> names;
            for (const auto& r : rs.rules) {
                names.push_back(r.name);
            }
            return names;
        });

    py::class_<Policy>(m, "Policy")
        .def_static("precise", &Policy::precise, py::arg("queue_cap") = 10000)
        .def_static("greedy", &Policy::greedy)
        .def_static("stochastic", &Policy::stochastic, py::arg("seed"));

    m.def("parse_qasm",
          [](const std::string& text, bool allow_u23) {
              QasmOptions opts;
              opts.allow_u23 = allow_u23;
              return parse_qasm(text, opts);
          },
          py::arg("text"), py::arg("allow_u23") = false);
    m.def("serialize_qasm", &serialize_qasm);

    m.def("builtin_rules", [](const std::string& name) {
        auto rs = builtin_by_name(name);
        if (!rs) {
            throw py::value_error("unknown built-in rule set '" + name + "'");
        }
        return *rs;
    });
    m.def("load_rules", [](const std::string& text) {
        RuleSet rs;
        rs.name = "external";
        rs.rules = parse_rules(text);
        return rs;
    });
    m.def("validate_rules", [](const RuleSet& rs) {
        py::dict out;
        for (const auto& r : validate(rs).results) {
            out[py::str(r.rule_name)] = r.passed;
        }
        return out;
    });

    m.def("match",
          [](const Circuit& c, const RuleSet& rules, std::size_t delta) {
              auto cands = pattern_matching(c, rules, delta);
              find_conflicts(cands);
              py::list out;
              for (const auto& cand : cands) {
                  py::dict d;
                  d["rule"] = cand.rule.name;
                  d["indices"] = cand.indices;
                  d["conflict"] = cand.conflict;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("circuit"), py::arg("rules"), py::arg("delta") = kDeltaAuto);

    m.def("rewrite_once",
          [](const Circuit& c, const RuleSet& rules, const Policy& policy, std::size_t delta) {
              return rewrite_once(c, rules, policy, delta);
          },
          py::arg("circuit"), py::arg("rules"), py::arg("policy"),
          py::arg("delta") = kDeltaAuto);

    m.def("optimize",
          [](const Circuit& c, const RuleSet& external, const Policy& policy, bool internal,
             std::size_t max_rounds, std::size_t delta) {
              RuleSet internal_rs;
              internal_rs.name = "none";
              if (internal) {
                  internal_rs = builtin_internal();
              }
              OptimizeResult r = optimize(c, internal_rs, external, policy, max_rounds, delta);
              py::list rounds;
              for (const auto& round : r.rounds) {
                  py::dict d;
                  d["round"] = round.round;
                  d["phase"] = round.phase;
                  d["gates"] = round.gates;
                  d["depth"] = round.depth;
                  d["picks"] = round.picks;
                  rounds.append(std::move(d));
              }
              return py::make_tuple(r.circuit, rounds);
          },
          py::arg("circuit"), py::arg("rules"), py::arg("policy") = Policy::greedy(),
          py::arg("internal") = true, py::arg("max_rounds") = 5, py::arg("delta") = kDeltaAuto);

    m.def("verify",
          [](const Circuit& a, const Circuit& b, double tol) {
              return circuits_equivalent(a, b, tol);
          },
          py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

    m.def("circuit_unitary", [](const Circuit& c) {
        Unitary u = circuit_unitary(c);
        std::size_t d = u.dim();
        std::vector<std::vector<std::complex<double>>> rows(d);
        for (std::size_t r = 0; r < d; ++r) {
            rows[r].assign(u.entries.begin() + r * d, u.entries.begin() + (r + 1) * d);
        }
        return rows;
    });

    m.def("gen_circuit",
          [](std::uint32_t qubits, std::size_t layers, double d1, double d2, std::uint64_t seed) {
              GenOptions opts;
              opts.num_qubits = qubits;
              opts.layers = layers;
              opts.d1 = d1;
              opts.d2 = d2;
              opts.seed = seed;
              return gen_circuit(opts);
          },
          py::arg("qubits"), py::arg("layers"), py::arg("d1"), py::arg("d2"),
          py::arg("seed") = 0);

    m.attr("DELTA_UNLIMITED") = kDeltaUnlimited;
    m.attr("DELTA_AUTO") = kDeltaAuto;

    py::register_exception<ParseError>(m, "QasmParseError");
    py::register_exception<CapacityError>(m, "CapacityError");
}
