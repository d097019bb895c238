#pragma once

#include "qrw/gate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qrw {

/// One gate application: the (symbol, qubits, angles) triple.
///
/// The constructor validates arity, qubit distinctness, and angle count,
/// and canonicalizes every angle into (-pi, pi] modulo 2*pi.
struct Instruction {
    GateId gate;
    std::vector<std::uint32_t> qubits;
    std::vector<double> angles;

    Instruction(GateId g, std::vector<std::uint32_t> q, std::vector<double> a = {});

    const GateKind& kind() const { return gate_kind(gate); }
    char alias() const { return kind().alias; }

    /// Qubits this instruction uses in a control role (Z-diagonal slots).
    std::vector<std::uint32_t> control_qubits() const;
    /// Qubits this instruction uses in a target role (X-diagonal slots).
    std::vector<std::uint32_t> target_qubits() const;

    bool same_as(const Instruction& o, double angle_tol = 1e-9) const;
};

/// Per-circuit statistics: gate counts, depth, and the gate density vector
/// d1 = M1/(n*l), d2 = 2*M2/(n*l), where M2 counts every gate touching two
/// or more qubits and l is the depth.
struct CircuitMetrics {
    std::uint32_t n = 0;
    std::size_t total = 0;
    std::size_t m1 = 0;    // 1-qubit gates
    std::size_t m2 = 0;    // gates with arity >= 2
    std::size_t m3 = 0;    // 3-qubit gates, informational subset of m2
    std::size_t depth = 0;
    std::size_t l = 0;     // longest dependency chain; equals depth
    double d1 = 0.0;
    double d2 = 0.0;
};

/// An ordered instruction sequence over a fixed qubit register.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(std::uint32_t num_qubits) : num_qubits_(num_qubits) {}
    Circuit(std::uint32_t num_qubits, std::vector<Instruction> instructions);

    std::uint32_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return instructions_.size(); }
    bool empty() const { return instructions_.empty(); }

    const Instruction& operator[](std::size_t i) const { return instructions_[i]; }
    const std::vector<Instruction>& instructions() const { return instructions_; }

    void append(Instruction instr);

    /// Projection to the alias string Gamma; one character per instruction.
    std::string gate_sequence() const;

    /// Number of layers executable in parallel (ASAP layering); identity
    /// gates do not occupy a layer.
    std::size_t depth() const;

    CircuitMetrics metrics() const;

    /// Copy of this circuit with every identity instruction removed.
    Circuit remove_identities() const;

    bool equals(const Circuit& o, double angle_tol = 1e-9) const;

private:
    std::uint32_t num_qubits_ = 0;
    std::vector<Instruction> instructions_;

    void validate(const Instruction& instr) const;
};

} // namespace qrw
