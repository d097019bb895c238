#include "qrw/circuit.hpp"

#include "qrw/angle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrw {

Instruction::Instruction(GateId g, std::vector<std::uint32_t> q, std::vector<double> a)
    : gate(g), qubits(std::move(q)), angles(std::move(a)) {
    const GateKind& k = kind();
    if (qubits.size() != k.arity) {
        throw std::invalid_argument(std::string("gate '") + std::string(k.name) + "' expects " +
                                    std::to_string(k.arity) + " qubits, got " +
                                    std::to_string(qubits.size()));
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("duplicate qubit in instruction");
            }
        }
    }
    if (angles.size() != k.angle_arity) {
        throw std::invalid_argument(std::string("gate '") + std::string(k.name) + "' expects " +
                                    std::to_string(k.angle_arity) + " angles, got " +
                                    std::to_string(angles.size()));
    }
    for (double& theta : angles) {
        if (!std::isfinite(theta)) {
            throw std::invalid_argument("non-finite rotation angle");
        }
        theta = canonical_angle(theta);
    }
}

std::vector<std::uint32_t> Instruction::control_qubits() const {
    std::vector<std::uint32_t> out;
    const GateKind& k = kind();
    for (std::size_t slot = 0; slot < qubits.size(); ++slot) {
        if (k.slot_is_control(slot)) {
            out.push_back(qubits[slot]);
        }
    }
    return out;
}

std::vector<std::uint32_t> Instruction::target_qubits() const {
    std::vector<std::uint32_t> out;
    const GateKind& k = kind();
    for (std::size_t slot = 0; slot < qubits.size(); ++slot) {
        if (k.slot_is_target(slot)) {
            out.push_back(qubits[slot]);
        }
    }
    return out;
}

bool Instruction::same_as(const Instruction& o, double angle_tol) const {
    if (gate != o.gate || qubits != o.qubits) {
        return false;
    }
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!angles_close(angles[i], o.angles[i], angle_tol)) {
            return false;
        }
    }
    return true;
}

Circuit::Circuit(std::uint32_t num_qubits, std::vector<Instruction> instructions)
    : num_qubits_(num_qubits), instructions_(std::move(instructions)) {
    for (const auto& instr : instructions_) {
        validate(instr);
    }
}

void Circuit::validate(const Instruction& instr) const {
    for (std::uint32_t q : instr.qubits) {
        if (q >= num_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) +
                                        " out of range for " + std::to_string(num_qubits_) +
                                        "-qubit circuit");
        }
    }
}

void Circuit::append(Instruction instr) {
    validate(instr);
    instructions_.push_back(std::move(instr));
}

std::string Circuit::gate_sequence() const {
    std::string gamma;
    gamma.reserve(instructions_.size());
    for (const auto& instr : instructions_) {
        gamma.push_back(instr.alias());
    }
    return gamma;
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> qubit_layer(num_qubits_, 0);
    std::size_t max_layer = 0;
    for (const auto& instr : instructions_) {
        if (instr.kind().is_identity()) {
            continue;
        }
        std::size_t layer = 0;
        for (std::uint32_t q : instr.qubits) {
            layer = std::max(layer, qubit_layer[q]);
        }
        ++layer;
        for (std::uint32_t q : instr.qubits) {
            qubit_layer[q] = layer;
        }
        max_layer = std::max(max_layer, layer);
    }
    return max_layer;
}

CircuitMetrics Circuit::metrics() const {
    CircuitMetrics m;
    m.n = num_qubits_;
    for (const auto& instr : instructions_) {
        if (instr.kind().is_identity()) {
            continue;
        }
        ++m.total;
        if (instr.kind().arity == 1) {
            ++m.m1;
        } else {
            ++m.m2;
            if (instr.kind().arity == 3) {
                ++m.m3;
            }
        }
    }
    m.depth = depth();
    m.l = m.depth;
    if (m.total > 0 && m.n > 0 && m.l > 0) {
        double nl = static_cast<double>(m.n) * static_cast<double>(m.l);
        m.d1 = static_cast<double>(m.m1) / nl;
        m.d2 = 2.0 * static_cast<double>(m.m2) / nl;
    }
    return m;
}

Circuit Circuit::remove_identities() const {
    Circuit out(num_qubits_);
    for (const auto& instr : instructions_) {
        if (!instr.kind().is_identity()) {
            out.instructions_.push_back(instr);
        }
    }
    return out;
}

bool Circuit::equals(const Circuit& o, double angle_tol) const {
    if (num_qubits_ != o.num_qubits_ || instructions_.size() != o.instructions_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < instructions_.size(); ++i) {
        if (!instructions_[i].same_as(o.instructions_[i], angle_tol)) {
            return false;
        }
    }
    return true;
}

} // namespace qrw
