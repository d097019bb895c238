#pragma once

#include "qrw/circuit.hpp"

#include <cstdint>
#include <vector>

namespace qrw {

/// Options for the density-parameterized random circuit generator.
struct GenOptions {
    std::uint32_t num_qubits = 4;
    std::size_t layers = 10;
    double d1 = 0.3; // requested 1-qubit gate density M1/(n*l)
    double d2 = 0.2; // requested 2-qubit gate density 2*M2/(n*l)
    std::uint64_t seed = 0;
    std::vector<GateId> one_qubit_alphabet = {GateId::H, GateId::X, GateId::Y,
                                              GateId::Z, GateId::S, GateId::T};
    std::vector<GateId> two_qubit_alphabet = {GateId::Cx};
};

/// Builds `layers` layers of gates whose realized density vector tracks the
/// requested (d1, d2): each layer holds round(d1*n) 1-qubit gates and
/// round(d2*n/2) 2-qubit gates on shuffled qubit slots, and each layer after
/// the first is pinned to the previous one so the dependency chain length
/// equals the layer count. Same seed, same circuit.
Circuit gen_circuit(const GenOptions& options);

} // namespace qrw
