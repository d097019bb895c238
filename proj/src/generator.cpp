#include "qrw/generator.hpp"

#include "qrw/angle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qrw {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    while (true) {
        std::uint64_t v = rng();
        if (v < limit) {
            return static_cast<std::size_t>(v % n);
        }
    }
}

Instruction make_gate(GateId id, std::vector<std::uint32_t> qubits, std::mt19937_64& rng) {
    const GateKind& k = gate_kind(id);
    std::vector<double> angles;
    for (std::size_t i = 0; i < k.angle_arity; ++i) {
        // Uniform angle in (-pi, pi].
        double u = static_cast<double>(rng()) / static_cast<double>(UINT64_MAX);
        angles.push_back(canonical_angle((2.0 * u - 1.0) * kPi));
    }
    return Instruction(id, std::move(qubits), std::move(angles));
}

} // namespace

Circuit gen_circuit(const GenOptions& opt) {
    if (opt.d1 < 0.0 || opt.d2 < 0.0) {
        throw std::invalid_argument("densities must be nonnegative");
    }
    std::size_t per_layer_1q = static_cast<std::size_t>(std::llround(opt.d1 * opt.num_qubits));
    std::size_t per_layer_2q =
        static_cast<std::size_t>(std::llround(opt.d2 * opt.num_qubits / 2.0));
    if (per_layer_1q + 2 * per_layer_2q > opt.num_qubits) {
        throw std::invalid_argument("infeasible densities: d1 + d2 over-fills the register");
    }
    if (per_layer_2q > 0 && opt.num_qubits < 2) {
        throw std::invalid_argument("2-qubit density requires at least 2 qubits");
    }

    std::mt19937_64 rng(opt.seed);
    Circuit c(opt.num_qubits);
    if (per_layer_1q + per_layer_2q == 0 || opt.layers == 0) {
        return c;
    }

    std::vector<std::uint32_t> slots(opt.num_qubits);
    for (std::uint32_t q = 0; q < opt.num_qubits; ++q) {
        slots[q] = q;
    }

    std::uint32_t previous_layer_qubit = 0;
    for (std::size_t layer = 0; layer < opt.layers; ++layer) {
        for (std::size_t i = slots.size(); i > 1; --i) {
            std::swap(slots[i - 1], slots[draw(rng, i)]);
        }
        // Chain this layer to the previous one so depth equals the layer
        // count: the first gate of the layer reuses a qubit from the last.
        if (layer > 0) {
            auto it = std::find(slots.begin(), slots.end(), previous_layer_qubit);
            std::iter_swap(slots.begin(), it);
        }
        std::size_t cursor = 0;
        for (std::size_t k = 0; k < per_layer_2q; ++k) {
            std::uint32_t a = slots[cursor++];
            std::uint32_t b = slots[cursor++];
            GateId id = opt.two_qubit_alphabet[draw(rng, opt.two_qubit_alphabet.size())];
            c.append(make_gate(id, {a, b}, rng));
        }
        for (std::size_t k = 0; k < per_layer_1q; ++k) {
            std::uint32_t a = slots[cursor++];
            GateId id = opt.one_qubit_alphabet[draw(rng, opt.one_qubit_alphabet.size())];
            c.append(make_gate(id, {a}, rng));
        }
        previous_layer_qubit = slots[0];
    }
    return c;
}

} // namespace qrw
