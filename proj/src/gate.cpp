#include "qrw/gate.hpp"

namespace qrw {

namespace {

constexpr std::uint8_t b0 = 0b001;
constexpr std::uint8_t b01 = 0b011;
constexpr std::uint8_t b1 = 0b010;
constexpr std::uint8_t b2 = 0b100;
constexpr std::uint8_t b012 = 0b111;

// Role assignment: Z-diagonal gates control their slot, X-diagonal gates
// target it, basis-changing gates (H, Y, Ry, SWAP, U2, U3) do both, so the
// qubit-state-independence test stays sound for every pair of kinds.
constexpr std::array<GateKind, kNumGateKinds> kRegistry = {{
    {GateId::I, "id", 'I', 1, 0, 0, 0},
    {GateId::H, "h", 'h', 1, 0, b0, b0},
    {GateId::X, "x", 'x', 1, 0, 0, b0},
    {GateId::Y, "y", 'y', 1, 0, b0, b0},
    {GateId::Z, "z", 'z', 1, 0, b0, 0},
    {GateId::T, "t", 't', 1, 0, b0, 0},
    {GateId::Tdg, "tdg", 'T', 1, 0, b0, 0},
    {GateId::S, "s", 's', 1, 0, b0, 0},
    {GateId::Sdg, "sdg", 'S', 1, 0, b0, 0},
    {GateId::Rx, "rx", 'X', 1, 1, 0, b0},
    {GateId::Ry, "ry", 'Y', 1, 1, b0, b0},
    {GateId::Rz, "rz", 'Z', 1, 1, b0, 0},
    {GateId::Cx, "cx", 'c', 2, 0, b0, b1},
    {GateId::Cz, "cz", 'C', 2, 0, b01, 0},
    {GateId::Ccz, "ccz", 'E', 3, 0, b012, 0},
    {GateId::Ccx, "ccx", 'F', 3, 0, b01, b2},
    {GateId::Swap, "swap", 'w', 2, 0, b01, b01},
    {GateId::U1, "u1", '1', 1, 1, b0, 0},
    {GateId::U2, "u2", '2', 1, 2, b0, b0},
    {GateId::U3, "u3", '3', 1, 3, b0, b0},
}};

} // namespace

const std::array<GateKind, kNumGateKinds>& gate_registry() {
    return kRegistry;
}

const GateKind& gate_kind(GateId id) {
    return kRegistry[static_cast<std::size_t>(id)];
}

std::optional<GateId> gate_from_alias(char alias) {
    for (const auto& k : kRegistry) {
        if (k.alias == alias) {
            return k.id;
        }
    }
    return std::nullopt;
}

std::optional<GateId> gate_from_name(std::string_view name) {
    for (const auto& k : kRegistry) {
        if (k.name == name) {
            return k.id;
        }
    }
    return std::nullopt;
}

} // namespace qrw
