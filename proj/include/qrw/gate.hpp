#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qrw {

/// Gate kinds known to the engine. The first 16 are the aliased table plus
/// SWAP for rule authoring; U1/U2/U3 exist so IBM-style inputs can be
/// represented until a translating rule set eliminates them.
enum class GateId : std::uint8_t {
    I,
    H,
    X,
    Y,
    Z,
    T,
    Tdg,
    S,
    Sdg,
    Rx,
    Ry,
    Rz,
    Cx,
    Cz,
    Ccz,
    Ccx,
    Swap,
    U1,
    U2,
    U3,
};

inline constexpr std::size_t kNumGateKinds = 20;

/// Qubit-position role mask for commutation tests: a slot may act as a
/// control (Z-diagonal there), a target (X-diagonal there), or both
/// (basis-changing gates).
struct GateKind {
    GateId id;
    std::string_view name;   // QASM-style name ("h", "cx", "sdg", ...)
    char alias;              // single-character symbol used in gate sequences
    std::uint8_t arity;      // number of operation qubits (1..3)
    std::uint8_t angle_arity;
    std::uint8_t control_slots; // bitmask over qubit positions
    std::uint8_t target_slots;  // bitmask over qubit positions

    bool is_identity() const { return id == GateId::I; }
    bool slot_is_control(std::size_t slot) const { return (control_slots >> slot) & 1u; }
    bool slot_is_target(std::size_t slot) const { return (target_slots >> slot) & 1u; }
};

/// Immutable registry of every gate kind, indexed by GateId.
const std::array<GateKind, kNumGateKinds>& gate_registry();

const GateKind& gate_kind(GateId id);

/// Lookup by alias character ('x', 'c', 'E', ...). Nullopt when unknown.
std::optional<GateId> gate_from_alias(char alias);

/// Lookup by QASM-style name ("cx", "tdg", "id", ...). Nullopt when unknown.
std::optional<GateId> gate_from_name(std::string_view name);

} // namespace qrw
