#pragma once

#include "qrw/circuit.hpp"

#include <complex>
#include <vector>

namespace qrw {

/// Thrown when a request exceeds the dense simulator's 10-qubit cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major unitary over up to 10 qubits. Qubit 0 is the most
/// significant bit of the basis index.
struct Unitary {
    std::uint32_t num_qubits = 0;
    std::vector<std::complex<double>> entries;

    std::size_t dim() const { return std::size_t{1} << num_qubits; }
    std::complex<double>& at(std::size_t row, std::size_t col) { return entries[row * dim() + col]; }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return entries[row * dim() + col];
    }

    static Unitary identity(std::uint32_t num_qubits);
    bool is_unitary(double tol = 1e-9) const;
};

/// 2^k x 2^k matrix of a single gate kind at the given angles.
std::vector<std::complex<double>> gate_matrix(GateId id, const std::vector<double>& angles);

/// Composes the circuit's instructions into one unitary. Throws
/// CapacityError beyond 10 qubits.
Unitary circuit_unitary(const Circuit& c);

/// True iff ||a - e^{i phi} b||_F <= tol * dim, with phi chosen to align
/// b's largest-magnitude entry with a's corresponding entry.
bool equiv_up_to_phase(const Unitary& a, const Unitary& b, double tol = 1e-9);

/// Convenience: global-phase equivalence of two circuits on equal registers.
bool circuits_equivalent(const Circuit& a, const Circuit& b, double tol = 1e-9);

/// Exhaustive reference for the matcher's subsequence DP: every strictly
/// increasing index list spelling `pattern` inside `target` with span
/// (last - first) < delta. Target length capped at 20.
std::vector<std::vector<std::size_t>> brute_subsequences(const std::string& target,
                                                         const std::string& pattern,
                                                         std::size_t delta);

} // namespace qrw
