#include "qrw/oracle.hpp"

#include "qrw/angle.hpp"

#include <cmath>
#include <stdexcept>

namespace qrw {

namespace {

using cplx = std::complex<double>;

constexpr std::uint32_t kMaxSimQubits = 10;

std::vector<cplx> mat1(cplx a, cplx b, cplx c, cplx d) {
    return {a, b, c, d};
}

} // namespace

std::vector<cplx> gate_matrix(GateId id, const std::vector<double>& angles) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx i1{0.0, 1.0};
    switch (id) {
        case GateId::I:
            return mat1(1, 0, 0, 1);
        case GateId::H:
            return mat1(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        case GateId::X:
            return mat1(0, 1, 1, 0);
        case GateId::Y:
            return mat1(0, -i1, i1, 0);
        case GateId::Z:
            return mat1(1, 0, 0, -1);
        case GateId::S:
            return mat1(1, 0, 0, i1);
        case GateId::Sdg:
            return mat1(1, 0, 0, -i1);
        case GateId::T:
            return mat1(1, 0, 0, std::exp(i1 * (kPi / 4.0)));
        case GateId::Tdg:
            return mat1(1, 0, 0, std::exp(-i1 * (kPi / 4.0)));
        case GateId::Rx: {
            double h = angles.at(0) / 2.0;
            return mat1(std::cos(h), -i1 * std::sin(h), -i1 * std::sin(h), std::cos(h));
        }
        case GateId::Ry: {
            double h = angles.at(0) / 2.0;
            return mat1(std::cos(h), -std::sin(h), std::sin(h), std::cos(h));
        }
        case GateId::Rz: {
            double h = angles.at(0) / 2.0;
            return mat1(std::exp(-i1 * h), 0, 0, std::exp(i1 * h));
        }
        case GateId::U1:
            return mat1(1, 0, 0, std::exp(i1 * angles.at(0)));
        case GateId::U2: {
            double phi = angles.at(0);
            double lam = angles.at(1);
            return mat1(inv_sqrt2, -inv_sqrt2 * std::exp(i1 * lam), inv_sqrt2 * std::exp(i1 * phi),
                        inv_sqrt2 * std::exp(i1 * (phi + lam)));
        }
        case GateId::U3: {
            double th = angles.at(0) / 2.0;
            double phi = angles.at(1);
            double lam = angles.at(2);
            return mat1(std::cos(th), -std::exp(i1 * lam) * std::sin(th),
                        std::exp(i1 * phi) * std::sin(th),
                        std::exp(i1 * (phi + lam)) * std::cos(th));
        }
        case GateId::Cx: {
            std::vector<cplx> m(16, cplx{0.0, 0.0});
            // basis |c t>: 00->00, 01->01, 10->11, 11->10
            m[0 * 4 + 0] = 1;
            m[1 * 4 + 1] = 1;
            m[3 * 4 + 2] = 1;
            m[2 * 4 + 3] = 1;
            return m;
        }
        case GateId::Cz: {
            std::vector<cplx> m(16, cplx{0.0, 0.0});
            for (std::size_t b = 0; b < 4; ++b) {
                m[b * 4 + b] = (b == 3) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
            }
            return m;
        }
        case GateId::Swap: {
            std::vector<cplx> m(16, cplx{0.0, 0.0});
            m[0 * 4 + 0] = 1;
            m[2 * 4 + 1] = 1;
            m[1 * 4 + 2] = 1;
            m[3 * 4 + 3] = 1;
            return m;
        }
        case GateId::Ccz: {
            std::vector<cplx> m(64, cplx{0.0, 0.0});
            for (std::size_t b = 0; b < 8; ++b) {
                m[b * 8 + b] = (b == 7) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
            }
            return m;
        }
        case GateId::Ccx: {
            std::vector<cplx> m(64, cplx{0.0, 0.0});
            for (std::size_t b = 0; b < 8; ++b) {
                std::size_t to = (b >= 6) ? (b ^ 1u) : b; // flip target when both controls set
                m[to * 8 + b] = 1;
            }
            return m;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

Unitary Unitary::identity(std::uint32_t num_qubits) {
    if (num_qubits > kMaxSimQubits) {
        throw CapacityError("unitary oracle capped at 10 qubits, requested " +
                            std::to_string(num_qubits));
    }
    Unitary u;
    u.num_qubits = num_qubits;
    std::size_t d = u.dim();
    u.entries.assign(d * d, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < d; ++k) {
        u.entries[k * d + k] = 1.0;
    }
    return u;
}

bool Unitary::is_unitary(double tol) const {
    std::size_t d = dim();
    double err = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) {
                acc += std::conj(entries[k * d + r]) * entries[k * d + c];
            }
            cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            err += std::norm(acc - want);
        }
    }
    return std::sqrt(err) <= tol * static_cast<double>(d);
}

namespace {

// Applies a k-qubit gate to every column of U in place. Qubit q occupies
// bit (n-1-q) of the basis index, so qubit 0 is the most significant bit.
void apply_gate(Unitary& u, const std::vector<cplx>& g, const std::vector<std::uint32_t>& qubits) {
    const std::size_t d = u.dim();
    const std::size_t k = qubits.size();
    const std::size_t sub = std::size_t{1} << k;

    std::vector<std::size_t> bit(k);
    for (std::size_t j = 0; j < k; ++j) {
        bit[j] = std::size_t{1} << (u.num_qubits - 1 - qubits[j]);
    }
    std::size_t mask = 0;
    for (std::size_t b : bit) {
        mask |= b;
    }

    std::vector<cplx> scratch(sub);
    for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t base = 0; base < d; ++base) {
            if (base & mask) {
                continue;
            }
            for (std::size_t s = 0; s < sub; ++s) {
                std::size_t row = base;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((s >> (k - 1 - j)) & 1u) {
                        row |= bit[j];
                    }
                }
                scratch[s] = u.entries[row * d + col];
            }
            for (std::size_t s = 0; s < sub; ++s) {
                cplx acc{0.0, 0.0};
                for (std::size_t t = 0; t < sub; ++t) {
                    acc += g[s * sub + t] * scratch[t];
                }
                std::size_t row = base;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((s >> (k - 1 - j)) & 1u) {
                        row |= bit[j];
                    }
                }
                u.entries[row * d + col] = acc;
            }
        }
    }
}

} // namespace

Unitary circuit_unitary(const Circuit& c) {
    if (c.num_qubits() > kMaxSimQubits) {
        throw CapacityError("unitary oracle capped at 10 qubits, circuit has " +
                            std::to_string(c.num_qubits()));
    }
    Unitary u = Unitary::identity(c.num_qubits());
    for (const auto& instr : c.instructions()) {
        if (instr.kind().is_identity()) {
            continue;
        }
        apply_gate(u, gate_matrix(instr.gate, instr.angles), instr.qubits);
    }
    return u;
}

bool equiv_up_to_phase(const Unitary& a, const Unitary& b, double tol) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("unitary dimension mismatch");
    }
    std::size_t d = a.dim();
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t k = 0; k < d * d; ++k) {
        double mag = std::abs(b.entries[k]);
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    if (best_mag < 1e-12) {
        return false;
    }
    cplx phase = a.entries[best] / b.entries[best];
    double pm = std::abs(phase);
    if (pm < 1e-12) {
        return false;
    }
    phase /= pm;
    double err = 0.0;
    for (std::size_t k = 0; k < d * d; ++k) {
        err += std::norm(a.entries[k] - phase * b.entries[k]);
    }
    return std::sqrt(err) <= tol * static_cast<double>(d);
}

bool circuits_equivalent(const Circuit& a, const Circuit& b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    return equiv_up_to_phase(circuit_unitary(a), circuit_unitary(b), tol);
}

namespace {

void brute_extend(const std::string& target, const std::string& pattern, std::size_t delta,
                  std::size_t depth, std::size_t next, std::vector<std::size_t>& acc,
                  std::vector<std::vector<std::size_t>>& out) {
    if (depth == pattern.size()) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = next; i < target.size(); ++i) {
        if (target[i] != pattern[depth]) {
            continue;
        }
        if (!acc.empty() && delta != SIZE_MAX && i - acc.front() >= delta) {
            break;
        }
        acc.push_back(i);
        brute_extend(target, pattern, delta, depth + 1, i + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::size_t>> brute_subsequences(const std::string& target,
                                                         const std::string& pattern,
                                                         std::size_t delta) {
    if (pattern.empty()) {
        throw std::invalid_argument("empty pattern sequence");
    }
    if (delta < 1) {
        throw std::invalid_argument("delta must be positive");
    }
    if (target.size() > 20) {
        throw CapacityError("brute_subsequences capped at target length 20");
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> acc;
    brute_extend(target, pattern, delta, 0, 0, acc, out);
    return out;
}

} // namespace qrw
