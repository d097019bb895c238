#pragma once

#include "qrw/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qrw {

/// Syntax or semantic error in a QASM stream, with 1-based location.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

struct QasmOptions {
    /// u2/u3 statements are rejected unless a loaded rule set can translate
    /// them; callers flip this when such a set is present.
    bool allow_u23 = false;
};

/// Parses the OpenQASM 2.0 subset: header, optional include, qreg
/// declarations (flattened in order into one 0-based index space), and gate
/// statements over id,h,x,y,z,s,sdg,t,tdg,rx,ry,rz,cx,cz,swap,ccx,ccz,
/// u1,u2,u3. creg/measure/barrier are rejected as non-unitary.
Circuit parse_qasm(const std::string& text, const QasmOptions& options = {});

/// Emits the same subset; angles print as rational multiples of pi when
/// within 1e-12 of p/q*pi (q <= 96), else as 17-significant-digit decimals.
std::string serialize_qasm(const Circuit& c);

} // namespace qrw
