#include "qrw/qasm.hpp"

#include "qrw/angle.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace qrw {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws_and_comments();
        return pos >= text.size();
    }

    char peek() {
        skip_ws_and_comments();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool try_consume(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string ident() {
        skip_ws_and_comments();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '.')) {
            advance();
        }
        if (pos == start) {
            fail("expected identifier");
        }
        return text.substr(start, pos - start);
    }

    long long integer() {
        skip_ws_and_comments();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            advance();
        }
        if (pos == start) {
            fail("expected integer");
        }
        return std::stoll(text.substr(start, pos - start));
    }

    double number() {
        skip_ws_and_comments();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == 'e' || text[pos] == 'E' ||
                ((text[pos] == '+' || text[pos] == '-') && pos > start &&
                 (text[pos - 1] == 'e' || text[pos - 1] == 'E')))) {
            advance();
        }
        if (pos == start) {
            fail("expected number");
        }
        return std::stod(text.substr(start, pos - start));
    }

    std::string quoted_string() {
        expect('"');
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '"') {
            advance();
        }
        if (pos >= text.size()) {
            fail("unterminated string");
        }
        std::string s = text.substr(start, pos - start);
        advance();
        return s;
    }
};

// expr := mul (('+'|'-') mul)* ; mul := unary (('*'|'/') unary)* ;
// unary := '-' unary | atom ; atom := number | 'pi' | '(' expr ')'
double parse_angle_expr(Lexer& lx);

double parse_angle_atom(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.advance();
        double v = parse_angle_expr(lx);
        lx.expect(')');
        return v;
    }
    if (c == '-') {
        lx.advance();
        return -parse_angle_atom(lx);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        return lx.number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string id = lx.ident();
        if (id == "pi") {
            return kPi;
        }
        lx.fail("unknown symbol '" + id + "' in angle");
    }
    lx.fail("malformed angle expression");
}

double parse_angle_mul(Lexer& lx) {
    double v = parse_angle_atom(lx);
    while (true) {
        char c = lx.peek();
        if (c == '*') {
            lx.advance();
            v *= parse_angle_atom(lx);
        } else if (c == '/') {
            lx.advance();
            double rhs = parse_angle_atom(lx);
            if (rhs == 0.0) {
                lx.fail("division by zero in angle");
            }
            v /= rhs;
        } else {
            return v;
        }
    }
}

double parse_angle_expr(Lexer& lx) {
    double v = parse_angle_mul(lx);
    while (true) {
        char c = lx.peek();
        if (c == '+') {
            lx.advance();
            v += parse_angle_mul(lx);
        } else if (c == '-') {
            lx.advance();
            v -= parse_angle_mul(lx);
        } else {
            return v;
        }
    }
}

struct Register {
    std::uint32_t base;
    std::uint32_t size;
};

} // namespace

Circuit parse_qasm(const std::string& text, const QasmOptions& options) {
    Lexer lx(text);

    std::string kw = lx.ident();
    if (kw != "OPENQASM") {
        lx.fail("expected OPENQASM header");
    }
    double version = lx.number();
    if (version != 2.0) {
        lx.fail("only OPENQASM 2.0 is supported");
    }
    lx.expect(';');

    std::map<std::string, Register> regs;
    std::uint32_t total_qubits = 0;
    std::vector<Instruction> instructions;

    while (!lx.eof()) {
        int stmt_line = lx.line;
        int stmt_col = lx.col;
        std::string head = lx.ident();

        if (head == "include") {
            lx.quoted_string();
            lx.expect(';');
            continue;
        }
        if (head == "qreg") {
            std::string name = lx.ident();
            lx.expect('[');
            long long n = lx.integer();
            lx.expect(']');
            lx.expect(';');
            if (n <= 0) {
                throw ParseError("qreg '" + name + "' must have positive size", stmt_line,
                                 stmt_col);
            }
            if (regs.count(name)) {
                throw ParseError("duplicate qreg '" + name + "'", stmt_line, stmt_col);
            }
            regs[name] = {total_qubits, static_cast<std::uint32_t>(n)};
            total_qubits += static_cast<std::uint32_t>(n);
            continue;
        }
        if (head == "creg" || head == "measure" || head == "barrier" || head == "reset" ||
            head == "if") {
            throw ParseError("non-unitary statement unsupported: '" + head + "'", stmt_line,
                             stmt_col);
        }
        if (head == "gate" || head == "opaque") {
            throw ParseError("gate definitions unsupported", stmt_line, stmt_col);
        }

        auto gid = gate_from_name(head);
        if (!gid) {
            throw ParseError("unknown gate '" + head + "'", stmt_line, stmt_col);
        }
        if ((*gid == GateId::U2 || *gid == GateId::U3) && !options.allow_u23) {
            throw ParseError("gate '" + head + "' requires a rule set that translates it",
                             stmt_line, stmt_col);
        }

        std::vector<double> angles;
        if (lx.peek() == '(') {
            lx.advance();
            if (lx.peek() != ')') {
                angles.push_back(parse_angle_expr(lx));
                while (lx.try_consume(',')) {
                    angles.push_back(parse_angle_expr(lx));
                }
            }
            lx.expect(')');
        }

        std::vector<std::uint32_t> qubits;
        do {
            int arg_line = lx.line;
            int arg_col = lx.col;
            std::string rname = lx.ident();
            auto it = regs.find(rname);
            if (it == regs.end()) {
                throw ParseError("unknown register '" + rname + "'", arg_line, arg_col);
            }
            lx.expect('[');
            long long idx = lx.integer();
            lx.expect(']');
            if (idx < 0 || idx >= it->second.size) {
                throw ParseError("qubit index " + std::to_string(idx) + " out of range for '" +
                                     rname + "[" + std::to_string(it->second.size) + "]'",
                                 arg_line, arg_col);
            }
            qubits.push_back(it->second.base + static_cast<std::uint32_t>(idx));
        } while (lx.try_consume(','));
        lx.expect(';');

        try {
            instructions.emplace_back(*gid, std::move(qubits), std::move(angles));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), stmt_line, stmt_col);
        }
    }

    return Circuit(total_qubits, std::move(instructions));
}

std::string serialize_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "qreg q[" << c.num_qubits() << "];\n";
    for (const auto& instr : c.instructions()) {
        out << instr.kind().name;
        if (!instr.angles.empty()) {
            out << "(";
            for (std::size_t i = 0; i < instr.angles.size(); ++i) {
                if (i) {
                    out << ",";
                }
                out << format_angle(instr.angles[i]);
            }
            out << ")";
        }
        out << " ";
        for (std::size_t i = 0; i < instr.qubits.size(); ++i) {
            if (i) {
                out << ",";
            }
            out << "q[" << instr.qubits[i] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

} // namespace qrw
