#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "qimp/emit/emit.hpp"
#include "qimp/simcore/errors.hpp"

namespace qimp {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line_no) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) fail(line_no, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line_no, "bad integer '" + s + "'");
    }
}

// "r<k>[0]" -> k
int parse_clbit_ref(const std::string& s, int line_no) {
    if (s.size() < 5 || s[0] != 'r' || s.substr(s.size() - 3) != "[0]")
        fail(line_no, "bad classical bit reference '" + s + "'");
    return parse_int(s.substr(1, s.size() - 4), line_no);
}

struct QubitTracker {
    int max_qubit = -1;
    void see(int q) { max_qubit = std::max(max_qubit, q); }
};

// Gate vocabulary shared by both dialect readers. Returns false when the
// mnemonic is not a gate.
bool make_gate(const std::string& name, const std::vector<int>& args, double param,
               bool has_param, Instruction& out, int line_no) {
    auto simple = [&](const std::string& g, std::size_t nargs) {
        if (args.size() != nargs) fail(line_no, g + " expects " + std::to_string(nargs) + " qubit(s)");
        out = Instruction{};
        out.kind = OpKind::Gate;
        out.gate = g;
        out.targets.assign(args.end() - 1, args.end());
        return true;
    };

    if (name == "I" || name == "X" || name == "Y" || name == "Z" || name == "H" || name == "T")
        return simple(name, 1);
    if (name == "RY") {
        if (!has_param) fail(line_no, "RY needs an angle");
        simple("RY", 1);
        out.param = param;
        out.has_param = true;
        return true;
    }
    if (name == "SWAP") {
        if (args.size() != 2) fail(line_no, "SWAP expects 2 qubits");
        out = Instruction{};
        out.kind = OpKind::Gate;
        out.gate = "SWAP";
        out.targets = {args[0], args[1]};
        return true;
    }
    if (name == "CNOT") {
        if (args.size() != 2) fail(line_no, "CNOT expects 2 qubits");
        out = Instruction{};
        out.kind = OpKind::Gate;
        out.gate = "X";
        out.targets = {args[1]};
        out.controls = {args[0]};
        return true;
    }
    if (name == "CCNOT") {
        if (args.size() != 3) fail(line_no, "CCNOT expects 3 qubits");
        out = Instruction{};
        out.kind = OpKind::Gate;
        out.gate = "X";
        out.targets = {args[2]};
        out.controls = {args[0], args[1]};
        return true;
    }
    if (name == "CZ") {
        if (args.size() != 2) fail(line_no, "CZ expects 2 qubits");
        out = Instruction{};
        out.kind = OpKind::Gate;
        out.gate = "Z";
        out.targets = {args[1]};
        out.controls = {args[0]};
        return true;
    }
    return false;
}

// ---- quil ----

Circuit parse_quil(const std::vector<std::string>& lines) {
    Circuit c;
    QubitTracker qt;
    int n_clbits = 0;
    bool seen_preamble_reset = false;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        std::string line = lines[li];
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        std::string head = toks[0];

        double param = 0.0;
        bool has_param = false;
        if (auto paren = head.find('('); paren != std::string::npos) {
            if (head.back() != ')') fail(line_no, "malformed parameter list in '" + head + "'");
            const std::string inside = head.substr(paren + 1, head.size() - paren - 2);
            char* end = nullptr;
            param = std::strtod(inside.c_str(), &end);
            if (end == inside.c_str() || *end != '\0') fail(line_no, "bad angle '" + inside + "'");
            has_param = true;
            head = head.substr(0, paren);
        }

        if (head == "RESET") {
            if (toks.size() == 1) {
                if (!seen_preamble_reset && c.instructions.empty()) {
                    seen_preamble_reset = true;  // program preamble
                } else {
                    c.reset();
                }
            } else {
                const int q = parse_int(toks[1], line_no);
                qt.see(q);
                c.reset({q});
            }
            continue;
        }
        if (head == "DECLARE") {
            if (toks.size() != 3 || toks[1].empty() || toks[1][0] != 'r')
                fail(line_no, "unsupported DECLARE");
            n_clbits = std::max(n_clbits, parse_int(toks[1].substr(1), line_no) + 1);
            continue;
        }
        if (head == "PRAGMA") {
            if (toks.size() == 2 && toks[1] == "BARRIER") {
                c.barrier();
                continue;
            }
            fail(line_no, "unsupported PRAGMA");
        }
        if (head == "MEASURE") {
            if (toks.size() != 3) fail(line_no, "MEASURE expects qubit and target bit");
            const int q = parse_int(toks[1], line_no);
            qt.see(q);
            const int b = parse_clbit_ref(toks[2], line_no);
            n_clbits = std::max(n_clbits, b + 1);
            c.measure(q, b);
            continue;
        }
        if (head == "JUMP-WHEN") {
            // Strict five-line motif from the emitter:
            //   JUMP-WHEN @THEN <bit> / JUMP @END / LABEL @THEN / gate / LABEL @END
            if (toks.size() != 3) fail(line_no, "JUMP-WHEN expects label and bit");
            const std::string then_l = toks[1];
            const int b = parse_clbit_ref(toks[2], line_no);
            n_clbits = std::max(n_clbits, b + 1);
            if (li + 4 >= lines.size()) fail(line_no, "truncated conditional block");
            const auto jump = split_ws(lines[li + 1]);
            const auto label_then = split_ws(lines[li + 2]);
            const auto body = split_ws(lines[li + 3]);
            const auto label_end = split_ws(lines[li + 4]);
            if (jump.size() != 2 || jump[0] != "JUMP") fail(line_no + 1, "expected JUMP");
            if (label_then.size() != 2 || label_then[0] != "LABEL" || label_then[1] != then_l)
                fail(line_no + 2, "expected LABEL " + then_l);
            if (label_end.size() != 2 || label_end[0] != "LABEL" || label_end[1] != jump[1])
                fail(line_no + 4, "expected LABEL " + jump[1]);
            if (body.empty()) fail(line_no + 3, "empty conditional body");

            std::string body_head = body[0];
            double body_param = 0.0;
            bool body_has_param = false;
            if (auto paren = body_head.find('('); paren != std::string::npos) {
                const std::string inside = body_head.substr(paren + 1, body_head.size() - paren - 2);
                char* end = nullptr;
                body_param = std::strtod(inside.c_str(), &end);
                if (end == inside.c_str()) fail(line_no + 3, "bad angle");
                body_has_param = true;
                body_head = body_head.substr(0, paren);
            }
            std::vector<int> args;
            for (std::size_t i = 1; i < body.size(); ++i) {
                args.push_back(parse_int(body[i], line_no + 3));
                qt.see(args.back());
            }
            Instruction gate;
            if (!make_gate(body_head, args, body_param, body_has_param, gate, line_no + 3))
                fail(line_no + 3, "unknown gate '" + body_head + "' in conditional");
            gate.kind = OpKind::CondGate;
            gate.cbit = b;
            c.instructions.push_back(std::move(gate));
            li += 4;
            continue;
        }
        if (head == "JUMP" || head == "LABEL") fail(line_no, "stray " + head);

        std::vector<int> args;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            args.push_back(parse_int(toks[i], line_no));
            qt.see(args.back());
        }
        Instruction gate;
        if (!make_gate(head, args, param, has_param, gate, line_no))
            fail(line_no, "unknown token '" + head + "'");
        for (int q : gate.targets) qt.see(q);
        for (int q : gate.controls) qt.see(q);
        c.instructions.push_back(std::move(gate));
    }

    c.n_qubits = qt.max_qubit + 1;
    c.n_clbits = n_clbits;
    if (c.n_qubits == 0) c.n_qubits = 1;
    return c;
}

// ---- qasm ----

int parse_qasm_qubit(const std::string& s, int line_no) {
    // "q[i]"
    if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']')
        fail(line_no, "bad qubit reference '" + s + "'");
    return parse_int(s.substr(2, s.size() - 3), line_no);
}

int parse_qasm_clbit(const std::string& s, int line_no) {
    // "c<k>[0]"
    if (s.size() < 5 || s[0] != 'c' || s.substr(s.size() - 3) != "[0]")
        fail(line_no, "bad classical bit reference '" + s + "'");
    return parse_int(s.substr(1, s.size() - 4), line_no);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), ::toupper);
    return s;
}

Circuit parse_qasm(const std::vector<std::string>& lines) {
    Circuit c;
    bool saw_qreg = false;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        std::string line = lines[li];
        if (auto sl = line.find("//"); sl != std::string::npos) line = line.substr(0, sl);

        std::istringstream stmts(line);
        std::string stmt;
        while (std::getline(stmts, stmt, ';')) {
            // normalize commas to spaces for tokenization
            std::replace(stmt.begin(), stmt.end(), ',', ' ');
            auto toks = split_ws(stmt);
            if (toks.empty()) continue;
            std::string head = toks[0];

            if (head == "OPENQASM" || head == "include") continue;
            if (head == "qreg") {
                if (toks.size() != 2) fail(line_no, "bad qreg");
                c.n_qubits = parse_int(toks[1].substr(2, toks[1].size() - 3), line_no);
                saw_qreg = true;
                continue;
            }
            if (head == "creg") {
                if (toks.size() != 2 || toks[1][0] != 'c') fail(line_no, "bad creg");
                const auto br = toks[1].find('[');
                c.n_clbits = std::max(c.n_clbits, parse_int(toks[1].substr(1, br - 1), line_no) + 1);
                continue;
            }
            if (head == "measure") {
                if (toks.size() != 4 || toks[2] != "->") fail(line_no, "bad measure");
                c.measure(parse_qasm_qubit(toks[1], line_no), parse_qasm_clbit(toks[3], line_no));
                continue;
            }
            if (head == "barrier") {
                c.barrier();
                continue;
            }
            if (head == "reset") {
                if (toks.size() == 2 && toks[1] == "q") c.reset();
                else if (toks.size() == 2) c.reset({parse_qasm_qubit(toks[1], line_no)});
                else fail(line_no, "bad reset");
                continue;
            }

            int cond_bit = -1;
            if (head.rfind("if(", 0) == 0) {
                // "if(c<k>==1)" prefix, body follows in the same statement
                const auto close = head.find(')');
                if (close == std::string::npos) fail(line_no, "bad if()");
                const std::string cond = head.substr(3, close - 3);
                const auto eq = cond.find("==");
                if (eq == std::string::npos || cond.substr(eq + 2) != "1" || cond[0] != 'c')
                    fail(line_no, "only if(c<k>==1) conditions are supported");
                cond_bit = parse_int(cond.substr(1, eq - 1), line_no);
                toks.erase(toks.begin());
                if (toks.empty()) fail(line_no, "empty if() body");
                head = toks[0];
            }

            double param = 0.0;
            bool has_param = false;
            if (auto paren = head.find('('); paren != std::string::npos) {
                if (head.back() != ')') fail(line_no, "malformed parameter list");
                const std::string inside = head.substr(paren + 1, head.size() - paren - 2);
                char* end = nullptr;
                param = std::strtod(inside.c_str(), &end);
                if (end == inside.c_str() || *end != '\0') fail(line_no, "bad angle '" + inside + "'");
                has_param = true;
                head = head.substr(0, paren);
            }

            std::vector<int> args;
            for (std::size_t i = 1; i < toks.size(); ++i)
                args.push_back(parse_qasm_qubit(toks[i], line_no));

            std::string mnemonic;
            if (head == "id") mnemonic = "I";
            else if (head == "cx") mnemonic = "CNOT";
            else if (head == "ccx") mnemonic = "CCNOT";
            else if (head == "cz") mnemonic = "CZ";
            else mnemonic = upper(head);

            Instruction gate;
            if (!make_gate(mnemonic, args, param, has_param, gate, line_no))
                fail(line_no, "unknown statement '" + head + "'");
            if (cond_bit >= 0) {
                gate.kind = OpKind::CondGate;
                gate.cbit = cond_bit;
            }
            c.instructions.push_back(std::move(gate));
        }
    }

    if (!saw_qreg) throw ParseError("missing qreg declaration");
    return c;
}

}  // namespace

Circuit parse(const DialectText& text) {
    return text.dialect == Dialect::Quil ? parse_quil(text.lines) : parse_qasm(text.lines);
}

Circuit parse(Dialect dialect, const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return parse(DialectText{dialect, std::move(lines)});
}

}  // namespace qimp
