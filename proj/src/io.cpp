#include "circsynth/io.hpp"

#include <fstream>
#include <sstream>

#include "circsynth/errors.hpp"

namespace circsynth {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    const char* ws = " \t\r\n";
    auto b = line.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    auto e = line.find_last_not_of(ws);
    return line.substr(b, e - b + 1);
}

struct LineReader {
    std::istream& in;
    std::size_t lineno = 0;

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            out = clean_line(raw);
            if (!out.empty()) return true;
        }
        return false;
    }
};

int hex_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

void parse_row(BitMatrix& m, std::size_t r, const std::string& tok, std::size_t lineno) {
    const std::size_t n = m.dim();
    if (tok.starts_with("0x") || tok.starts_with("0X")) {
        std::string digits = tok.substr(2);
        if (digits.size() * 4 < n)
            throw ParseError(lineno, "hex row too short for dimension " + std::to_string(n));
        // column 0 is the most significant bit of the n-bit value
        std::size_t nbits = digits.size() * 4;
        for (std::size_t k = 0; k < digits.size(); ++k) {
            int v = hex_digit(digits[k]);
            if (v < 0) throw ParseError(lineno, "bad hex digit");
            for (int b = 0; b < 4; ++b) {
                std::size_t bit_from_msb = k * 4 + b;
                bool on = (v >> (3 - b)) & 1;
                std::size_t col = bit_from_msb - (nbits - n);
                if (bit_from_msb < nbits - n) {
                    if (on) throw ParseError(lineno, "hex row wider than dimension");
                } else if (on) {
                    m.set(r, col, true);
                }
            }
        }
        return;
    }
    if (tok.size() != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " binary digits, got " +
                                     std::to_string(tok.size()));
    for (std::size_t c = 0; c < n; ++c) {
        if (tok[c] == '1')
            m.set(r, c, true);
        else if (tok[c] != '0')
            throw ParseError(lineno, "row characters must be 0 or 1");
    }
}

}  // namespace

BitMatrix parse_matrix(std::istream& in) {
    LineReader rd{in};
    std::string line;
    if (!rd.next(line)) throw ParseError(rd.lineno, "missing dimension line");
    std::size_t n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoul(line, &pos);
        if (pos != line.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(rd.lineno, "bad dimension '" + line + "'");
    }
    if (n == 0) throw ParseError(rd.lineno, "dimension must be positive");
    BitMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rd.next(line)) throw ParseError(rd.lineno, "unexpected end of matrix");
        parse_row(m, r, line, rd.lineno);
    }
    return m;
}

BitMatrix parse_matrix_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_matrix(ss);
}

BitMatrix load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_matrix(f);
}

std::string print_matrix(const BitMatrix& m) {
    std::string out = std::to_string(m.dim()) + "\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) out += m.get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

void save_matrix(const BitMatrix& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << print_matrix(m);
}

Circuit parse_circuit(std::istream& in) {
    LineReader rd{in};
    std::string line;
    if (!rd.next(line)) throw ParseError(rd.lineno, "missing WIDTH line");
    std::istringstream head(line);
    std::string kw;
    long w = -1;
    head >> kw >> w;
    if (kw != "WIDTH" || w <= 0) throw ParseError(rd.lineno, "expected 'WIDTH n'");
    Circuit c(static_cast<uint32_t>(w));
    bool saw_perm = false;
    while (rd.next(line)) {
        std::istringstream ss(line);
        ss >> kw;
        if (kw == "CNOT") {
            if (saw_perm) throw ParseError(rd.lineno, "gates after PERM line");
            long a = -1, b = -1;
            ss >> a >> b;
            if (a < 0 || b < 0 || a >= w || b >= w || a == b)
                throw ParseError(rd.lineno, "bad CNOT wires");
            c.gates.push_back({static_cast<uint32_t>(a), static_cast<uint32_t>(b)});
        } else if (kw == "PERM") {
            std::vector<uint32_t> map;
            long v;
            while (ss >> v) {
                if (v < 0 || v >= w) throw ParseError(rd.lineno, "PERM entry out of range");
                map.push_back(static_cast<uint32_t>(v));
            }
            Permutation p(std::move(map));
            if (p.size() != static_cast<std::size_t>(w) || !p.is_valid())
                throw ParseError(rd.lineno, "PERM is not a bijection on the width");
            c.out_perm = std::move(p);
            saw_perm = true;
        } else {
            throw ParseError(rd.lineno, "unknown directive '" + kw + "'");
        }
    }
    return c;
}

Circuit parse_circuit_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_circuit(ss);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_circuit(f);
}

std::string print_circuit(const Circuit& c) {
    std::string out = "WIDTH " + std::to_string(c.width) + "\n";
    for (const Gate& g : c.gates)
        out += "CNOT " + std::to_string(g.control) + " " + std::to_string(g.target) + "\n";
    if (!c.out_perm.is_identity()) {
        out += "PERM";
        for (uint32_t v : c.out_perm.map) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

void save_circuit(const Circuit& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << print_circuit(c);
}

}  // namespace circsynth
