#pragma once

#include <iosfwd>
#include <string>

#include "circsynth/circuit.hpp"
#include "circsynth/gf2.hpp"

namespace circsynth {

// Matrix text format: line 1 is the decimal dimension n, then n rows of n
// characters from {0,1} (leftmost character is column 0). Rows may instead be
// hexadecimal with a "0x" prefix (big-endian nibbles, column 0 is the most
// significant bit). '#' starts a comment.
BitMatrix parse_matrix(std::istream& in);
BitMatrix parse_matrix_string(const std::string& text);
BitMatrix load_matrix(const std::string& path);
std::string print_matrix(const BitMatrix& m);
void save_matrix(const BitMatrix& m, const std::string& path);

// Circuit text format: "WIDTH n", then "CNOT c t" per gate in execution
// order, then an optional "PERM p0 p1 ... p(n-1)" line. Missing PERM means
// the identity rewiring. '#' starts a comment.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_string(const std::string& text);
Circuit load_circuit(const std::string& path);
std::string print_circuit(const Circuit& c);
void save_circuit(const Circuit& c, const std::string& path);

}  // namespace circsynth
