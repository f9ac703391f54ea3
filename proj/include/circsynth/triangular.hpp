#pragma once

#include <vector>

#include "circsynth/circuit.hpp"
#include "circsynth/gf2.hpp"

namespace circsynth {

bool is_unit_upper_triangular(const BitMatrix& m);

/// Parallel elimination rounds reducing a unit upper-triangular matrix to the
/// identity. Each round greedily pairs a finished row (already a unit vector)
/// with a row still carrying a 1 in its column, both wires fresh this round,
/// so the gates within one round are wire-disjoint. Gates are in emission
/// (elimination) order. Throws NotUnitUpperTriangular.
std::vector<std::vector<Gate>> elimination_rounds(const BitMatrix& m);

/// Circuit implementing m: the elimination gate list reversed (each CNOT is
/// its own inverse, so only the order flips). out_perm is the identity.
Circuit synth_unit_upper_triangular(const BitMatrix& m);

/// 8x8 GF(2) matrix of multiplication by x in GF(2^8) mod x^8+x^4+x^3+x+1.
BitMatrix xtime_block();

/// 32x32 unit upper-triangular instance with block rows
/// [01 02 00 01; 00 01 02 00; 00 00 01 02; 00 00 00 01].
BitMatrix build_mixcolumn_triangular();

/// AES MixColumn as a 32x32 GF(2) matrix: circulant block rows (02 03 01 01).
BitMatrix build_aes_mixcolumn();

}  // namespace circsynth
