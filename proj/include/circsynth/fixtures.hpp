#pragma once

#include "circsynth/circuit.hpp"

namespace circsynth {

/// Published Whirlwind M0 implementation with quantum depth 17 (200 CNOTs).
Circuit whirlwind_depth17_circuit();

/// Published Whirlwind M0 implementation with 159 XORs.
Circuit whirlwind_xor159_circuit();

/// The Whirlwind M0 matrix, derived by simulating the depth-17 listing and
/// cross-checked against the 159-XOR listing. Throws FixtureMismatch if the
/// two listings ever disagree.
BitMatrix whirlwind_m0();

}  // namespace circsynth
