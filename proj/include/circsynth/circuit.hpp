#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circsynth/gf2.hpp"

namespace circsynth {

/// CNOT(control, target): XORs the control wire into the target wire.
/// As a matrix it is the transvection E(target + control).
struct Gate {
    uint32_t control;
    uint32_t target;

    bool operator==(const Gate&) const = default;
};

/// Ordered CNOT list with an output rewiring. Gate list order is execution
/// order; output i is read from wire out_perm[i].
struct Circuit {
    uint32_t width = 0;
    std::vector<Gate> gates;
    Permutation out_perm;

    Circuit() = default;
    explicit Circuit(uint32_t w) : width(w), out_perm(Permutation::identity(w)) {}
    Circuit(uint32_t w, std::vector<Gate> g, Permutation p)
        : width(w), gates(std::move(g)), out_perm(std::move(p)) {}

    bool operator==(const Circuit&) const = default;
};

struct DepthReport {
    uint32_t quantum_depth;
    uint32_t classical_depth;
    std::size_t gate_count;
};

/// Matrix computed by the circuit: row i is the GF(2) linear form of output i.
BitMatrix simulate(const Circuit& c);

/// Greedy as-soon-as-possible layering with pairwise wire-disjoint layers.
uint32_t quantum_depth(const Circuit& c);
/// Per-gate layer assignment of the same layering (layers are 1-based).
std::vector<uint32_t> quantum_layers(const Circuit& c);

/// Longest input-to-output path of the in-place XOR program; fan-out of an
/// unchanged control value is free.
uint32_t classical_depth(const Circuit& c);

DepthReport depth_report(const Circuit& c);

/// Single forward sweep pulling gates into parallel layers under
/// exchange-equivalence: (i,j) commutes with (i',j') iff i != j' and i' != j.
/// Preserves simulate and gate count; never increases quantum depth.
Circuit one_way_opt(const Circuit& c);

/// one_way_opt forward, then on the reversed gate list, re-reversed.
Circuit apply_bidirectional_opt(const Circuit& c);

/// Conjugates every gate (i, j) to (p(i), p(j)). out_perm is left untouched.
Circuit relabel(const Circuit& c, const Permutation& p);

Circuit concat(const Circuit& first, const Circuit& second);

/// Rewrites a RowAdd/Swap sequence (application order, left-multiplications)
/// into pure CNOT gates plus a net output permutation, commuting the swaps to
/// the output end. Gate count equals the RowAdd count.
std::pair<std::vector<Gate>, Permutation> push_swaps(std::span<const ElemOp> ops, uint32_t width);

}  // namespace circsynth
