#pragma once

#include <optional>
#include <random>
#include <utility>

#include "circsynth/circuit.hpp"
#include "circsynth/cost.hpp"
#include "circsynth/gf2.hpp"

namespace circsynth {

using Rng = std::mt19937_64;

/// Deterministic per-trial stream derived from (seed, trial).
Rng make_trial_rng(uint64_t seed, uint64_t trial);

struct HeuResult {
    Circuit circuit;  // simulate(circuit) == input matrix; out_perm carries the free rewiring
    uint64_t trials_used = 1;
    double final_cost = 0;
};

/// One wire-disjoint layer of row-adds turning m into a permutation matrix,
/// if the weight-2-row pairing finds one.
std::optional<std::pair<std::vector<Gate>, Permutation>> try_finish_one_layer(const BitMatrix& m);

/// Cost-guided layered greedy. Returns empty when the layer budget runs out
/// or no strictly improving operation exists.
std::optional<HeuResult> depth_greedy(const BitMatrix& m, CostKind kind, Rng& rng,
                                      uint32_t max_depth = 0, bool allow_sideways = false);
std::optional<HeuResult> depth_greedy(const BitMatrix& m, CostKind kind, uint64_t seed,
                                      uint32_t max_depth = 0);

/// Ones-count greedy with Gaussian-elimination fallback; always succeeds on
/// invertible input. Ties on the ones reduction of the matrix are broken by
/// the ones reduction of its inverse, and a bounded number of consecutive
/// non-worsening moves lets the search walk off plateaus. Never returns more
/// gates than plain Gaussian elimination.
HeuResult size_greedy(const BitMatrix& m, Rng& rng);
HeuResult size_greedy(const BitMatrix& m, uint64_t seed);

/// Row ops (with swaps) reducing an invertible matrix to the identity.
std::vector<ElemOp> gaussian_elimination_ops(const BitMatrix& m);

}  // namespace circsynth
