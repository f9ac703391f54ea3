#pragma once

#include <cstdint>
#include <vector>

#include "circsynth/greedy.hpp"

namespace circsynth {

/// A transformed matrix together with the recorded row and column operation
/// sequences that produced it from the original, both in application order
/// ((src, dst) means "add row/col src to row/col dst").
struct CandidateTransform {
    BitMatrix m_prime;
    std::vector<std::pair<uint32_t, uint32_t>> c_r;
    std::vector<std::pair<uint32_t, uint32_t>> c_c;
};

struct CirculantConfig {
    unsigned threshold = 8;  // max block count for exhaustive direction enumeration
    bool allow_fallback = true;
    bool dedup_first_level = true;
};

/// One halving level: for each group of 2*step rows (then columns), adds one
/// half into the other, direction chosen by the next bit of dir_bits (row
/// bits first, then column bits). Records exactly n/2 row and n/2 column
/// pairs onto the accumulators and returns the transformed matrix.
BitMatrix transform_level(const BitMatrix& m, std::size_t step, std::span<const uint8_t> dir_bits,
                          std::vector<std::pair<uint32_t, uint32_t>>& rows,
                          std::vector<std::pair<uint32_t, uint32_t>>& cols);

/// Recursive halving of a block-circulant matrix down to block_size. Either
/// enumerates every direction string per level (block count within threshold)
/// or draws a single random string per level.
std::vector<CandidateTransform> process_circulant(const BitMatrix& m, std::size_t block_size,
                                                  const CirculantConfig& cfg, Rng& rng);

/// Direction-string combinations process_circulant enumerates for the given
/// dimension/block size (the closed form the candidate list must match).
std::size_t expected_candidate_count(std::size_t n, std::size_t block_size, bool dedup);

enum class SynthMode { Depth, Size };

struct SynthesisConfig {
    SynthMode mode = SynthMode::Depth;
    CostKind cost = CostKind::HSqPair;
    uint64_t trials = 100;
    uint64_t seed = 0;
    CirculantConfig circulant;
    uint32_t max_depth = 0;  // 0 -> 5n layers
    unsigned jobs = 0;       // 0 -> CIRC_SYNTH_JOBS or hardware concurrency
};

struct BlockSizeStats {
    std::size_t block_size = 0;
    std::size_t candidates = 0;
    uint64_t trials_run = 0;
    uint64_t failures = 0;
    uint32_t best_depth = 0;  // 0 when no success
    std::size_t best_gates = 0;
};

struct SynthesisReport {
    Circuit best;
    uint32_t best_quantum_depth = 0;
    uint32_t best_classical_depth = 0;
    std::size_t best_gate_count = 0;
    uint64_t best_trial = 0;
    uint64_t trials_run = 0;
    uint64_t failures = 0;
    std::vector<BlockSizeStats> per_block;
};

/// Full synthesis: every block size from the detected minimum up to n/2
/// (plus n itself when fallback is allowed), candidates from
/// process_circulant, the configured back-end on each, candidate circuits
/// assembled around the back-end result and depth-compacted. Trials are
/// spread round-robin over the candidate slots; merging is deterministic.
SynthesisReport synthesize(const BitMatrix& m, const SynthesisConfig& cfg);

}  // namespace circsynth
