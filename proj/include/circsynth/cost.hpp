#pragma once

#include "circsynth/gf2.hpp"

namespace circsynth {

enum class CostKind { HSum, HProdPair, HSqPair };

double h_sum(const BitMatrix& m);
double h_prod(const BitMatrix& m);  // throws ZeroRow
double h_sq(const BitMatrix& m);

/// Composite cost guiding the depth greedy:
///   HSum      -> h_sum(A) + h_sum(A^-1)
///   HProdPair -> max{h_prod(A)+h_prod((A^-1)^T), h_prod(A^T)+h_prod(A^-1)}
///   HSqPair   -> same pairing with h_sq
double cost(const BitMatrix& m, CostKind kind);
double cost(const BitMatrix& m, const BitMatrix& m_inv, CostKind kind);

const char* cost_kind_name(CostKind kind);

}  // namespace circsynth
