#include "circsynth/cost.hpp"

#include <algorithm>
#include <cmath>

namespace circsynth {

double h_sum(const BitMatrix& m) { return static_cast<double>(m.weight()); }

double h_prod(const BitMatrix& m) {
    double s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        std::size_t w = m.row_weight(r);
        if (w == 0) throw ZeroRow(r);
        s += std::log2(static_cast<double>(w));
    }
    return s;
}

double h_sq(const BitMatrix& m) {
    double s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        double w = static_cast<double>(m.row_weight(r));
        s += w * w;
    }
    return s;
}

double cost(const BitMatrix& m, const BitMatrix& m_inv, CostKind kind) {
    switch (kind) {
        case CostKind::HSum:
            return h_sum(m) + h_sum(m_inv);
        case CostKind::HProdPair: {
            BitMatrix mt = m.transpose();
            BitMatrix it = m_inv.transpose();
            return std::max(h_prod(m) + h_prod(it), h_prod(mt) + h_prod(m_inv));
        }
        case CostKind::HSqPair: {
            BitMatrix mt = m.transpose();
            BitMatrix it = m_inv.transpose();
            return std::max(h_sq(m) + h_sq(it), h_sq(mt) + h_sq(m_inv));
        }
    }
    return 0;
}

double cost(const BitMatrix& m, CostKind kind) { return cost(m, inverse(m), kind); }

const char* cost_kind_name(CostKind kind) {
    switch (kind) {
        case CostKind::HSum: return "sum";
        case CostKind::HProdPair: return "prod";
        case CostKind::HSqPair: return "sq";
    }
    return "?";
}

}  // namespace circsynth
