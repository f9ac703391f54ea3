#include "circsynth/greedy.hpp"

#include <algorithm>
#include <cmath>

namespace circsynth {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::size_t rand_below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::size_t xor_weight(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    std::size_t w = 0;
    for (std::size_t k = 0; k < a.size(); ++k) w += std::popcount(a[k] ^ b[k]);
    return w;
}

// Builds the back-end circuit from the recorded operation lists: column ops
// become prefix gates in application order, row ops become suffix gates in
// reverse application order conjugated through the terminal permutation.
Circuit assemble_heu_circuit(std::size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& rows,
                             const std::vector<std::pair<uint32_t, uint32_t>>& cols,
                             const Permutation& q) {
    std::vector<Gate> gates;
    gates.reserve(rows.size() + cols.size());
    for (auto [src, dst] : cols) gates.push_back({dst, src});
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        gates.push_back({q(it->first), q(it->second)});
    return Circuit(static_cast<uint32_t>(n), std::move(gates), q);
}

// B together with its transpose, inverse and transposed inverse, plus cached
// row weights of all four. A row op on B is a column op on B^-1 and vice
// versa, so every elementary operation updates each of the four matrices.
struct GreedyState {
    std::size_t n;
    CostKind kind;
    BitMatrix b, bt, v, vt;  // v = inverse(b)
    std::vector<int> rw_b, rw_bt, rw_v, rw_vt;
    std::vector<double> gtab;  // g(w) per weight for the active cost kind

    GreedyState(const BitMatrix& m, CostKind k)
        : n(m.dim()), kind(k), b(m), bt(m.transpose()), v(inverse(m)), vt(v.transpose()) {
        rw_b = weights(b);
        rw_bt = weights(bt);
        rw_v = weights(v);
        rw_vt = weights(vt);
        gtab.resize(n + 1);
        for (std::size_t w = 0; w <= n; ++w) {
            switch (kind) {
                case CostKind::HSum: gtab[w] = static_cast<double>(w); break;
                case CostKind::HProdPair: gtab[w] = w ? std::log2(static_cast<double>(w)) : -1e9; break;
                case CostKind::HSqPair: gtab[w] = static_cast<double>(w) * static_cast<double>(w); break;
            }
        }
    }

    std::vector<int> weights(const BitMatrix& m) const {
        std::vector<int> w(n);
        for (std::size_t r = 0; r < n; ++r) w[r] = static_cast<int>(m.row_weight(r));
        return w;
    }

    double g(int w) const { return gtab[static_cast<std::size_t>(w)]; }

    double total(const std::vector<int>& rw) const {
        double s = 0;
        for (int w : rw) s += g(w);
        return s;
    }

    // Change of sum_c g(colw[c]) of the matrix whose rows are given, when its
    // row dst gets XORed with row src. colw is indexed by the transpose side.
    double col_delta(const BitMatrix& m, const std::vector<int>& colw, std::size_t src,
                     std::size_t dst) const {
        double d = 0;
        auto s = m.row(src);
        auto t = m.row(dst);
        for (std::size_t k = 0; k < s.size(); ++k) {
            uint64_t dec = s[k] & t[k];
            uint64_t inc = s[k] & ~t[k];
            while (dec) {
                std::size_t c = k * 64 + std::countr_zero(dec);
                dec &= dec - 1;
                d += g(colw[c] - 1) - g(colw[c]);
            }
            while (inc) {
                std::size_t c = k * 64 + std::countr_zero(inc);
                inc &= inc - 1;
                d += g(colw[c] + 1) - g(colw[c]);
            }
        }
        return d;
    }

    double current_cost() const {
        if (kind == CostKind::HSum) return total(rw_b) + total(rw_v);
        return std::max(total(rw_b) + total(rw_vt), total(rw_bt) + total(rw_v));
    }

    // Cost after "add row src to row dst" of B, without applying it.
    double row_op_cost(std::size_t src, std::size_t dst) const {
        double da = g(static_cast<int>(xor_weight(b.row(src), b.row(dst)))) - g(rw_b[dst]);
        double dvt = g(static_cast<int>(xor_weight(vt.row(dst), vt.row(src)))) - g(rw_vt[src]);
        if (kind == CostKind::HSum) return total(rw_b) + da + total(rw_vt) + dvt;
        double dat = col_delta(b, rw_bt, src, dst);
        double dv = col_delta(vt, rw_v, dst, src);
        return std::max(total(rw_b) + da + total(rw_vt) + dvt,
                        total(rw_bt) + dat + total(rw_v) + dv);
    }

    // Cost after "add col src to col dst" of B.
    double col_op_cost(std::size_t src, std::size_t dst) const {
        double dat = g(static_cast<int>(xor_weight(bt.row(src), bt.row(dst)))) - g(rw_bt[dst]);
        double dv = g(static_cast<int>(xor_weight(v.row(dst), v.row(src)))) - g(rw_v[src]);
        if (kind == CostKind::HSum) return total(rw_bt) + dat + total(rw_v) + dv;
        double da = col_delta(bt, rw_b, src, dst);
        double dvt = col_delta(v, rw_vt, dst, src);
        return std::max(total(rw_b) + da + total(rw_vt) + dvt,
                        total(rw_bt) + dat + total(rw_v) + dv);
    }

    void refresh_col_weights(const BitMatrix& m, std::vector<int>& colw, std::size_t src,
                             std::size_t dst) {
        auto s = m.row(src);
        auto t = m.row(dst);
        for (std::size_t k = 0; k < s.size(); ++k) {
            uint64_t dec = s[k] & t[k];
            uint64_t inc = s[k] & ~t[k];
            while (dec) {
                colw[k * 64 + std::countr_zero(dec)] -= 1;
                dec &= dec - 1;
            }
            while (inc) {
                colw[k * 64 + std::countr_zero(inc)] += 1;
                inc &= inc - 1;
            }
        }
    }

    void apply_row_op(std::size_t src, std::size_t dst) {
        refresh_col_weights(b, rw_bt, src, dst);
        refresh_col_weights(vt, rw_v, dst, src);
        b.row_xor(dst, src);
        bt.col_xor(dst, src);
        vt.row_xor(src, dst);
        v.col_xor(src, dst);
        rw_b[dst] = static_cast<int>(b.row_weight(dst));
        rw_vt[src] = static_cast<int>(vt.row_weight(src));
    }

    void apply_col_op(std::size_t src, std::size_t dst) {
        refresh_col_weights(bt, rw_b, src, dst);
        refresh_col_weights(v, rw_vt, dst, src);
        bt.row_xor(dst, src);
        b.col_xor(dst, src);
        v.row_xor(src, dst);
        vt.col_xor(src, dst);
        rw_bt[dst] = static_cast<int>(bt.row_weight(dst));
        rw_v[src] = static_cast<int>(v.row_weight(src));
    }
};

struct Candidate {
    bool is_row;
    uint32_t src, dst;
};

}  // namespace

Rng make_trial_rng(uint64_t seed, uint64_t trial) {
    return Rng(splitmix64(seed ^ splitmix64(trial)));
}

std::optional<std::pair<std::vector<Gate>, Permutation>> try_finish_one_layer(const BitMatrix& m) {
    const std::size_t n = m.dim();
    if (auto p = is_permutation(m)) return std::make_pair(std::vector<Gate>{}, *p);
    BitMatrix work = m;
    std::vector<bool> used(n, false);
    std::vector<Gate> gates;
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || work.row_weight(j) != 2) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || used[i]) continue;
            if (xor_weight(work.row(i), work.row(j)) == 1) {
                work.row_xor(j, i);
                gates.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
                used[i] = used[j] = true;
                break;
            }
        }
    }
    if (gates.empty()) return std::nullopt;
    if (auto p = is_permutation(work)) return std::make_pair(std::move(gates), *p);
    return std::nullopt;
}

std::optional<HeuResult> depth_greedy(const BitMatrix& m, CostKind kind, Rng& rng,
                                      uint32_t max_depth, bool allow_sideways) {
    const std::size_t n = m.dim();
    if (max_depth == 0) max_depth = static_cast<uint32_t>(5 * n);
    GreedyState st(m, kind);
    std::vector<std::pair<uint32_t, uint32_t>> rows_applied, cols_applied;
    uint32_t layers = 0;
    std::vector<bool> used_r(n), used_c(n);
    std::vector<Candidate> ties;

    while (true) {
        if (auto p = is_permutation(st.b)) {
            return HeuResult{assemble_heu_circuit(n, rows_applied, cols_applied, *p), 1,
                             st.current_cost()};
        }
        if (auto fin = try_finish_one_layer(st.b)) {
            for (const Gate& g : fin->first) {
                st.apply_row_op(g.control, g.target);
                rows_applied.push_back({g.control, g.target});
            }
            return HeuResult{assemble_heu_circuit(n, rows_applied, cols_applied, fin->second), 1,
                             st.current_cost()};
        }
        // open a fresh pair of parallel layers
        std::fill(used_r.begin(), used_r.end(), false);
        std::fill(used_c.begin(), used_c.end(), false);
        bool row_layer_used = false, col_layer_used = false;
        bool sideways_left = allow_sideways;
        while (true) {
            const double cur = st.current_cost();
            double best = cur;
            ties.clear();
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    if (!used_r[i] && !used_r[j]) {
                        double c = st.row_op_cost(i, j);
                        if (c < best) {
                            best = c;
                            ties.clear();
                        }
                        if (c == best && best < cur) ties.push_back({true, i, j});
                    }
                    if (!used_c[i] && !used_c[j]) {
                        double c = st.col_op_cost(i, j);
                        if (c < best) {
                            best = c;
                            ties.clear();
                        }
                        if (c == best && best < cur) ties.push_back({false, i, j});
                    }
                }
            if (ties.empty() && sideways_left) {
                // one equal-cost move per layer when enabled
                sideways_left = false;
                for (uint32_t i = 0; i < n && ties.empty(); ++i)
                    for (uint32_t j = 0; j < n; ++j) {
                        if (i == j) continue;
                        if (!used_r[i] && !used_r[j] && st.row_op_cost(i, j) == cur) {
                            ties.push_back({true, i, j});
                            break;
                        }
                    }
            }
            if (ties.empty()) break;
            const Candidate& pick = ties[rand_below(rng, ties.size())];
            if (pick.is_row) {
                st.apply_row_op(pick.src, pick.dst);
                rows_applied.push_back({pick.src, pick.dst});
                used_r[pick.src] = used_r[pick.dst] = true;
                row_layer_used = true;
            } else {
                st.apply_col_op(pick.src, pick.dst);
                cols_applied.push_back({pick.src, pick.dst});
                used_c[pick.src] = used_c[pick.dst] = true;
                col_layer_used = true;
            }
        }
        if (!row_layer_used && !col_layer_used) return std::nullopt;  // stuck
        layers += (row_layer_used ? 1 : 0) + (col_layer_used ? 1 : 0);
        if (layers >= max_depth) return std::nullopt;
    }
}

std::optional<HeuResult> depth_greedy(const BitMatrix& m, CostKind kind, uint64_t seed,
                                      uint32_t max_depth) {
    Rng rng = make_trial_rng(seed, 0);
    return depth_greedy(m, kind, rng, max_depth);
}

std::vector<ElemOp> gaussian_elimination_ops(const BitMatrix& m) {
    const std::size_t n = m.dim();
    BitMatrix a = m;
    std::vector<ElemOp> ops;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !a.get(piv, col)) ++piv;
        if (piv == n) throw SingularMatrix();
        if (piv != col) {
            a.swap_rows(col, piv);
            ops.push_back({ElemOp::Kind::Swap, static_cast<uint32_t>(col), static_cast<uint32_t>(piv)});
        }
        for (std::size_t r = 0; r < n; ++r)
            if (r != col && a.get(r, col)) {
                a.row_xor(r, col);
                ops.push_back(
                    {ElemOp::Kind::RowAdd, static_cast<uint32_t>(col), static_cast<uint32_t>(r)});
            }
    }
    return ops;
}

namespace {

// Pure Gaussian-elimination route: swaps are pushed into the output
// permutation so only genuine row-adds remain as gates.
HeuResult gaussian_result(const BitMatrix& m) {
    const std::size_t n = m.dim();
    BitMatrix b = m;
    std::vector<std::pair<uint32_t, uint32_t>> rows_applied;
    auto [gates, perm] = push_swaps(gaussian_elimination_ops(b), static_cast<uint32_t>(n));
    (void)perm;  // re-derived from the final matrix below
    for (const Gate& g : gates) {
        b.row_xor(g.target, g.control);
        rows_applied.push_back({g.control, g.target});
    }
    Permutation q = *is_permutation(b);
    return HeuResult{assemble_heu_circuit(n, rows_applied, {}, q), 1,
                     static_cast<double>(gates.size())};
}

}  // namespace

HeuResult size_greedy(const BitMatrix& m, Rng& rng) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("empty matrix");
    BitMatrix b = m;
    BitMatrix bt = m.transpose();
    BitMatrix v = inverse(m);  // rejects singular input
    BitMatrix vt = v.transpose();
    std::vector<std::pair<uint32_t, uint32_t>> rows_applied, cols_applied;
    std::vector<Candidate> ties, plateau;
    // Consecutive non-reducing moves tolerated before giving up on the greedy
    // phase; resets whenever a strict reduction is found again.
    constexpr int kPlateauBudget = 20;
    int plateau_left = kPlateauBudget;
    constexpr std::ptrdiff_t kInf = PTRDIFF_MAX;
    bool stuck = false;

    while (!is_permutation(b)) {
        // primary objective: ones of B; secondary tie-break: ones of B^-1.
        std::pair<std::ptrdiff_t, std::ptrdiff_t> best{0, kInf};
        std::pair<std::ptrdiff_t, std::ptrdiff_t> best_flat{1, kInf};
        ties.clear();
        plateau.clear();
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int side = 0; side < 2; ++side) {
                    const bool is_row = side == 0;
                    const BitMatrix& mb = is_row ? b : bt;
                    const BitMatrix& mv = is_row ? vt : v;
                    const std::ptrdiff_t db =
                        static_cast<std::ptrdiff_t>(xor_weight(mb.row(i), mb.row(j))) -
                        static_cast<std::ptrdiff_t>(mb.row_weight(j));
                    const std::ptrdiff_t dv =
                        static_cast<std::ptrdiff_t>(xor_weight(mv.row(i), mv.row(j))) -
                        static_cast<std::ptrdiff_t>(mv.row_weight(i));
                    const std::pair key{db, dv};
                    if (db < 0) {
                        if (key < best) {
                            best = key;
                            ties.clear();
                        }
                        if (key == best) ties.push_back({is_row, i, j});
                    } else if (db == 0) {
                        if (key < best_flat) {
                            best_flat = key;
                            plateau.clear();
                        }
                        if (key == best_flat) plateau.push_back({is_row, i, j});
                    }
                }
            }
        const Candidate* pick = nullptr;
        if (!ties.empty()) {
            pick = &ties[rand_below(rng, ties.size())];
            plateau_left = kPlateauBudget;
        } else if (!plateau.empty() && plateau_left > 0) {
            --plateau_left;
            pick = &plateau[rand_below(rng, plateau.size())];
        }
        if (!pick) {
            stuck = true;
            break;
        }
        if (pick->is_row) {
            b.row_xor(pick->dst, pick->src);
            bt.col_xor(pick->dst, pick->src);
            vt.row_xor(pick->src, pick->dst);
            v.col_xor(pick->src, pick->dst);
            rows_applied.push_back({pick->src, pick->dst});
        } else {
            bt.row_xor(pick->dst, pick->src);
            b.col_xor(pick->dst, pick->src);
            v.row_xor(pick->src, pick->dst);
            vt.col_xor(pick->src, pick->dst);
            cols_applied.push_back({pick->src, pick->dst});
        }
    }
    if (stuck) {
        // finish the residual by Gaussian elimination
        auto [gates, perm] = push_swaps(gaussian_elimination_ops(b), static_cast<uint32_t>(n));
        (void)perm;
        for (const Gate& g : gates) {
            b.row_xor(g.target, g.control);
            rows_applied.push_back({g.control, g.target});
        }
    }
    Permutation q = *is_permutation(b);
    HeuResult res{assemble_heu_circuit(n, rows_applied, cols_applied, q), 1,
                  static_cast<double>(rows_applied.size() + cols_applied.size())};
    // plain elimination is the guaranteed upper bound; never return worse
    HeuResult ge = gaussian_result(m);
    if (ge.circuit.gates.size() < res.circuit.gates.size()) return ge;
    return res;
}

HeuResult size_greedy(const BitMatrix& m, uint64_t seed) {
    Rng rng = make_trial_rng(seed, 0);
    return size_greedy(m, rng);
}

}  // namespace circsynth
