#include "circsynth/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace circsynth {

static void validate(const Circuit& c) {
    for (const Gate& g : c.gates) {
        if (g.control >= c.width || g.target >= c.width) throw std::out_of_range("gate wire out of range");
        if (g.control == g.target) throw std::invalid_argument("gate control equals target");
    }
    if (c.out_perm.size() != c.width || !c.out_perm.is_valid())
        throw std::invalid_argument("out_perm is not a bijection on the circuit width");
}

BitMatrix simulate(const Circuit& c) {
    validate(c);
    BitMatrix rows = BitMatrix::identity(c.width);
    for (const Gate& g : c.gates) rows.row_xor(g.target, g.control);
    BitMatrix out(c.width);
    for (uint32_t i = 0; i < c.width; ++i) {
        auto d = out.row(i);
        auto s = rows.row(c.out_perm(i));
        std::copy(s.begin(), s.end(), d.begin());
    }
    return out;
}

std::vector<uint32_t> quantum_layers(const Circuit& c) {
    std::vector<uint32_t> last(c.width, 0);
    std::vector<uint32_t> layer(c.gates.size());
    for (std::size_t k = 0; k < c.gates.size(); ++k) {
        const Gate& g = c.gates[k];
        uint32_t l = std::max(last[g.control], last[g.target]) + 1;
        last[g.control] = last[g.target] = l;
        layer[k] = l;
    }
    return layer;
}

uint32_t quantum_depth(const Circuit& c) {
    uint32_t d = 0;
    for (uint32_t l : quantum_layers(c)) d = std::max(d, l);
    return d;
}

uint32_t classical_depth(const Circuit& c) {
    std::vector<uint32_t> depth(c.width, 0);
    for (const Gate& g : c.gates) depth[g.target] = std::max(depth[g.control], depth[g.target]) + 1;
    uint32_t d = 0;
    for (uint32_t i = 0; i < c.width; ++i) d = std::max(d, depth[c.out_perm(i)]);
    return d;
}

DepthReport depth_report(const Circuit& c) {
    return {quantum_depth(c), classical_depth(c), c.gates.size()};
}

static bool commutes(const Gate& a, const Gate& b) {
    return a.control != b.target && b.control != a.target;
}

static std::vector<Gate> one_way_gates(const std::vector<Gate>& gates, uint32_t width) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    std::vector<Gate> remaining = gates;
    std::vector<Gate> rest;
    std::vector<bool> used(width);
    while (!remaining.empty()) {
        rest.clear();
        std::fill(used.begin(), used.end(), false);
        for (const Gate& g : remaining) {
            bool ok = !used[g.control] && !used[g.target];
            if (ok)
                for (const Gate& skipped : rest)
                    if (!commutes(g, skipped)) {
                        ok = false;
                        break;
                    }
            if (ok) {
                out.push_back(g);
                used[g.control] = used[g.target] = true;
            } else {
                rest.push_back(g);
            }
        }
        remaining.swap(rest);
    }
    return out;
}

Circuit one_way_opt(const Circuit& c) {
    validate(c);
    Circuit opt{c.width, one_way_gates(c.gates, c.width), c.out_perm};
    return quantum_depth(opt) <= quantum_depth(c) ? opt : c;
}

Circuit apply_bidirectional_opt(const Circuit& c) {
    Circuit fwd = one_way_opt(c);
    std::reverse(fwd.gates.begin(), fwd.gates.end());
    Circuit bwd = one_way_opt(fwd);
    std::reverse(bwd.gates.begin(), bwd.gates.end());
    return quantum_depth(bwd) <= quantum_depth(c) ? bwd : c;
}

Circuit relabel(const Circuit& c, const Permutation& p) {
    if (p.size() != c.width || !p.is_valid()) throw std::invalid_argument("bad permutation");
    Circuit out = c;
    for (Gate& g : out.gates) g = {p(g.control), p(g.target)};
    return out;
}

Circuit concat(const Circuit& first, const Circuit& second) {
    if (first.width != second.width) throw std::invalid_argument("width mismatch");
    if (!first.out_perm.is_identity())
        throw std::invalid_argument("only the trailing circuit may carry a rewiring");
    Circuit out = first;
    out.gates.insert(out.gates.end(), second.gates.begin(), second.gates.end());
    out.out_perm = second.out_perm;
    return out;
}

std::pair<std::vector<Gate>, Permutation> push_swaps(std::span<const ElemOp> ops, uint32_t width) {
    std::vector<Gate> gates;
    Permutation perm = Permutation::identity(width);
    for (const ElemOp& op : ops) {
        switch (op.kind) {
            case ElemOp::Kind::RowAdd:
                // E(dst+src) * P = P * E(perm(dst)+perm(src))
                gates.push_back({perm(op.src), perm(op.dst)});
                break;
            case ElemOp::Kind::Swap:
                std::swap(perm.map[op.src], perm.map[op.dst]);
                break;
            case ElemOp::Kind::ColAdd:
                throw std::invalid_argument("push_swaps accepts only RowAdd and Swap ops");
        }
    }
    return {std::move(gates), std::move(perm)};
}

}  // namespace circsynth
