#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circsynth/circuit.hpp"
#include "circsynth/fixtures.hpp"
#include "helpers.hpp"

using namespace circsynth;
using namespace circsynth::testing;

TEST_CASE("simulate basics") {
    CHECK(simulate(Circuit(3)) == BitMatrix::identity(3));

    Circuit c(2);
    c.gates.push_back({0, 1});
    CHECK(simulate(c) == from_rows({{1, 0}, {1, 1}}));

    // later gates multiply on the left; out_perm reorders rows
    Circuit p(2);
    p.out_perm = Permutation({1, 0});
    CHECK(simulate(p) == from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("simulate equals gate-product oracle") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        Circuit c = random_circuit(8, 25, rng, true);
        BitMatrix prod = BitMatrix::identity(8);
        for (const Gate& g : c.gates)
            prod = naive_multiply(row_add(BitMatrix::identity(8), g.control, g.target), prod);
        CHECK(simulate(c) == naive_multiply(permutation_matrix(c.out_perm), prod));
    }
}

TEST_CASE("reference circuits agree on the same matrix") {
    Circuit b = whirlwind_depth17_circuit();
    Circuit c = whirlwind_xor159_circuit();
    CHECK(b.gates.size() == 200);
    CHECK(c.gates.size() == 159);
    CHECK(quantum_depth(b) == 17);
    CHECK(simulate(b) == simulate(c));
}

TEST_CASE("quantum depth") {
    Circuit c(4);
    c.gates = {{0, 1}, {2, 3}};
    CHECK(quantum_depth(c) == 1);
    c.gates = {{0, 1}, {1, 2}};
    CHECK(quantum_depth(c) == 2);
    CHECK(quantum_depth(Circuit(4)) == 0);

    // every layer is pairwise wire-disjoint
    std::mt19937_64 rng(12);
    for (int k = 0; k < 20; ++k) {
        Circuit r = random_circuit(6, 30, rng);
        auto layers = quantum_layers(r);
        uint32_t maxl = 0;
        for (uint32_t l : layers) maxl = std::max(maxl, l);
        CHECK(maxl == quantum_depth(r));
        for (std::size_t i = 0; i < r.gates.size(); ++i)
            for (std::size_t j = i + 1; j < r.gates.size(); ++j)
                if (layers[i] == layers[j]) {
                    CHECK(r.gates[i].control != r.gates[j].control);
                    CHECK(r.gates[i].control != r.gates[j].target);
                    CHECK(r.gates[i].target != r.gates[j].control);
                    CHECK(r.gates[i].target != r.gates[j].target);
                }
    }
}

TEST_CASE("classical depth") {
    CHECK(classical_depth(Circuit(3)) == 0);
    Circuit c(3);
    c.gates = {{0, 1}, {0, 2}};
    CHECK(classical_depth(c) == 1);  // control fan-out is free
    c.gates = {{0, 1}, {1, 2}};
    CHECK(classical_depth(c) == 2);

    std::mt19937_64 rng(13);
    for (int k = 0; k < 50; ++k) {
        Circuit r = random_circuit(6, 20, rng, true);
        DepthReport rep = depth_report(r);
        CHECK(rep.classical_depth <= rep.quantum_depth);
        if (rep.gate_count > 0) CHECK(rep.gate_count >= rep.quantum_depth);
    }
}

TEST_CASE("one_way_opt") {
    Circuit single(3);
    single.gates = {{0, 1}};
    CHECK(one_way_opt(single) == single);

    Circuit c(4);
    c.gates = {{0, 1}, {0, 2}, {2, 3}};
    CHECK(quantum_depth(c) == 3);
    // depth 2 is reachable, e.g. [(0,2)], [(0,1), (2,3)]; the forward sweep
    // alone cannot reorder past the first gate, the bidirectional pass can
    Circuit o = apply_bidirectional_opt(c);
    CHECK(simulate(o) == simulate(c));
    CHECK(quantum_depth(o) == 2);
    CHECK(quantum_depth(one_way_opt(c)) <= 3);
}

TEST_CASE("opt passes preserve function and never regress") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 200; ++k) {
        Circuit c = random_circuit(8, 50, rng, true);
        Circuit f = one_way_opt(c);
        Circuit b = apply_bidirectional_opt(c);
        CHECK(simulate(f) == simulate(c));
        CHECK(simulate(b) == simulate(c));
        CHECK(f.gates.size() == c.gates.size());
        CHECK(b.gates.size() == c.gates.size());
        CHECK(quantum_depth(f) <= quantum_depth(c));
        CHECK(quantum_depth(b) <= quantum_depth(c));
    }
    CHECK(apply_bidirectional_opt(Circuit(4)) == Circuit(4));
    CHECK(quantum_depth(apply_bidirectional_opt(whirlwind_depth17_circuit())) == 17);
}

TEST_CASE("relabel") {
    Circuit c(2);
    c.gates = {{0, 1}};
    CHECK(relabel(c, Permutation::identity(2)) == c);
    Circuit r = relabel(c, Permutation({1, 0}));
    CHECK(r.gates == std::vector<Gate>{{1, 0}});

    // conjugation oracle: simulate(relabel(c, p)) = P^T . simulate(c) . P
    // for (P)_{a,b} = [b = p(a)], since each gate (i, j) becomes (p(i), p(j))
    std::mt19937_64 rng(15);
    for (int k = 0; k < 20; ++k) {
        Circuit base = random_circuit(6, 15, rng);
        std::vector<uint32_t> map{0, 1, 2, 3, 4, 5};
        std::shuffle(map.begin(), map.end(), rng);
        Permutation p(map);
        BitMatrix pm = permutation_matrix(p);
        CHECK(simulate(relabel(base, p)) ==
              naive_multiply(naive_multiply(pm.transpose(), simulate(base)), pm));
    }
}

TEST_CASE("concat") {
    Circuit a(3), b(3);
    a.gates = {{0, 1}};
    b.gates = {{1, 2}};
    b.out_perm = Permutation({2, 1, 0});
    Circuit ab = concat(a, b);
    CHECK(ab.gates == std::vector<Gate>{{0, 1}, {1, 2}});
    CHECK(ab.out_perm == b.out_perm);
    Circuit b_id = b;
    b_id.out_perm = Permutation::identity(3);
    CHECK(simulate(concat(a, b_id)) == naive_multiply(simulate(b_id), simulate(a)));
}

TEST_CASE("push_swaps") {
    using K = ElemOp::Kind;
    {
        std::vector<ElemOp> ops{{K::Swap, 0, 1}};
        auto [gates, perm] = push_swaps(ops, 2);
        CHECK(gates.empty());
        CHECK(perm.map == std::vector<uint32_t>{1, 0});
    }
    {
        std::vector<ElemOp> ops{{K::RowAdd, 2, 3}};
        auto [gates, perm] = push_swaps(ops, 4);
        CHECK(gates == std::vector<Gate>{{2, 3}});
        CHECK(perm.is_identity());
    }
    {
        // matrix-product oracle fixes the answer: the swap commutes to the
        // output side, conjugating the add into (0, 1)
        std::vector<ElemOp> ops{{K::RowAdd, 0, 1}, {K::Swap, 0, 1}};
        auto [gates, perm] = push_swaps(ops, 2);
        CHECK(gates == std::vector<Gate>{{0, 1}});
        CHECK(perm.map == std::vector<uint32_t>{1, 0});
        Circuit c(2, gates, perm);
        CHECK(simulate(c) == apply_elem_sequence(BitMatrix::identity(2), ops));
    }
    // random sequences: output reproduces the op sequence's matrix, gate
    // count equals the RowAdd count
    std::mt19937_64 rng(16);
    for (int k = 0; k < 50; ++k) {
        std::vector<ElemOp> ops;
        std::size_t adds = 0;
        for (int t = 0; t < 25; ++t) {
            uint32_t i = static_cast<uint32_t>(rng() % 6), j = static_cast<uint32_t>(rng() % 6);
            if (i == j) continue;
            if (rng() & 1) {
                ops.push_back({K::RowAdd, i, j});
                ++adds;
            } else {
                ops.push_back({K::Swap, i, j});
            }
        }
        auto [gates, perm] = push_swaps(ops, 6);
        CHECK(gates.size() == adds);
        Circuit c(6, gates, perm);
        CHECK(simulate(c) == apply_elem_sequence(BitMatrix::identity(6), ops));
    }
}
