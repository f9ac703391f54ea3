#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circsynth/errors.hpp"
#include "circsynth/triangular.hpp"
#include "helpers.hpp"

using namespace circsynth;
using namespace circsynth::testing;

namespace {

BitMatrix random_unit_upper(std::size_t n, std::mt19937_64& rng) {
    BitMatrix m = BitMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) m.set(r, c, rng() & 1);
    return m;
}

}  // namespace

TEST_CASE("is_unit_upper_triangular") {
    CHECK(is_unit_upper_triangular(BitMatrix::identity(4)));
    CHECK(is_unit_upper_triangular(from_rows({{1, 1}, {0, 1}})));
    CHECK_FALSE(is_unit_upper_triangular(from_rows({{1, 0}, {1, 1}})));
    CHECK_FALSE(is_unit_upper_triangular(from_rows({{0, 1}, {1, 0}})));
}

TEST_CASE("elimination on tiny instances") {
    CHECK(elimination_rounds(BitMatrix::identity(4)).empty());
    CHECK(synth_unit_upper_triangular(BitMatrix::identity(4)) == Circuit(4));

    BitMatrix e = from_rows({{1, 1}, {0, 1}});
    Circuit c = synth_unit_upper_triangular(e);
    CHECK(c.gates == std::vector<Gate>{{1, 0}});
    CHECK(c.out_perm.is_identity());
    CHECK(simulate(c) == e);

    BitMatrix m3 = from_rows({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    auto rounds = elimination_rounds(m3);
    std::vector<Gate> flat;
    for (const auto& r : rounds) flat.insert(flat.end(), r.begin(), r.end());
    Circuit c3 = synth_unit_upper_triangular(m3);
    CHECK(c3.gates == std::vector<Gate>(flat.rbegin(), flat.rend()));
    CHECK(simulate(c3) == m3);

    CHECK_THROWS_AS((void)elimination_rounds(from_rows({{1, 0}, {1, 1}})),
                    NotUnitUpperTriangular);
}

TEST_CASE("rounds are wire-disjoint and strictly reduce the matrix") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 30; ++k) {
        BitMatrix m = random_unit_upper(12, rng);
        auto rounds = elimination_rounds(m);
        BitMatrix cur = m;
        for (const auto& round : rounds) {
            CHECK_FALSE(round.empty());
            std::vector<bool> used(12, false);
            for (const Gate& g : round) {
                CHECK_FALSE(used[g.control]);
                CHECK_FALSE(used[g.target]);
                used[g.control] = used[g.target] = true;
            }
            std::size_t before = cur.weight();
            for (const Gate& g : round) cur = row_add(cur, g.control, g.target);
            CHECK(cur.weight() < before);
        }
        CHECK(cur == BitMatrix::identity(12));
        CHECK(simulate(synth_unit_upper_triangular(m)) == m);
    }
}

TEST_CASE("xtime block") {
    BitMatrix x = xtime_block();
    // multiplication by x: shift, then reduce with x^8 = x^4 + x^3 + x + 1
    CHECK(x == from_rows({{0, 0, 0, 0, 0, 0, 0, 1},
                          {1, 0, 0, 0, 0, 0, 0, 1},
                          {0, 1, 0, 0, 0, 0, 0, 0},
                          {0, 0, 1, 0, 0, 0, 0, 1},
                          {0, 0, 0, 1, 0, 0, 0, 1},
                          {0, 0, 0, 0, 1, 0, 0, 0},
                          {0, 0, 0, 0, 0, 1, 0, 0},
                          {0, 0, 0, 0, 0, 0, 1, 0}}));
    // x^8 picks up the reduction polynomial's low byte 0x1b
    BitMatrix p = x;
    for (int k = 1; k < 8; ++k) p = p * x;
    for (std::size_t r = 0; r < 8; ++r)
        CHECK(p.get(r, 0) == ((0x1b >> r) & 1));
}

TEST_CASE("mixcolumn triangular instance") {
    BitMatrix t = build_mixcolumn_triangular();
    CHECK(t.dim() == 32);
    CHECK(is_unit_upper_triangular(t));
    // block row 0: [01 02 00 01]
    BitMatrix x = xtime_block();
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            CHECK(t.get(r, c) == (r == c));
            CHECK(t.get(r, 8 + c) == x.get(r, c));
            CHECK_FALSE(t.get(r, 16 + c));
            CHECK(t.get(r, 24 + c) == (r == c));
        }
    Circuit c = synth_unit_upper_triangular(t);
    CHECK(simulate(c) == t);
}

TEST_CASE("aes mixcolumn matrix") {
    BitMatrix m = build_aes_mixcolumn();
    CHECK(m.dim() == 32);
    CHECK(min_circulant_block_exponent(m) == 3u);
    CHECK_NOTHROW((void)inverse(m));

    BitMatrix two = xtime_block();
    BitMatrix three = two;
    for (std::size_t r = 0; r < 8; ++r) three.flip(r, r);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            CHECK(m.get(r, c) == two.get(r, c));         // block (0,0) = 02
            CHECK(m.get(r, 8 + c) == three.get(r, c));   // block (0,1) = 03
            CHECK(m.get(r, 16 + c) == (r == c));         // 01
            CHECK(m.get(8 + r, 8 + c) == two.get(r, c)); // circulant shift
        }
}
