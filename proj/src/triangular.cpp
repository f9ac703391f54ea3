#include "circsynth/triangular.hpp"

#include <algorithm>

namespace circsynth {

bool is_unit_upper_triangular(const BitMatrix& m) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.get(i, i)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m.get(i, j)) return false;
    }
    return true;
}

std::vector<std::vector<Gate>> elimination_rounds(const BitMatrix& m) {
    if (!is_unit_upper_triangular(m)) throw NotUnitUpperTriangular();
    const std::size_t n = m.dim();
    BitMatrix work = m;
    std::vector<std::vector<Gate>> rounds;

    auto is_unit_row = [&](std::size_t i) { return work.row_weight(i) == 1; };

    while (work != BitMatrix::identity(n)) {
        std::vector<uint8_t> in_s(n, 0);
        for (std::size_t i = 0; i < n; ++i) in_s[i] = is_unit_row(i) ? 1 : 0;
        std::vector<uint8_t> used(n, 0);
        std::vector<Gate> round;
        std::size_t before = work.weight();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || in_s[j]) continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (!in_s[i] || used[i] || i == j || !work.get(j, i)) continue;
                work.row_xor(j, i);
                round.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
                used[i] = used[j] = 1;
                break;
            }
        }
        // a unit row always exists (last nontrivial column), so progress is guaranteed
        if (round.empty() || work.weight() >= before) throw NotUnitUpperTriangular();
        rounds.push_back(std::move(round));
    }
    return rounds;
}

Circuit synth_unit_upper_triangular(const BitMatrix& m) {
    auto rounds = elimination_rounds(m);
    Circuit c(static_cast<uint32_t>(m.dim()));
    for (auto rit = rounds.rbegin(); rit != rounds.rend(); ++rit)
        for (auto git = rit->rbegin(); git != rit->rend(); ++git) c.gates.push_back(*git);
    return c;
}

BitMatrix xtime_block() {
    // y = x * a in GF(2^8) mod x^8+x^4+x^3+x+1, bit 0 = coefficient of x^0;
    // row r of the block is the linear form of output bit r.
    BitMatrix b(8);
    b.set(0, 7, true);
    b.set(1, 0, true);
    b.set(1, 7, true);
    b.set(2, 1, true);
    b.set(3, 2, true);
    b.set(3, 7, true);
    b.set(4, 3, true);
    b.set(4, 7, true);
    b.set(5, 4, true);
    b.set(6, 5, true);
    b.set(7, 6, true);
    return b;
}

namespace {

void place_block(BitMatrix& m, std::size_t br, std::size_t bc, const BitMatrix& blk) {
    for (std::size_t r = 0; r < blk.dim(); ++r)
        for (std::size_t c = 0; c < blk.dim(); ++c)
            if (blk.get(r, c)) m.set(br * blk.dim() + r, bc * blk.dim() + c, true);
}

}  // namespace

BitMatrix build_mixcolumn_triangular() {
    BitMatrix one = BitMatrix::identity(8);
    BitMatrix two = xtime_block();
    BitMatrix m(32);
    // block rows: [01 02 00 01; 00 01 02 00; 00 00 01 02; 00 00 00 01]
    place_block(m, 0, 0, one);
    place_block(m, 0, 1, two);
    place_block(m, 0, 3, one);
    place_block(m, 1, 1, one);
    place_block(m, 1, 2, two);
    place_block(m, 2, 2, one);
    place_block(m, 2, 3, two);
    place_block(m, 3, 3, one);
    return m;
}

BitMatrix build_aes_mixcolumn() {
    BitMatrix one = BitMatrix::identity(8);
    BitMatrix two = xtime_block();
    BitMatrix three = two;  // 03 = 01 xor 02
    for (std::size_t r = 0; r < 8; ++r) three.flip(r, r);
    const BitMatrix* word[4] = {&two, &three, &one, &one};
    BitMatrix m(32);
    for (std::size_t br = 0; br < 4; ++br)
        for (std::size_t bc = 0; bc < 4; ++bc) place_block(m, br, bc, *word[(bc + 4 - br) % 4]);
    return m;
}

}  // namespace circsynth
