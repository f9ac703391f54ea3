#include "circsynth/fixtures.hpp"

#include <iterator>

namespace circsynth {

namespace {
#include "fixtures_data.inc"

Circuit from_table(std::span<const Gate> gates, std::span<const uint32_t> perm) {
    Circuit c(32);
    c.gates.assign(gates.begin(), gates.end());
    c.out_perm = Permutation(std::vector<uint32_t>(perm.begin(), perm.end()));
    return c;
}

}  // namespace

Circuit whirlwind_depth17_circuit() {
    return from_table({kDepth17Gates, std::size(kDepth17Gates)},
                      {kDepth17Perm, std::size(kDepth17Perm)});
}

Circuit whirlwind_xor159_circuit() {
    return from_table({kXor159Gates, std::size(kXor159Gates)},
                      {kXor159Perm, std::size(kXor159Perm)});
}

BitMatrix whirlwind_m0() {
    BitMatrix a = simulate(whirlwind_depth17_circuit());
    BitMatrix b = simulate(whirlwind_xor159_circuit());
    if (a != b) throw FixtureMismatch("Whirlwind M0 reference listings disagree");
    return a;
}

}  // namespace circsynth
