#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "circsynth/cost.hpp"
#include "circsynth/errors.hpp"
#include "helpers.hpp"

using namespace circsynth;
using namespace circsynth::testing;

namespace {

// direct transcription of the definitions, independent of the implementation
double ref_h_sum(const BitMatrix& m) {
    double s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) s += m.get(r, c) ? 1 : 0;
    return s;
}

double ref_h_prod(const BitMatrix& m) {
    double s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        double w = 0;
        for (std::size_t c = 0; c < m.dim(); ++c) w += m.get(r, c) ? 1 : 0;
        s += std::log2(w);
    }
    return s;
}

double ref_h_sq(const BitMatrix& m) {
    double s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        double w = 0;
        for (std::size_t c = 0; c < m.dim(); ++c) w += m.get(r, c) ? 1 : 0;
        s += w * w;
    }
    return s;
}

double ref_cost(const BitMatrix& m, CostKind kind) {
    BitMatrix inv = inverse(m);
    BitMatrix mt = m.transpose(), it = inv.transpose();
    switch (kind) {
        case CostKind::HSum:
            return ref_h_sum(m) + ref_h_sum(inv);
        case CostKind::HProdPair:
            return std::max(ref_h_prod(m) + ref_h_prod(it), ref_h_prod(mt) + ref_h_prod(inv));
        case CostKind::HSqPair:
            return std::max(ref_h_sq(m) + ref_h_sq(it), ref_h_sq(mt) + ref_h_sq(inv));
    }
    return 0;
}

}  // namespace

TEST_CASE("row metrics on small matrices") {
    BitMatrix i4 = BitMatrix::identity(4);
    CHECK(h_sum(i4) == 4.0);
    CHECK(h_prod(i4) == 0.0);
    CHECK(h_sq(i4) == 4.0);

    BitMatrix ones = from_rows({{1, 1}, {1, 1}});
    CHECK(h_sum(ones) == 4.0);
    CHECK(h_prod(ones) == 2.0);
    CHECK(h_sq(ones) == 8.0);

    CHECK_THROWS_AS((void)h_prod(from_rows({{1, 0}, {0, 0}})), ZeroRow);
}

TEST_CASE("composite cost on fixed inputs") {
    BitMatrix i8 = BitMatrix::identity(8);
    CHECK(cost(i8, CostKind::HSum) == 16.0);
    CHECK(cost(i8, CostKind::HProdPair) == 0.0);
    CHECK(cost(i8, CostKind::HSqPair) == 16.0);

    BitMatrix e = from_rows({{1, 0}, {1, 1}});  // its own inverse
    CHECK(cost(e, CostKind::HSum) == 6.0);

    // permutations cost nothing under the product metric
    std::mt19937_64 rng(31);
    std::vector<uint32_t> map{0, 1, 2, 3, 4, 5};
    std::shuffle(map.begin(), map.end(), rng);
    CHECK(cost(permutation_matrix(Permutation(map)), CostKind::HProdPair) == 0.0);
}

TEST_CASE("cost is symmetric in M and its inverse") {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 30; ++k) {
        BitMatrix m = random_invertible(10, rng);
        BitMatrix inv = inverse(m);
        for (CostKind kind : {CostKind::HSum, CostKind::HProdPair, CostKind::HSqPair})
            CHECK(cost(m, kind) == doctest::Approx(cost(inv, kind)).epsilon(1e-12));
    }
}

TEST_CASE("cost matches the direct transcription") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 100; ++k) {
        BitMatrix m = random_invertible(8, rng);
        for (CostKind kind : {CostKind::HSum, CostKind::HProdPair, CostKind::HSqPair})
            CHECK(cost(m, kind) == doctest::Approx(ref_cost(m, kind)).epsilon(1e-12));
    }
}

TEST_CASE("precomputed-inverse overload agrees") {
    std::mt19937_64 rng(34);
    BitMatrix m = random_invertible(12, rng);
    BitMatrix inv = inverse(m);
    for (CostKind kind : {CostKind::HSum, CostKind::HProdPair, CostKind::HSqPair})
        CHECK(cost(m, inv, kind) == cost(m, kind));
}

TEST_CASE("cost kind names") {
    CHECK(std::string(cost_kind_name(CostKind::HSum)) == "sum");
    CHECK(std::string(cost_kind_name(CostKind::HProdPair)) == "prod");
    CHECK(std::string(cost_kind_name(CostKind::HSqPair)) == "sq");
}
