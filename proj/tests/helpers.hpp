#pragma once

#include <random>

#include "circsynth/circuit.hpp"
#include "circsynth/gf2.hpp"

namespace circsynth::testing {

inline BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    BitMatrix m(rows.size());
    std::size_t r = 0;
    for (auto& row : rows) {
        std::size_t c = 0;
        for (int v : row) m.set(r, c++, v != 0);
        ++r;
    }
    return m;
}

inline BitMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    BitMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
    return m;
}

/// Random invertible matrix: identity scrambled by random row/col adds.
inline BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    BitMatrix m = BitMatrix::identity(n);
    for (std::size_t k = 0; k < 3 * n; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        if (rng() & 1)
            m.row_xor(j, i);
        else
            m.col_xor(j, i);
    }
    return m;
}

/// Random invertible block-circulant matrix with blocks of size 2^b.
inline BitMatrix random_block_circulant(std::size_t n, std::size_t block_size,
                                        std::mt19937_64& rng) {
    const std::size_t t = n / block_size;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<BitMatrix> word;
        for (std::size_t k = 0; k < t; ++k) word.push_back(random_matrix(block_size, rng));
        BitMatrix m(n);
        for (std::size_t br = 0; br < t; ++br)
            for (std::size_t bc = 0; bc < t; ++bc) {
                const BitMatrix& blk = word[(bc + t - br) % t];
                for (std::size_t r = 0; r < block_size; ++r)
                    for (std::size_t c = 0; c < block_size; ++c)
                        if (blk.get(r, c)) m.set(br * block_size + r, bc * block_size + c, true);
            }
        try {
            (void)inverse(m);
            return m;
        } catch (const SingularMatrix&) {
        }
    }
    throw std::runtime_error("no invertible block-circulant sample found");
}

inline Circuit random_circuit(uint32_t width, std::size_t gates, std::mt19937_64& rng,
                              bool random_perm = false) {
    Circuit c(width);
    for (std::size_t k = 0; k < gates; ++k) {
        uint32_t a = static_cast<uint32_t>(rng() % width);
        uint32_t b = static_cast<uint32_t>(rng() % width);
        if (a == b) b = (b + 1) % width;
        c.gates.push_back({a, b});
    }
    if (random_perm) {
        std::vector<uint32_t> map(width);
        for (uint32_t i = 0; i < width; ++i) map[i] = i;
        std::shuffle(map.begin(), map.end(), rng);
        c.out_perm = Permutation(std::move(map));
    }
    return c;
}

/// Naive O(n^3) product oracle, independent of BitMatrix::multiply.
inline BitMatrix naive_multiply(const BitMatrix& a, const BitMatrix& b) {
    const std::size_t n = a.dim();
    BitMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool v = false;
            for (std::size_t k = 0; k < n; ++k) v ^= a.get(i, k) && b.get(k, j);
            out.set(i, j, v);
        }
    return out;
}

}  // namespace circsynth::testing
