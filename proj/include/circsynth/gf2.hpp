#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "circsynth/errors.hpp"

namespace circsynth {

/// Output-wire relabeling: map[i] is the wire carrying output i.
struct Permutation {
    std::vector<uint32_t> map;

    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> m) : map(std::move(m)) {}
    static Permutation identity(std::size_t n);

    std::size_t size() const { return map.size(); }
    uint32_t operator()(std::size_t i) const { return map[i]; }
    bool is_identity() const;
    bool is_valid() const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
};

struct ElemOp {
    enum class Kind { RowAdd, ColAdd, Swap };
    Kind kind;
    uint32_t src;
    uint32_t dst;

    bool operator==(const ElemOp&) const = default;
};

/// Square GF(2) matrix, rows packed into 64-bit words (bit c of a row word
/// group is column c, LSB first).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_(word_count(n)), bits_(n * words_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t& w = bits_[r * words_ + c / 64];
        if (v)
            w |= uint64_t{1} << (c % 64);
        else
            w &= ~(uint64_t{1} << (c % 64));
    }
    void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= uint64_t{1} << (c % 64); }

    std::span<const uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }
    std::span<uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

    /// rows[dst] ^= rows[src], in place.
    void row_xor(std::size_t dst, std::size_t src) {
        uint64_t* d = bits_.data() + dst * words_;
        const uint64_t* s = bits_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }
    /// col dst ^= col src, in place (bit addressing, one flip per set row bit).
    void col_xor(std::size_t dst, std::size_t src) {
        const std::size_t sw = src / 64, sb = src % 64;
        const uint64_t dm = uint64_t{1} << (dst % 64);
        const std::size_t dw = dst / 64;
        for (std::size_t r = 0; r < n_; ++r) {
            uint64_t* base = bits_.data() + r * words_;
            base[dw] ^= ((base[sw] >> sb) & 1u) ? dm : 0u;
        }
    }
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const {
        std::size_t w = 0;
        for (std::size_t k = 0; k < words_; ++k) w += std::popcount(bits_[r * words_ + k]);
        return w;
    }
    std::size_t col_weight(std::size_t c) const;
    std::size_t weight() const;

    bool is_zero() const;
    BitMatrix transpose() const;
    BitMatrix multiply(const BitMatrix& rhs) const;
    /// 2^b x 2^b submatrix with top-left corner at (r0, c0).
    BitMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t size) const;

    bool operator==(const BitMatrix&) const = default;

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<uint64_t> bits_;
};

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

/// Left-multiplication by E(dst + src): row dst ^= row src.
BitMatrix row_add(const BitMatrix& m, std::size_t src, std::size_t dst);
/// Right-multiplication by E(src + dst): col dst ^= col src.
BitMatrix col_add(const BitMatrix& m, std::size_t src, std::size_t dst);

BitMatrix inverse(const BitMatrix& m);  // throws SingularMatrix

std::optional<Permutation> is_permutation(const BitMatrix& m);

/// Smallest b < log2(n) such that m is circulant when viewed as blocks of
/// size 2^b. Empty when only the trivial 1x1 blocking works.
std::optional<unsigned> min_circulant_block_exponent(const BitMatrix& m);

bool is_block_circulant(const BitMatrix& m, std::size_t block_size);

BitMatrix apply_elem_sequence(const BitMatrix& m, std::span<const ElemOp> ops);

BitMatrix permutation_matrix(const Permutation& p);

}  // namespace circsynth
