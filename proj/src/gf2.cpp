#include "circsynth/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace circsynth {

Permutation Permutation::identity(std::size_t n) {
    std::vector<uint32_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<uint32_t>(i);
    return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != i) return false;
    return true;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(map.size(), false);
    for (uint32_t v : map) {
        if (v >= map.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> inv(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<uint32_t>(i);
    return Permutation(std::move(inv));
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w)
        std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < n_; ++r) w += get(r, c);
    return w;
}

std::size_t BitMatrix::weight() const {
    std::size_t w = 0;
    for (uint64_t x : bits_) w += std::popcount(x);
    return w;
}

bool BitMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](uint64_t x) { return x == 0; });
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t w = 0; w < words_; ++w) {
            uint64_t x = bits_[r * words_ + w];
            while (x) {
                unsigned b = std::countr_zero(x);
                x &= x - 1;
                t.set(w * 64 + b, r, true);
            }
        }
    return t;
}

BitMatrix BitMatrix::multiply(const BitMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch");
    BitMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t w = 0; w < words_; ++w) {
            uint64_t x = bits_[r * words_ + w];
            while (x) {
                unsigned b = std::countr_zero(x);
                x &= x - 1;
                auto d = out.row(r);
                auto s = rhs.row(w * 64 + b);
                for (std::size_t k = 0; k < d.size(); ++k) d[k] ^= s[k];
            }
        }
    return out;
}

BitMatrix BitMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t size) const {
    BitMatrix s(size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
            if (get(r0 + r, c0 + c)) s.set(r, c, true);
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return a.multiply(b); }

static void check_pair(const BitMatrix& m, std::size_t src, std::size_t dst) {
    if (src >= m.dim() || dst >= m.dim()) throw std::out_of_range("row/col index out of range");
    if (src == dst) throw std::invalid_argument("src and dst must differ");
}

BitMatrix row_add(const BitMatrix& m, std::size_t src, std::size_t dst) {
    check_pair(m, src, dst);
    BitMatrix out = m;
    out.row_xor(dst, src);
    return out;
}

BitMatrix col_add(const BitMatrix& m, std::size_t src, std::size_t dst) {
    check_pair(m, src, dst);
    BitMatrix out = m;
    out.col_xor(dst, src);
    return out;
}

BitMatrix inverse(const BitMatrix& m) {
    const std::size_t n = m.dim();
    BitMatrix a = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !a.get(piv, col)) ++piv;
        if (piv == n) throw SingularMatrix();
        a.swap_rows(col, piv);
        inv.swap_rows(col, piv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && a.get(r, col)) {
                a.row_xor(r, col);
                inv.row_xor(r, col);
            }
        }
    }
    return inv;
}

std::optional<Permutation> is_permutation(const BitMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<uint32_t> map(n);
    std::vector<bool> col_seen(n, false);
    for (std::size_t r = 0; r < n; ++r) {
        if (m.row_weight(r) != 1) return std::nullopt;
        std::size_t c = 0;
        while (!m.get(r, c)) ++c;
        if (col_seen[c]) return std::nullopt;
        col_seen[c] = true;
        map[r] = static_cast<uint32_t>(c);
    }
    return Permutation(std::move(map));
}

bool is_block_circulant(const BitMatrix& m, std::size_t block_size) {
    const std::size_t n = m.dim();
    if (block_size == 0 || n % block_size != 0) return false;
    const std::size_t t = n / block_size;
    for (std::size_t bi = 0; bi < t; ++bi)
        for (std::size_t bj = 0; bj < t; ++bj) {
            const std::size_t pi = (bi + t - 1) % t;
            const std::size_t pj = (bj + t - 1) % t;
            for (std::size_t r = 0; r < block_size; ++r)
                for (std::size_t c = 0; c < block_size; ++c)
                    if (m.get(bi * block_size + r, bj * block_size + c) !=
                        m.get(pi * block_size + r, pj * block_size + c))
                        return false;
        }
    return true;
}

std::optional<unsigned> min_circulant_block_exponent(const BitMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0 || (n & (n - 1)) != 0) throw NotPowerOfTwo(n);
    unsigned log_n = static_cast<unsigned>(std::countr_zero(n));
    for (unsigned b = 0; b < log_n; ++b)
        if (is_block_circulant(m, std::size_t{1} << b)) return b;
    return std::nullopt;
}

BitMatrix apply_elem_sequence(const BitMatrix& m, std::span<const ElemOp> ops) {
    BitMatrix out = m;
    for (const ElemOp& op : ops) {
        check_pair(out, op.src, op.dst);
        switch (op.kind) {
            case ElemOp::Kind::RowAdd:
                out.row_xor(op.dst, op.src);
                break;
            case ElemOp::Kind::ColAdd:
                out.col_xor(op.dst, op.src);
                break;
            case ElemOp::Kind::Swap:
                out.swap_rows(op.src, op.dst);
                break;
        }
    }
    return out;
}

BitMatrix permutation_matrix(const Permutation& p) {
    BitMatrix m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m.set(i, p.map[i], true);
    return m;
}

}  // namespace circsynth
