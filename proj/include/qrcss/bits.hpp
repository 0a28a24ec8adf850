#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrcss {

/// Packed binary vector. Trailing padding bits of the last word are kept zero
/// so that word-level popcounts and comparisons are exact.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), w_(words_for(n), 0) {}

    static BitVector ones(size_t n);
    static BitVector unit(size_t n, size_t i);
    static BitVector from_string(std::string_view s);
    static BitVector from_indices(size_t n, std::span<const size_t> idx);
    static BitVector from_indices(size_t n, std::initializer_list<size_t> idx);

    size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector&) const = default;

    bool any() const;
    bool none() const { return !any(); }
    size_t weight() const;

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    std::string to_string() const;

    /// Concatenation (this | tail).
    BitVector concat(const BitVector& tail) const;
    /// Copy with position `pos` removed.
    BitVector erased(size_t pos) const;
    /// Copy extended by one bit at the end.
    BitVector appended(bool bit) const;

    static size_t words_for(size_t n) { return (n + 63) >> 6; }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

size_t weight(const BitVector& v);
/// |a & b| — positions where both vectors are 1. Lengths must match.
size_t overlap2(const BitVector& a, const BitVector& b);
/// |a & b & c|.
size_t overlap3(const BitVector& a, const BitVector& b, const BitVector& c);
inline bool orthogonal(const BitVector& a, const BitVector& b) {
    return (overlap2(a, b) & 1) == 0;
}

/// Row-major matrix over GF(2); all rows share the same column count.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(size_t n);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    /// One row per index list.
    static BitMatrix from_index_rows(size_t cols,
                                     std::initializer_list<std::initializer_list<size_t>> rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    const BitVector& row(size_t i) const { return rows_[i]; }
    BitVector& row(size_t i) { return rows_[i]; }
    const std::vector<BitVector>& row_data() const { return rows_; }

    void append_row(BitVector v);
    void append_rows(const BitMatrix& m);

    bool operator==(const BitMatrix&) const = default;

  private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix mat;                 // reduced row-echelon form, zero rows dropped
    std::vector<size_t> pivots;    // strictly increasing pivot columns
};

/// Deterministic reduced row-echelon form: pivots chosen lowest column first,
/// lowest row first, so results are bit-reproducible.
RrefResult rref(const BitMatrix& m);

/// RREF with a custom column priority order (used by the distance engine to
/// build systematic forms over chosen information sets). `col_order` must be
/// a permutation of 0..cols-1; pivots are reported in true column indices.
RrefResult rref_ordered(const BitMatrix& m, std::span<const size_t> col_order);

size_t rank(const BitMatrix& m);

/// Basis of { v : M v^T = 0 }, one row per free column, cols(M) - rank(M) rows.
BitMatrix kernel_basis(const BitMatrix& m);

bool rowspace_contains(const BitMatrix& m, const BitVector& v);
bool rowspace_equal(const BitMatrix& a, const BitMatrix& b);

/// Precomputed echelon form for repeated span-membership queries.
class SpanReducer {
  public:
    SpanReducer() = default;
    explicit SpanReducer(const BitMatrix& m);

    size_t rank() const { return rows_.rows(); }
    size_t cols() const { return rows_.cols(); }
    /// Remainder of v after elimination against the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const;

  private:
    BitMatrix rows_;               // rref rows
    std::vector<size_t> pivots_;
};

}  // namespace qrcss
