#include "qrcss/bits.hpp"

#include <bit>
#include <stdexcept>

namespace qrcss {

BitVector BitVector::ones(size_t n) {
    BitVector v(n);
    for (auto& w : v.w_) w = ~uint64_t(0);
    if (n & 63) v.w_.back() &= (uint64_t(1) << (n & 63)) - 1;
    return v;
}

BitVector BitVector::unit(size_t n, size_t i) {
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
    }
    return v;
}

BitVector BitVector::from_indices(size_t n, std::span<const size_t> idx) {
    BitVector v(n);
    for (size_t i : idx) {
        if (i >= n) throw std::out_of_range("BitVector::from_indices");
        v.set(i, true);
    }
    return v;
}

BitVector BitVector::from_indices(size_t n, std::initializer_list<size_t> idx) {
    return from_indices(n, std::span<const size_t>(idx.begin(), idx.size()));
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVector: length mismatch");
    for (size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

size_t BitVector::weight() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++)
        if (get(i)) s[i] = '1';
    return s;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector r(n_ + tail.n_);
    for (size_t i = 0; i < n_; i++)
        if (get(i)) r.set(i, true);
    for (size_t i = 0; i < tail.n_; i++)
        if (tail.get(i)) r.set(n_ + i, true);
    return r;
}

BitVector BitVector::erased(size_t pos) const {
    if (pos >= n_) throw std::out_of_range("BitVector::erased");
    BitVector r(n_ - 1);
    for (size_t i = 0; i < n_; i++) {
        if (i == pos) continue;
        if (get(i)) r.set(i < pos ? i : i - 1, true);
    }
    return r;
}

BitVector BitVector::appended(bool bit) const {
    BitVector r(n_ + 1);
    for (size_t i = 0; i < n_; i++)
        if (get(i)) r.set(i, true);
    r.set(n_, bit);
    return r;
}

size_t weight(const BitVector& v) { return v.weight(); }

size_t overlap2(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("overlap2: length mismatch");
    auto wa = a.words(), wb = b.words();
    size_t c = 0;
    for (size_t i = 0; i < wa.size(); i++) c += std::popcount(wa[i] & wb[i]);
    return c;
}

size_t overlap3(const BitVector& a, const BitVector& b, const BitVector& c) {
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("overlap3: length mismatch");
    auto wa = a.words(), wb = b.words(), wc = c.words();
    size_t r = 0;
    for (size_t i = 0; i < wa.size(); i++) r += std::popcount(wa[i] & wb[i] & wc[i]);
    return r;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) m.row(i).set(i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    BitMatrix m;
    for (auto s : rows) m.append_row(BitVector::from_string(s));
    return m;
}

BitMatrix BitMatrix::from_index_rows(size_t cols,
                                     std::initializer_list<std::initializer_list<size_t>> rows) {
    BitMatrix m(0, cols);
    for (auto& r : rows) m.append_row(BitVector::from_indices(cols, r));
    return m;
}

void BitMatrix::append_row(BitVector v) {
    if (rows_.empty() && cols_ == 0)
        cols_ = v.size();
    else if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    rows_.push_back(std::move(v));
}

void BitMatrix::append_rows(const BitMatrix& m) {
    for (size_t i = 0; i < m.rows(); i++) append_row(m.row(i));
}

RrefResult rref(const BitMatrix& m) {
    std::vector<size_t> order(m.cols());
    for (size_t i = 0; i < order.size(); i++) order[i] = i;
    return rref_ordered(m, order);
}

RrefResult rref_ordered(const BitMatrix& m, std::span<const size_t> col_order) {
    std::vector<BitVector> rows = m.row_data();
    std::vector<size_t> pivots;
    size_t next = 0;  // next row position to fill
    for (size_t c : col_order) {
        size_t hit = rows.size();
        for (size_t r = next; r < rows.size(); r++) {
            if (rows[r].get(c)) {
                hit = r;
                break;
            }
        }
        if (hit == rows.size()) continue;
        std::swap(rows[next], rows[hit]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        }
        pivots.push_back(c);
        next++;
        if (next == rows.size()) break;
    }
    RrefResult res;
    res.mat = BitMatrix(0, m.cols());
    for (size_t r = 0; r < next; r++) res.mat.append_row(std::move(rows[r]));
    res.pivots = std::move(pivots);
    return res;
}

size_t rank(const BitMatrix& m) { return rref(m).mat.rows(); }

BitMatrix kernel_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    BitMatrix basis(0, n);
    for (size_t c = 0; c < n; c++) {
        if (is_pivot[c]) continue;
        BitVector v(n);
        v.set(c, true);
        for (size_t r = 0; r < rr.pivots.size(); r++)
            if (rr.mat.row(r).get(c)) v.set(rr.pivots[r], true);
        basis.append_row(std::move(v));
    }
    return basis;
}

bool rowspace_contains(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("rowspace_contains: length mismatch");
    return SpanReducer(m).contains(v);
}

bool rowspace_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_equal: length mismatch");
    // rref is a canonical form: equal spans iff identical rref
    return rref(a).mat == rref(b).mat;
}

SpanReducer::SpanReducer(const BitMatrix& m) {
    RrefResult rr = rref(m);
    rows_ = std::move(rr.mat);
    pivots_ = std::move(rr.pivots);
}

BitVector SpanReducer::reduce(BitVector v) const {
    for (size_t i = 0; i < pivots_.size(); i++)
        if (v.get(pivots_[i])) v ^= rows_.row(i);
    return v;
}

bool SpanReducer::contains(const BitVector& v) const { return reduce(v).none(); }

}  // namespace qrcss
