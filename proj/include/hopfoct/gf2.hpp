#pragma once
// Dense GF(2) linear algebra on word-packed rows.
// Row-reduction keeps pivot columns sorted ascending; all solvers are exact.

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

namespace hopfoct {

class GF2Matrix {
public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    assert(r < rows_ && c < cols_);
    std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (v)
      data_[r * words_ + c / 64] |= m;
    else
      data_[r * words_ + c / 64] &= ~m;
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  void xorRow(std::size_t dst, std::size_t src) {
    std::uint64_t* d = &data_[dst * words_];
    const std::uint64_t* s = &data_[src * words_];
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  }
  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w)
      std::swap(data_[a * words_ + w], data_[b * words_ + w]);
  }
  bool rowZero(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (data_[r * words_ + w]) return false;
    return true;
  }

  // Reduced row echelon form in place; returns pivot column per pivot row.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t r = row; r < rows_; ++r)
        if (get(r, col)) { sel = r; break; }
      if (sel == rows_) continue;
      swapRows(sel, row);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != row && get(r, col)) xorRow(r, row);
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    GF2Matrix m = *this;
    return m.rref().size();
  }

  // Basis of the right kernel, one vector (length cols) per row of result.
  std::vector<std::vector<bool>> kernelBasis() const {
    GF2Matrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> isPivot(cols_, false);
    for (std::size_t p : pivots) isPivot[p] = true;
    std::vector<std::vector<bool>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (isPivot[c]) continue;
      std::vector<bool> v(cols_, false);
      v[c] = true;
      for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        if (m.get(pr, c)) v[pivots[pr]] = true;
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solve M x = b; returns one solution or nullopt if inconsistent.
  std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const {
    assert(b.size() == rows_);
    GF2Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t w = 0; w < words_; ++w)
        aug.data_[r * aug.words_ + w] = data_[r * words_ + w];
      if (b[r]) aug.set(r, cols_, true);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<bool> x(cols_, false);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      if (aug.get(pr, cols_)) x[pivots[pr]] = true;
    return x;
  }

private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

// Incremental echelon basis: feed vectors, query membership in their span.
class GF2Span {
public:
  explicit GF2Span(std::size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Reduce v against the stored echelon rows; returns the residue.
  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if ((v[pivot_[i] / 64] >> (pivot_[i] % 64)) & 1u)
        for (std::size_t w = 0; w < words_; ++w) v[w] ^= rows_[i][w];
    return v;
  }

  bool contains(const std::vector<bool>& vec) const {
    std::vector<std::uint64_t> v = pack(vec);
    v = reduce(std::move(v));
    for (std::uint64_t w : v)
      if (w) return false;
    return true;
  }

  // Insert if independent; returns true when the span grew.
  bool insert(const std::vector<bool>& vec) {
    std::vector<std::uint64_t> v = reduce(pack(vec));
    std::size_t piv = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((v[c / 64] >> (c % 64)) & 1u) { piv = c; break; }
    if (piv == cols_) return false;
    // Keep echelon rows mutually reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if ((rows_[i][piv / 64] >> (piv % 64)) & 1u)
        for (std::size_t w = 0; w < words_; ++w) rows_[i][w] ^= v[w];
    std::size_t at = 0;
    while (at < pivot_.size() && pivot_[at] < piv) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivot_.insert(pivot_.begin() + at, piv);
    return true;
  }

private:
  std::vector<std::uint64_t> pack(const std::vector<bool>& vec) const {
    assert(vec.size() == cols_);
    std::vector<std::uint64_t> v(words_, 0);
    for (std::size_t c = 0; c < cols_; ++c)
      if (vec[c]) v[c / 64] |= std::uint64_t{1} << (c % 64);
    return v;
  }

  std::size_t cols_, words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivot_;
};

// Binomial coefficient parity by Lucas: C(a+b, a) odd iff a & b == 0.
inline bool binomialOdd(std::uint64_t n, std::uint64_t k) {
  return k <= n && ((n - k) & k) == 0;
}

}  // namespace hopfoct
