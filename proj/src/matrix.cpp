#include "crn/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace crn {

RatVec RowSpace::reduce(RatVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& lead = v[pivots_[r]];
    if (lead == 0) continue;
    Rational factor = lead / rows_[r][pivots_[r]];
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= factor * rows_[r][j];
  }
  return v;
}

bool RowSpace::insert(const RatVec& v) {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  RatVec red = reduce(v);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (red[j] != 0) {
      rows_.push_back(std::move(red));
      pivots_.push_back(j);
      return true;
    }
  }
  return false;
}

bool RowSpace::contains(const RatVec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  RatVec red = reduce(v);
  for (const Rational& c : red)
    if (c != 0) return false;
  return true;
}

int rank_of(const std::vector<RatVec>& vectors, std::size_t dim) {
  RowSpace space(dim);
  for (const RatVec& v : vectors) space.insert(v);
  return space.rank();
}

int integer_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  BigInt prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        // Bareiss update: the division by the previous pivot is exact.
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace crn
