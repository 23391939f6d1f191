#ifndef CRN_MATRIX_HPP
#define CRN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

using RatVec = std::vector<Rational>;

/// Incremental row space over the rationals, kept in row-echelon form by
/// exact Gaussian elimination. Feeds the rank trials, the closure admission
/// test and the spanning-subset certificates.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of the rows seen so far.
  /// Returns true exactly when the rank grew.
  bool insert(const RatVec& v);

  /// True when v already lies in the span.
  bool contains(const RatVec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  std::size_t dimension() const { return dim_; }

 private:
  RatVec reduce(RatVec v) const;

  std::size_t dim_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact rank of a set of rational vectors of the given dimension.
int rank_of(const std::vector<RatVec>& vectors, std::size_t dim);

/// Exact rank of an integer matrix via Bareiss fraction-free elimination.
/// No floating point anywhere.
int integer_rank(std::vector<std::vector<BigInt>> m);

}  // namespace crn

#endif
