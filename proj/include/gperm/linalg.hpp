#pragma once

#include <cstdint>
#include <vector>

#include "gperm/rational.hpp"

namespace gperm {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

/// Reduced row echelon form in place, eliminating along the fixed pivot
/// order (leftmost usable column, first nonzero row below the frontier).
/// Returns the pivot columns in order.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, ordered by column.
std::vector<RatRow> kernel(const RatMatrix& m);

/// Rank of m over the field with p elements (p prime, not dividing any
/// denominator).  Never exceeds the rational rank.
int rank_mod_p(const RatMatrix& m, uint32_t p);

/// Incremental row space: keeps inserted vectors in reduced echelon form.
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the span; true iff v added a new dimension.
  bool insert(RatRow v);
  bool contains(RatRow v) const;
  int rank() const { return (int)rows_.size(); }
  std::size_t cols() const { return cols_; }

private:
  // returns the leading column of the reduced vector, or -1 if it vanished
  int reduce(RatRow& v) const;

  std::size_t cols_;
  std::vector<RatRow> rows_;   // monic leading entries, increasing pivots
  std::vector<int> pivots_;
};

}  // namespace gperm
