#pragma once

#include <cstddef>
#include <vector>

#include "bbgkit/rational.hpp"

namespace bbg {

// Matrices are stored as lists of rows; the column count is passed explicitly
// so that matrices with zero rows still carry their shape.
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<IntegerVector>;

struct RowEchelon {
  RationalMatrix rows;         // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t cols = 0;
};

RowEchelon row_reduce(RationalMatrix m, std::size_t cols);
std::size_t rank(const RationalMatrix& m, std::size_t cols);

// Basis of {x : m x = 0}, one vector per free column, in RREF-derived form.
RationalMatrix null_space(const RationalMatrix& m, std::size_t cols);

// True iff v is a linear combination of the rows of the echelon form.
bool in_row_space(const RowEchelon& e, const RationalVector& v);

RationalMatrix to_rational(const IntegerMatrix& m);

struct SmithForm {
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // nonzero invariant factors, each dividing the next
};

SmithForm smith_normal_form(IntegerMatrix m, std::size_t cols);

// Sublattice of Z^n kept in row echelon form. Used to decide integral
// membership, e.g. whether a 1-cycle is an integral boundary.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t dim) : dim_(dim) {}

  void add(IntegerVector v);
  bool contains(IntegerVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<IntegerVector> rows_;  // sorted by pivot column, positive pivots
  std::vector<std::size_t> pivots_;
};

}  // namespace bbg
