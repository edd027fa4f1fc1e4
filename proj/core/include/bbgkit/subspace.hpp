#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bbgkit/linalg.hpp"
#include "bbgkit/rational.hpp"

namespace bbg {

// Subspace of Q^m held by its reduced row echelon basis. Equations are the
// echelon basis of the orthogonal complement for the standard inner product.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static RationalSubspace span(std::size_t ambient, RationalMatrix vectors);
  static RationalSubspace from_equations(std::size_t ambient, RationalMatrix rows);
  static RationalSubspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_ - basis_.size(); }

  const RationalMatrix& basis() const { return basis_; }
  RationalMatrix equations() const;
  // Primitive integer rows of the echelon equations, sorted lexicographically.
  IntegerMatrix integer_equations() const;

  bool contains(const RationalVector& v) const;
  bool contains(const RationalSubspace& other) const;
  bool contains_unit(std::size_t axis) const;

  bool operator==(const RationalSubspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

RationalSubspace orthogonal_complement(const RationalSubspace& a);
RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b);

struct IepResult {
  std::size_t lhs = 0;  // dim of the sum
  long long rhs = 0;    // alternating sum of intersection dimensions
  bool equal() const { return rhs >= 0 && static_cast<std::size_t>(rhs) == lhs; }
};

// Both sides of the inclusion-exclusion identity over all nonempty index
// subsets (subsets whose intersection is already zero are pruned).
IepResult iep_check(const std::vector<RationalSubspace>& subspaces);

// dim W1 + dim W2 + dim W3 - (pairwise intersections) + dim(W1 n W2 n W3).
long long iep3(const RationalSubspace& w1, const RationalSubspace& w2, const RationalSubspace& w3);

enum class Dichotomy {
  kNotApplicable,        // the triple is redundant
  kAxesInAllComplements,  // both special axes lie in every complement
  kEngagedAxis,          // some other axis lies outside every W_j
  kViolated,             // neither; possible for arbitrary triples, not for triangle triples seen so far
};

struct RedundantTripleReport {
  std::size_t axis1 = 0, axis2 = 0;  // ambient coordinates playing e1 and e2
  bool is_redundant = false;
  RationalVector xi;  // (-e1, e2, e1 - e2) in Q^m + Q^m + Q^m
  RationalSubspace k12, k23, k13;  // in Q^{3m}
  long long iep3_value = 0;
  std::size_t sum_dim = 0;
  bool inequality_holds = false;  // iep3 >= sum_dim + 1
  Dichotomy dichotomy = Dichotomy::kNotApplicable;
  std::optional<std::size_t> engaged_axis;
};

// Requires W1 in {y_a1 = 0}, W2 in {y_a2 = 0}, W3 in {y_a1 = y_a2}
// (InputError naming the failing containment otherwise).
RedundantTripleReport redundant_triple_test(const RationalSubspace& w1, const RationalSubspace& w2,
                                            const RationalSubspace& w3, std::size_t axis1, std::size_t axis2);

const char* to_string(Dichotomy d);

}  // namespace bbg
