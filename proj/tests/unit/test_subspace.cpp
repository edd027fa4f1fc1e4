#include <doctest.h>

#include <random>

#include "bbgkit/error.hpp"
#include "bbgkit/subspace.hpp"

using namespace bbg;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

RationalSubspace eqs(std::size_t m, std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix out;
  for (const auto& r : rows) out.push_back(vec(r));
  return RationalSubspace::from_equations(m, out);
}

RationalSubspace spanned(std::size_t m, std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix out;
  for (const auto& r : rows) out.push_back(vec(r));
  return RationalSubspace::span(m, out);
}

RationalSubspace random_subspace(std::size_t m, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, static_cast<int>(m)), entry(-2, 2);
  RationalMatrix rows(static_cast<std::size_t>(count(rng)), RationalVector(m));
  for (auto& r : rows)
    for (auto& x : r) x = entry(rng);
  return RationalSubspace::span(m, rows);
}

// The three trefoil hyperplanes y1 = 0, y2 = 0, y1 = y2 in Q^5.
const RationalSubspace kY1 = eqs(5, {{1, 0, 0, 0, 0}});
const RationalSubspace kY2 = eqs(5, {{0, 1, 0, 0, 0}});
const RationalSubspace kDiag = eqs(5, {{1, -1, 0, 0, 0}});

}  // namespace

TEST_CASE("coordinate hyperplanes") {
  CHECK(intersect(kY1, kY2).dim() == 3);
  CHECK(sum(kY1, kY2).dim() == 5);
  CHECK(intersect(kY1, kY1) == kY1);
  CHECK(kY1.codim() == 1);
  CHECK(kY1.integer_equations() == IntegerMatrix{{Integer(1), Integer(0), Integer(0), Integer(0), Integer(0)}});
  CHECK(kDiag.integer_equations() == IntegerMatrix{{Integer(1), Integer(-1), Integer(0), Integer(0), Integer(0)}});
  CHECK(kY1.contains_unit(1));
  CHECK_FALSE(kY1.contains_unit(0));
}

TEST_CASE("dimension mismatch is a precondition error") {
  CHECK_THROWS_AS(sum(kY1, RationalSubspace::whole(4)), PreconditionError);
  CHECK_THROWS_AS(intersect(kY1, RationalSubspace(3)), PreconditionError);
}

TEST_CASE("Grassmann identity and complements on random pairs") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    RationalSubspace a = random_subspace(6, rng), b = random_subspace(6, rng);
    CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
    RationalSubspace perp = orthogonal_complement(a);
    CHECK(perp.dim() + a.dim() == 6);
    CHECK(orthogonal_complement(perp) == a);
    CHECK(RationalSubspace::from_equations(6, a.equations()) == a);
  }
}

TEST_CASE("inclusion-exclusion") {
  IepResult t = iep_check({kY1, kY2, kDiag});
  CHECK(t.lhs == 5);
  CHECK(t.rhs == 6);
  CHECK_FALSE(t.equal());

  // Coordinate subspaces always satisfy it.
  IepResult coord = iep_check({eqs(4, {{1, 0, 0, 0}}), eqs(4, {{0, 1, 0, 0}, {0, 0, 1, 0}}), eqs(4, {{0, 0, 0, 1}})});
  CHECK(coord.equal());
  CHECK(iep_check({kY1}).equal());
}

TEST_CASE("iep3") {
  CHECK(iep3(kY1, kY2, kDiag) == 6);
  RationalSubspace plane = eqs(5, {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
  CHECK(iep3(plane, plane, plane) == 3);
  CHECK(iep3(eqs(5, {{1, 2, 0, 1, 0}}), eqs(5, {{0, 1, 3, 0, 1}}), eqs(5, {{2, 0, 1, 1, 1}})) == 5);
}

TEST_CASE("trefoil triple is redundant") {
  RedundantTripleReport r = redundant_triple_test(kY1, kY2, kDiag, 0, 1);
  CHECK(r.is_redundant);
  CHECK(r.iep3_value == 6);
  CHECK(r.sum_dim == 5);
  CHECK(r.inequality_holds);
  // The complements are three distinct lines, so every K_ij vanishes.
  CHECK(r.k12.dim() == 0);
  CHECK(r.k23.dim() == 0);
  CHECK(r.k13.dim() == 0);
  CHECK(r.xi == vec({-1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0}));
  CHECK(r.dichotomy == Dichotomy::kNotApplicable);
}

TEST_CASE("coordinate-hyperplane sections with a shared zero axis") {
  // W1 = {y1 = y3 = 0}, W2 = {y2 = y3 = 0}, W3 = {y1 = y2, y3 = 0}. Every
  // K_ij sits on e3 while xi has e1 and e2 parts, so the triple is redundant.
  RedundantTripleReport r = redundant_triple_test(eqs(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}),
                                                  eqs(4, {{0, 1, 0, 0}, {0, 0, 1, 0}}),
                                                  eqs(4, {{1, -1, 0, 0}, {0, 0, 1, 0}}), 0, 1);
  CHECK(r.is_redundant);
  CHECK(r.iep3_value == 4);
  CHECK(r.sum_dim == 3);
  CHECK(r.inequality_holds);
}

TEST_CASE("three lines in the plane") {
  RedundantTripleReport r =
      redundant_triple_test(spanned(2, {{0, 1}}), spanned(2, {{1, 0}}), spanned(2, {{1, 1}}), 0, 1);
  CHECK(r.is_redundant);
  CHECK(r.k12.dim() == 0);
  CHECK(r.iep3_value == 3);
  CHECK(r.sum_dim == 2);
}

TEST_CASE("non-redundant triples") {
  // Zero subspaces: every K_ij is the full diagonal, so xi is reachable.
  RationalSubspace zero(3);
  RedundantTripleReport r = redundant_triple_test(zero, zero, zero, 0, 1);
  CHECK_FALSE(r.is_redundant);
  CHECK(r.dichotomy == Dichotomy::kAxesInAllComplements);

  // Common e3 direction with no room for xi: e3 lies in no W_j.
  RedundantTripleReport s = redundant_triple_test(spanned(3, {{0, 1, 0}}), zero, zero, 0, 1);
  CHECK_FALSE(s.is_redundant);
}

TEST_CASE("non-redundancy does not force the dichotomy for arbitrary triples") {
  // W1 = 0, W2 = span(2,0,1), W3 = span(e3) in Q^3. xi is reached with
  // a = -e2 in K12, b = 0 in K23, c = -e1 + e2 in K13, yet e1 is not in
  // W2's complement and e3, the only other axis, lies in W3.
  RationalSubspace w1(3);
  RationalSubspace w2 = spanned(3, {{2, 0, 1}});
  RationalSubspace w3 = spanned(3, {{0, 0, 1}});
  RedundantTripleReport r = redundant_triple_test(w1, w2, w3, 0, 1);
  CHECK_FALSE(r.is_redundant);
  CHECK(r.dichotomy == Dichotomy::kViolated);
  CHECK_FALSE(orthogonal_complement(w2).contains_unit(0));
  CHECK(w3.contains_unit(2));
}

TEST_CASE("redundancy implies the strict inequality on random shaped triples") {
  std::mt19937 rng(2);
  std::size_t redundant = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 3 + static_cast<std::size_t>(trial % 3);
    auto shaped = [&](RationalVector constraint) {
      RationalSubspace base = random_subspace(m, rng);
      return intersect(base, RationalSubspace::from_equations(m, {std::move(constraint)}));
    };
    RationalVector c1(m, Rational(0)), c2(m, Rational(0)), c3(m, Rational(0));
    c1[0] = 1;
    c2[1] = 1;
    c3[0] = 1;
    c3[1] = -1;
    RedundantTripleReport r = redundant_triple_test(shaped(c1), shaped(c2), shaped(c3), 0, 1);
    if (!r.is_redundant) continue;
    ++redundant;
    CHECK(r.inequality_holds);
  }
  CHECK(redundant > 0);
}

TEST_CASE("shape violations name the failing containment") {
  CHECK_THROWS_AS(redundant_triple_test(kY2, kY2, kDiag, 0, 1), InputError);
  CHECK_THROWS_AS(redundant_triple_test(kY1, kY1, kDiag, 0, 1), InputError);
  CHECK_THROWS_AS(redundant_triple_test(kY1, kY2, kY1, 0, 1), InputError);
  CHECK_THROWS_AS(redundant_triple_test(kY1, kY2, kDiag, 0, 0), InputError);
  try {
    redundant_triple_test(kY1, kY2, kY1, 0, 1);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("W3") != std::string::npos);
  }
}
