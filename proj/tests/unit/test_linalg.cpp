#include <doctest.h>

#include <random>

#include "bbgkit/linalg.hpp"

using namespace bbg;

namespace {

RationalMatrix rows(std::initializer_list<std::initializer_list<int>> values) {
  RationalMatrix m;
  for (const auto& r : values) {
    RationalVector v;
    for (int x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  return m;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& x) {
  RationalVector out;
  for (const auto& r : m) {
    Rational s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * x[i];
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("row_reduce produces reduced echelon form") {
  RowEchelon e = row_reduce(rows({{2, 4, 2}, {1, 2, 3}, {3, 6, 5}}), 3);
  REQUIRE(e.rows.size() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.rows[0] == RationalVector{Rational(1), Rational(2), Rational(0)});
  CHECK(e.rows[1] == RationalVector{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("rank and null space agree with rank-nullity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m(4, RationalVector(6));
    for (auto& r : m)
      for (auto& x : r) x = d(rng);
    auto ns = null_space(m, 6);
    CHECK(rank(m, 6) + ns.size() == 6);
    for (const auto& v : ns)
      for (const auto& y : multiply(m, v)) CHECK(y == 0);
  }
}

TEST_CASE("matrices with no rows keep their shape") {
  CHECK(rank({}, 3) == 0);
  CHECK(null_space({}, 3).size() == 3);
}

TEST_CASE("in_row_space") {
  RowEchelon e = row_reduce(rows({{1, 1, 0}, {0, 1, 1}}), 3);
  CHECK(in_row_space(e, {Rational(1), Rational(2), Rational(1)}));
  CHECK_FALSE(in_row_space(e, {Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("smith_normal_form exposes torsion") {
  // Boundary of a triangle glued to itself with degree 2 gives Z/2.
  SmithForm s = smith_normal_form({{Integer(2)}}, 1);
  CHECK(s.rank == 1);
  CHECK(s.divisors == std::vector<Integer>{Integer(2)});

  SmithForm t = smith_normal_form({{Integer(2), Integer(4), Integer(4)},
                                   {Integer(-6), Integer(6), Integer(12)},
                                   {Integer(10), Integer(-4), Integer(-16)}},
                                  3);
  CHECK(t.rank == 3);
  CHECK(t.divisors == std::vector<Integer>{Integer(2), Integer(6), Integer(12)});
}

TEST_CASE("IntegerLattice distinguishes integral from rational membership") {
  IntegerLattice l(2);
  l.add({Integer(2), Integer(0)});
  l.add({Integer(0), Integer(3)});
  CHECK(l.rank() == 2);
  CHECK(l.contains({Integer(4), Integer(-3)}));
  CHECK_FALSE(l.contains({Integer(1), Integer(0)}));
}
