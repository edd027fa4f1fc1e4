#include "bbgkit/subspace.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bbgkit/error.hpp"

namespace bbg {

namespace {

void check_ambient(const RationalSubspace& a, const RationalSubspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw PreconditionError(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()) + " differ");
}

}  // namespace

RationalSubspace RationalSubspace::span(std::size_t ambient, RationalMatrix vectors) {
  RowEchelon e = row_reduce(std::move(vectors), ambient);
  RationalSubspace s(ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

RationalSubspace RationalSubspace::from_equations(std::size_t ambient, RationalMatrix rows) {
  return span(ambient, null_space(rows, ambient));
}

RationalSubspace RationalSubspace::whole(std::size_t ambient) {
  RationalMatrix id(ambient, RationalVector(ambient, Rational(0)));
  for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
  return span(ambient, std::move(id));
}

RationalMatrix RationalSubspace::equations() const {
  return row_reduce(null_space(basis_, ambient_), ambient_).rows;
}

IntegerMatrix RationalSubspace::integer_equations() const {
  IntegerMatrix out;
  for (const auto& row : equations()) out.push_back(primitive_integer_vector(row));
  std::sort(out.begin(), out.end());
  return out;
}

bool RationalSubspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw PreconditionError("RationalSubspace::contains: dimension mismatch");
  RowEchelon e;
  e.rows = basis_;
  e.pivots = pivots_;
  e.cols = ambient_;
  return in_row_space(e, v);
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  check_ambient(*this, other, "contains");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const RationalVector& v) { return contains(v); });
}

bool RationalSubspace::contains_unit(std::size_t axis) const {
  RationalVector e(ambient_, Rational(0));
  e.at(axis) = 1;
  return contains(e);
}

RationalSubspace orthogonal_complement(const RationalSubspace& a) {
  return RationalSubspace::span(a.ambient_dim(), null_space(a.basis(), a.ambient_dim()));
}

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  check_ambient(a, b, "sum");
  RationalMatrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return RationalSubspace::span(a.ambient_dim(), std::move(rows));
}

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  check_ambient(a, b, "intersect");
  RationalMatrix rows = a.equations();
  auto more = b.equations();
  rows.insert(rows.end(), more.begin(), more.end());
  auto result = RationalSubspace::from_equations(a.ambient_dim(), std::move(rows));
  require(a.dim() + b.dim() == sum(a, b).dim() + result.dim(), "Grassmann identity failed");
  return result;
}

IepResult iep_check(const std::vector<RationalSubspace>& subspaces) {
  IepResult out;
  if (subspaces.empty()) return out;
  const std::size_t m = subspaces.front().ambient_dim();
  RationalSubspace total(m);
  for (const auto& w : subspaces) total = sum(total, w);
  out.lhs = total.dim();

  std::function<void(std::size_t, const RationalSubspace*, int)> walk = [&](std::size_t start,
                                                                          const RationalSubspace* current, int size) {
    for (std::size_t j = start; j < subspaces.size(); ++j) {
      RationalSubspace next = current ? intersect(*current, subspaces[j]) : subspaces[j];
      long long d = static_cast<long long>(next.dim());
      out.rhs += (size % 2 == 0 ? 1 : -1) * d;
      if (d > 0) walk(j + 1, &next, size + 1);
    }
  };
  walk(0, nullptr, 0);
  return out;
}

long long iep3(const RationalSubspace& w1, const RationalSubspace& w2, const RationalSubspace& w3) {
  check_ambient(w1, w2, "iep3");
  check_ambient(w1, w3, "iep3");
  auto d = [](const RationalSubspace& s) { return static_cast<long long>(s.dim()); };
  RationalSubspace w12 = intersect(w1, w2);
  return d(w1) + d(w2) + d(w3) - d(w12) - d(intersect(w1, w3)) - d(intersect(w2, w3)) + d(intersect(w12, w3));
}

RedundantTripleReport redundant_triple_test(const RationalSubspace& w1, const RationalSubspace& w2,
                                            const RationalSubspace& w3, std::size_t axis1, std::size_t axis2) {
  check_ambient(w1, w2, "redundant_triple_test");
  check_ambient(w1, w3, "redundant_triple_test");
  const std::size_t m = w1.ambient_dim();
  if (axis1 >= m || axis2 >= m || axis1 == axis2) throw InputError("redundant_triple_test: bad distinguished axes");

  auto all_basis = [](const RationalSubspace& w, auto pred) {
    return std::all_of(w.basis().begin(), w.basis().end(), pred);
  };
  if (!all_basis(w1, [&](const RationalVector& v) { return sgn(v[axis1]) == 0; }))
    throw InputError("redundant_triple_test: W1 is not contained in {y" + std::to_string(axis1 + 1) + " = 0}");
  if (!all_basis(w2, [&](const RationalVector& v) { return sgn(v[axis2]) == 0; }))
    throw InputError("redundant_triple_test: W2 is not contained in {y" + std::to_string(axis2 + 1) + " = 0}");
  if (!all_basis(w3, [&](const RationalVector& v) { return v[axis1] == v[axis2]; }))
    throw InputError("redundant_triple_test: W3 is not contained in {y" + std::to_string(axis1 + 1) + " - y" +
                     std::to_string(axis2 + 1) + " = 0}");

  RedundantTripleReport r;
  r.axis1 = axis1;
  r.axis2 = axis2;
  const RationalSubspace c[3] = {orthogonal_complement(w1), orthogonal_complement(w2), orthogonal_complement(w3)};

  // K_ij = {(u, -u) in slots i, j : u in W_i^perp n W_j^perp} inside Q^{3m}.
  auto k_space = [&](int i, int j) {
    RationalMatrix vectors;
    const RationalSubspace shared = intersect(c[i], c[j]);
    for (const auto& u : shared.basis()) {
      RationalVector v(3 * m, Rational(0));
      for (std::size_t t = 0; t < m; ++t) {
        v[i * m + t] = u[t];
        v[j * m + t] = -u[t];
      }
      vectors.push_back(std::move(v));
    }
    return RationalSubspace::span(3 * m, std::move(vectors));
  };
  r.k12 = k_space(0, 1);
  r.k23 = k_space(1, 2);
  r.k13 = k_space(0, 2);

  r.xi.assign(3 * m, Rational(0));
  r.xi[axis1] = -1;
  r.xi[m + axis2] = 1;
  r.xi[2 * m + axis1] = 1;
  r.xi[2 * m + axis2] = -1;
  r.is_redundant = !sum(sum(r.k12, r.k23), r.k13).contains(r.xi);

  r.iep3_value = iep3(w1, w2, w3);
  r.sum_dim = sum(sum(w1, w2), w3).dim();
  r.inequality_holds = r.iep3_value >= static_cast<long long>(r.sum_dim) + 1;

  if (!r.is_redundant) {
    auto in_all_complements = [&](std::size_t axis) {
      RationalVector e(m, Rational(0));
      e[axis] = 1;
      return c[0].contains(e) && c[1].contains(e) && c[2].contains(e);
    };
    if (in_all_complements(axis1) && in_all_complements(axis2)) {
      r.dichotomy = Dichotomy::kAxesInAllComplements;
    } else {
      r.dichotomy = Dichotomy::kViolated;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == axis1 || i == axis2) continue;
        if (!w1.contains_unit(i) && !w2.contains_unit(i) && !w3.contains_unit(i)) {
          r.dichotomy = Dichotomy::kEngagedAxis;
          r.engaged_axis = i;
          break;
        }
      }
    }
  }
  return r;
}

const char* to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::kNotApplicable:
      return "NOT_APPLICABLE";
    case Dichotomy::kAxesInAllComplements:
      return "AXES_IN_ALL_COMPLEMENTS";
    case Dichotomy::kEngagedAxis:
      return "ENGAGED_AXIS";
    case Dichotomy::kViolated:
      return "VIOLATED";
  }
  return "VIOLATED";
}

}  // namespace bbg
