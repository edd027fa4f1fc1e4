#include "bbgkit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "bbgkit/error.hpp"

namespace bbg {

RowEchelon row_reduce(RationalMatrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw PreconditionError("row_reduce: ragged matrix");

  RowEchelon out;
  out.cols = cols;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < m.size(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[lead_row]);
    Rational inv = 1 / m[lead_row][c];
    for (std::size_t j = c; j < cols; ++j) m[lead_row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead_row || sgn(m[r][c]) == 0) continue;
      Rational factor = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[lead_row][j];
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  m.resize(lead_row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m, std::size_t cols) { return row_reduce(m, cols).rows.size(); }

RationalMatrix null_space(const RationalMatrix& m, std::size_t cols) {
  RowEchelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const RowEchelon& e, const RationalVector& v) {
  if (v.size() != e.cols) throw PreconditionError("in_row_space: dimension mismatch");
  RationalVector w = v;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    Rational factor = w[e.pivots[r]];
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < e.cols; ++j) w[j] -= factor * e.rows[r][j];
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

SmithForm smith_normal_form(IntegerMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& row : m)
    if (row.size() != cols) throw PreconditionError("smith_normal_form: ragged matrix");

  SmithForm out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the nonzero entry of least absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
            break;
          }
    }
    out.divisors.push_back(abs(m[t][t]));
    ++t;
  }
  out.rank = out.divisors.size();
  return out;
}

void IntegerLattice::add(IntegerVector v) {
  if (v.size() != dim_) throw PreconditionError("IntegerLattice::add: dimension mismatch");
  while (true) {
    std::size_t lead = 0;
    while (lead < dim_ && sgn(v[lead]) == 0) ++lead;
    if (lead == dim_) return;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    if (it == pivots_.end() || *it != lead) {
      if (sgn(v[lead]) < 0)
        for (auto& x : v) x = -x;
      pivots_.insert(it, lead);
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
      return;
    }
    IntegerVector& r = rows_[idx];
    Integer a = r[lead], b = v[lead], g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer ag = a / g, bg = b / g;
    IntegerVector new_r(dim_), new_v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      new_r[j] = s * r[j] + t * v[j];
      new_v[j] = ag * v[j] - bg * r[j];
    }
    if (sgn(new_r[lead]) < 0)
      for (auto& x : new_r) x = -x;
    r = std::move(new_r);
    v = std::move(new_v);
  }
}

bool IntegerLattice::contains(IntegerVector v) const {
  if (v.size() != dim_) throw PreconditionError("IntegerLattice::contains: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t p = pivots_[k];
    for (std::size_t j = 0; j < p; ++j)
      if (sgn(v[j]) != 0) return false;
    if (sgn(v[p]) == 0) continue;
    if (v[p] % rows_[k][p] != 0) return false;
    Integer q = v[p] / rows_[k][p];
    for (std::size_t j = p; j < dim_; ++j) v[j] -= q * rows_[k][j];
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

}  // namespace bbg
