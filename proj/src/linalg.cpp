#include "pointscheme/linalg.hpp"

#include <utility>

#include "pointscheme/error.hpp"

namespace pointscheme {

void Matrix::add_row(Vector row) {
  if (row.size() != cols) {
    throw precondition_error("row length " + std::to_string(row.size()) +
                             " does not match column count " + std::to_string(cols));
  }
  rows.push_back(std::move(row));
}

Matrix rref(Matrix m) {
  auto& rows = m.rows;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Vector& piv = rows[pivot_row];
    if (!piv[col].is_one()) {
      const Scalar scale = piv[col].inverse();
      for (std::size_t c = col; c < m.cols; ++c) piv[c] *= scale;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < m.cols; ++c) {
        if (!piv[c].is_zero()) rows[r][c] -= factor * piv[c];
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row, Vector{});
  return m;
}

std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
  std::vector<std::size_t> pivots;
  pivots.reserve(reduced.rows.size());
  for (const auto& row : reduced.rows) {
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

Matrix nullspace(const Matrix& m) {
  const Matrix reduced = rref(m);
  const auto pivots = pivot_columns(reduced);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(m.field, m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols, Scalar::zero(m.field));
    v[free] = Scalar::one(m.field);
    for (std::size_t r = 0; r < reduced.rows.size(); ++r) v[pivots[r]] = -reduced.rows[r][free];
    basis.add_row(std::move(v));
  }
  return rref(std::move(basis));
}

bool span_contains(const Matrix& reduced, const Vector& v) {
  Vector rest = v;
  const auto pivots = pivot_columns(reduced);
  for (std::size_t r = 0; r < reduced.rows.size(); ++r) {
    const Scalar c = rest[pivots[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * reduced.rows[r][j];
  }
  for (const auto& s : rest) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector kronecker(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.field, a.cols * b.cols);
  for (const auto& ra : a.rows) {
    for (const auto& rb : b.rows) out.add_row(kronecker(ra, rb));
  }
  return out;
}

Matrix identity(Field f, std::size_t n) {
  Matrix out(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    out.add_row(std::move(v));
  }
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw precondition_error("dot product of vectors of unequal length");
  if (a.empty()) throw precondition_error("dot product of empty vectors has no field");
  Scalar s = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool normalize(Vector& v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) return false;
  if (v[lead].is_one()) return true;
  const Scalar scale = v[lead].inverse();
  for (std::size_t i = lead; i < v.size(); ++i) v[i] *= scale;
  return true;
}

bool kernel_sum_law_holds(const Matrix& phi, const Matrix& psi) {
  if (phi.field != psi.field) throw precondition_error("maps over different fields");
  const Field f = phi.field;
  const Matrix lhs = nullspace(kronecker(phi, psi));

  Matrix rhs(f, phi.cols * psi.cols);
  const Matrix ker_phi = nullspace(phi);
  const Matrix ker_psi = nullspace(psi);
  for (const auto& row : kronecker(ker_phi, identity(f, psi.cols)).rows) rhs.add_row(row);
  for (const auto& row : kronecker(identity(f, phi.cols), ker_psi).rows) rhs.add_row(row);
  return rref(std::move(rhs)).rows == lhs.rows;
}

}  // namespace pointscheme
