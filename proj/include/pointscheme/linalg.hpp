#pragma once

#include <cstddef>
#include <vector>

#include "pointscheme/field.hpp"

namespace pointscheme {

/// Dense row-major matrix over a single field; rows are Vectors of equal
/// length `cols`.
struct Matrix {
  Field field;
  std::size_t cols = 0;
  std::vector<Vector> rows;

  Matrix(Field f, std::size_t c) : field(f), cols(c) {}
  std::size_t row_count() const { return rows.size(); }
  void add_row(Vector row);
};

/// Reduced row-echelon form: nonzero rows only, pivots equal to 1, each pivot
/// column zero elsewhere, rows ordered by pivot column.
Matrix rref(Matrix m);

/// Basis of { v : m.rows * v = 0 } in reduced row-echelon form.
Matrix nullspace(const Matrix& m);

/// Pivot column of each row of an RREF matrix.
std::vector<std::size_t> pivot_columns(const Matrix& reduced);

/// True iff v lies in the row span of an RREF matrix.
bool span_contains(const Matrix& reduced, const Vector& v);

/// Kronecker product of coordinate vectors: (a ⊗ b)[i*|b| + j] = a[i]*b[j].
Vector kronecker(const Vector& a, const Vector& b);
/// Kronecker product of matrices acting on column vectors.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Identity basis of F^n as rows.
Matrix identity(Field f, std::size_t n);

Scalar dot(const Vector& a, const Vector& b);

/// Canonical projective representative: first nonzero entry scaled to 1.
/// Returns false (and leaves v untouched) for the zero vector.
bool normalize(Vector& v);

/// Compares ker(phi ⊗ psi) with (ker phi) ⊗ N + M ⊗ (ker psi) by their
/// reduced bases.  phi: M -> M' and psi: N -> N' are given as matrices with
/// dim M (resp. dim N) columns.
bool kernel_sum_law_holds(const Matrix& phi, const Matrix& psi);

}  // namespace pointscheme
