#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "syzlab/field.hpp"

namespace syzlab {

// Dense row-major matrix over an exact field. Desk scale: dimensions stay
// well below ~200, so no sparse or blocked paths.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { a_[i * cols_ + j] = std::move(v); }

  Matrix mul(const Matrix& o) const;
  Matrix transpose() const;
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix row(std::size_t i) const;
  std::vector<Scalar> row_vec(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Scalar>& v);
  Matrix scaled(const Scalar& c) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  bool is_zero() const;
  bool equals(const Matrix& o) const;

  // Square only; true iff rank == rows.
  bool is_invertible() const;
  Matrix inverse() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RowReduceResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form with the leftmost-pivot, first-nonzero-row
// convention; output is canonical for the row space.
RowReduceResult row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

// Rows are a canonical basis of the right null space: m * v^T = 0.
Matrix kernel_basis(const Matrix& m);

// Solves m * x = rhs (rhs has m.rows() entries). Free variables are set to
// zero, which makes the returned solution canonical. nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

struct QuotientWithSection {
  Matrix projection;  // ambient_dim x q, acts on row vectors from the right
  Matrix section;     // q x ambient_dim; section * projection = identity
  std::size_t quotient_dim = 0;
};

// Quotient of the row-vector space k^ambient_dim by the row space of
// `subspace`, with a canonical coordinate-subspace section.
QuotientWithSection quotient_with_section(const Field& f, std::size_t ambient_dim,
                                          const Matrix& subspace);

// --- row-convention helpers -------------------------------------------------

// Canonical basis (RREF rows) of the row space of m.
Matrix row_space_basis(const Matrix& m);

// Rows v with v * m = 0.
Matrix left_kernel(const Matrix& m);

// Solves x * m = rhs_row for a single row vector.
std::optional<std::vector<Scalar>> solve_left(const Matrix& m, const std::vector<Scalar>& rhs_row);

// Solves x * m = rhs row-by-row; nullopt if any row fails.
std::optional<Matrix> solve_left_matrix(const Matrix& m, const Matrix& rhs);

// Whether v lies in the row space of `reduced` (must be an RREF matrix).
bool in_row_space(const RowReduceResult& reduced, const std::vector<Scalar>& v);
bool in_row_space(const Matrix& m, const std::vector<Scalar>& v);

// Residue of v modulo the row space of `reduced` (must be an RREF matrix).
std::vector<Scalar> reduce_mod_rows(const RowReduceResult& reduced, std::vector<Scalar> v);

}  // namespace syzlab
