#include "syzlab/matrix.hpp"

#include <algorithm>

#include "syzlab/error.hpp"

namespace syzlab {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::mul(const Matrix& o) const {
  check(cols_ == o.rows_, "matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (field_.is_zero(aik)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (field_.is_zero(o.at(k, j))) continue;
        r.set(i, j, field_.add(r.at(i, j), field_.mul(aik, o.at(k, j))));
      }
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  check(cols_ == below.cols_, "vstack width mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  check(rows_ == right.rows_, "hstack height mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.at(i, j));
  }
  return r;
}

Matrix Matrix::row(std::size_t i) const {
  Matrix r(field_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.set(0, j, at(i, j));
  return r;
}

std::vector<Scalar> Matrix::row_vec(std::size_t i) const {
  std::vector<Scalar> v(cols_, field_.zero());
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const std::vector<Scalar>& v) {
  check(v.size() == cols_, "set_row width mismatch");
  for (std::size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, field_.mul(at(i, j), c));
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, field_.add(at(i, j), o.at(i, j)));
  return r;
}

Matrix Matrix::sub(const Matrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, field_.sub(at(i, j), o.at(i, j)));
  return r;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!field_.is_zero(s)) return false;
  return true;
}

bool Matrix::equals(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!field_.eq(a_[i], o.a_[i])) return false;
  return true;
}

bool Matrix::is_invertible() const {
  return rows_ == cols_ && rank(*this) == rows_;
}

Matrix Matrix::inverse() const {
  check(rows_ == cols_, "inverse of non-square matrix");
  RowReduceResult rr = row_reduce(hstack(identity(field_, rows_)));
  check(rr.rank == rows_, "inverse of singular matrix");
  Matrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.set(i, j, rr.reduced.at(i, cols_ + j));
  return inv;
}

RowReduceResult row_reduce(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && f.is_zero(r.at(sel, col))) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        Scalar t = r.at(lead, j);
        r.set(lead, j, r.at(sel, j));
        r.set(sel, j, t);
      }
    Scalar piv_inv = f.inv(r.at(lead, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.set(lead, j, f.mul(r.at(lead, j), piv_inv));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      Scalar c = r.at(i, col);  // copy: the write at j == col would alias a reference
      if (f.is_zero(c)) continue;
      for (std::size_t j = col; j < r.cols(); ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(lead, j))));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  RowReduceResult rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, free_cols.size(), m.cols());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    k.set(fi, fc, f.one());
    for (std::size_t pi = 0; pi < rr.pivot_columns.size(); ++pi)
      k.set(fi, rr.pivot_columns[pi], f.neg(rr.reduced.at(pi, fc)));
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  const Field& f = m.field();
  check(rhs.size() == m.rows(), "solve rhs length mismatch");
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), rhs[i]);
  }
  RowReduceResult rr = row_reduce(aug);
  for (std::size_t pi = 0; pi < rr.pivot_columns.size(); ++pi)
    if (rr.pivot_columns[pi] == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), f.zero());
  for (std::size_t pi = 0; pi < rr.pivot_columns.size(); ++pi)
    x[rr.pivot_columns[pi]] = rr.reduced.at(pi, m.cols());
  return x;
}

QuotientWithSection quotient_with_section(const Field& f, std::size_t ambient_dim,
                                          const Matrix& subspace) {
  check(subspace.cols() == ambient_dim || subspace.rows() == 0,
        "subspace ambient dimension mismatch");
  Matrix sub = subspace.rows() == 0 ? Matrix(f, 0, ambient_dim) : subspace;
  RowReduceResult rr = row_reduce(sub);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::size_t q = free_cols.size();

  // projection row i = free coordinates of e_i reduced modulo the subspace
  Matrix projection(f, ambient_dim, q);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    std::vector<Scalar> e(ambient_dim, f.zero());
    e[i] = f.one();
    std::vector<Scalar> r = reduce_mod_rows(rr, std::move(e));
    for (std::size_t j = 0; j < q; ++j) projection.set(i, j, r[free_cols[j]]);
  }
  Matrix section(f, q, ambient_dim);
  for (std::size_t j = 0; j < q; ++j) section.set(j, free_cols[j], f.one());
  return {std::move(projection), std::move(section), q};
}

Matrix row_space_basis(const Matrix& m) {
  RowReduceResult rr = row_reduce(m);
  Matrix b(m.field(), rr.rank, m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b.set(i, j, rr.reduced.at(i, j));
  return b;
}

Matrix left_kernel(const Matrix& m) { return kernel_basis(m.transpose()); }

std::optional<std::vector<Scalar>> solve_left(const Matrix& m, const std::vector<Scalar>& rhs_row) {
  return solve(m.transpose(), rhs_row);
}

std::optional<Matrix> solve_left_matrix(const Matrix& m, const Matrix& rhs) {
  check(rhs.cols() == m.cols(), "solve_left_matrix width mismatch");
  Matrix x(m.field(), rhs.rows(), m.rows());
  Matrix mt = m.transpose();
  for (std::size_t i = 0; i < rhs.rows(); ++i) {
    auto xi = solve(mt, rhs.row_vec(i));
    if (!xi) return std::nullopt;
    x.set_row(i, *xi);
  }
  return x;
}

std::vector<Scalar> reduce_mod_rows(const RowReduceResult& reduced, std::vector<Scalar> v) {
  const Matrix& r = reduced.reduced;
  const Field& f = r.field();
  check(v.size() == r.cols(), "reduce_mod_rows length mismatch");
  for (std::size_t pi = 0; pi < reduced.pivot_columns.size(); ++pi) {
    std::size_t pc = reduced.pivot_columns[pi];
    if (f.is_zero(v[pc])) continue;
    Scalar c = v[pc];
    for (std::size_t j = 0; j < r.cols(); ++j) v[j] = f.sub(v[j], f.mul(c, r.at(pi, j)));
  }
  return v;
}

bool in_row_space(const RowReduceResult& reduced, const std::vector<Scalar>& v) {
  const Field& f = reduced.reduced.field();
  std::vector<Scalar> r = reduce_mod_rows(reduced, v);
  for (const Scalar& s : r)
    if (!f.is_zero(s)) return false;
  return true;
}

bool in_row_space(const Matrix& m, const std::vector<Scalar>& v) {
  return in_row_space(row_reduce(m), v);
}

}  // namespace syzlab
