#pragma once

// Dense exact-rational matrices sized for desk-scale graded components
// (a few hundred rows/columns).  Reduction is plain fraction arithmetic
// with leading-entry normalization; all results are deterministic, and
// kernel bases come out in reduced column-echelon normal form so that
// repeated runs produce identical output.

#include <vector>

#include "rational.hpp"

namespace wlat {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);
  Matrix& axpy(const Rat& c, const Matrix& o);  // *this += c*o
  Matrix scaled(const Rat& c) const;
  Matrix transpose() const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // this * v

  // Stack rows of a on top of rows of b (equal column counts).
  static Matrix vstack(const Matrix& a, const Matrix& b);
  // Concatenate columns (equal row counts).
  static Matrix hcat(const Matrix& a, const Matrix& b);
  // Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<Rat>>& cols, int rows);

  std::vector<Rat> column(int j) const;

  int rank() const;
  // Columns form a basis of {v : A v = 0}, reduced echelon normal form.
  Matrix kernel_basis() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// rank of the column span of [a | b] (subspace comparison helper)
int rank_of_union(const Matrix& a, const Matrix& b);

// true iff colspan(a) == colspan(b)
bool same_column_span(const Matrix& a, const Matrix& b);

// true iff colspan(a) is contained in colspan(b)
bool column_span_contained(const Matrix& a, const Matrix& b);

// Basis (as columns) of the intersection of colspan(a) and kernel of m,
// expressed in the colspan coordinates: returns c with m*(a*c) = 0 and
// a*c of full column rank spanning {v in colspan(a) : m v = 0}.
Matrix restrict_kernel(const Matrix& m, const Matrix& a);

// Functionals (rows) vanishing exactly on colspan(b): Q b = 0, rank Q = dim - rank b.
Matrix annihilator_rows(const Matrix& b);

// Growing subspace with an internal row-echelon form; add() reduces the
// incoming vector and reports whether the span grew.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return int(rows_.size()); }
  bool add(const std::vector<Rat>& v);        // true if v was independent
  bool contains(const std::vector<Rat>& v) const;
  void add_columns(const Matrix& m);
  Matrix basis_columns() const;               // echelon basis as columns

 private:
  std::vector<Rat> reduce(const std::vector<Rat>& v) const;
  int dim_;
  std::vector<int> pivots_;
  std::vector<std::vector<Rat>> rows_;  // normalized: rows_[k][pivots_[k]] == 1
};

}  // namespace wlat
