#include "matrix.hpp"

#include <algorithm>

namespace wlat {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  internal_check(cols_ == o.rows_, "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r.axpy(Rat(-1), o);
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::axpy(const Rat& c, const Matrix& o) {
  internal_check(rows_ == o.rows_ && cols_ == o.cols_, "axpy shape mismatch");
  if (c == 0) return *this;
  for (size_t i = 0; i < a_.size(); ++i)
    if (o.a_[i] != 0) a_[i] += c * o.a_[i];
  return *this;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
  internal_check(int(v.size()) == cols_, "matrix apply shape mismatch");
  std::vector<Rat> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ == 0) return b;
  if (b.rows_ == 0) return a;
  internal_check(a.cols_ == b.cols_, "vstack shape mismatch");
  Matrix r(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ == 0) return b;
  if (b.cols_ == 0) return a;
  internal_check(a.rows_ == b.rows_, "hcat shape mismatch");
  Matrix r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rat>>& cols, int rows) {
  Matrix r(rows, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    internal_check(int(cols[j].size()) == rows, "from_columns shape mismatch");
    for (int i = 0; i < rows; ++i) r.at(i, int(j)) = cols[j][i];
  }
  return r;
}

std::vector<Rat> Matrix::column(int j) const {
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

namespace {

// In-place row echelon reduction; returns the pivot column of each pivot
// row, in order.  Rows below pivots are cleared, pivots normalized to 1,
// and entries above pivots eliminated (full RREF).
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Rat c = m.at(i, col);
      if (c == 0) continue;
      for (int j = col; j < m.cols(); ++j)
        if (m.at(row, j) != 0) m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return int(rref(m).size());
}

Matrix Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  int free_count = cols_ - int(pivots.size());
  Matrix k(cols_, free_count);
  int out = 0;
  for (int col = 0; col < cols_; ++col) {
    if (is_pivot[col]) continue;
    k.at(col, out) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], out) = -m.at(int(r), col);
    ++out;
  }
  return k;
}

int rank_of_union(const Matrix& a, const Matrix& b) { return Matrix::hcat(a, b).rank(); }

bool same_column_span(const Matrix& a, const Matrix& b) {
  int ra = a.rank(), rb = b.rank();
  return ra == rb && rank_of_union(a, b) == ra;
}

bool column_span_contained(const Matrix& a, const Matrix& b) {
  return rank_of_union(a, b) == b.rank();
}

Matrix restrict_kernel(const Matrix& m, const Matrix& a) {
  internal_check(m.cols() == a.rows(), "restrict_kernel shape mismatch");
  return (m * a).kernel_basis();
}

Matrix annihilator_rows(const Matrix& b) {
  return b.transpose().kernel_basis().transpose();
}

std::vector<Rat> IncrementalSpan::reduce(const std::vector<Rat>& v) const {
  std::vector<Rat> w = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = w[pivots_[k]];
    if (c == 0) continue;
    Rat f = c;  // rows are pivot-normalized
    for (int j = 0; j < dim_; ++j)
      if (rows_[k][j] != 0) w[j] -= f * rows_[k][j];
  }
  return w;
}

bool IncrementalSpan::add(const std::vector<Rat>& v) {
  internal_check(int(v.size()) == dim_, "span dimension mismatch");
  std::vector<Rat> w = reduce(v);
  int p = -1;
  for (int j = 0; j < dim_; ++j)
    if (w[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Rat inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  pivots_.push_back(p);
  rows_.push_back(std::move(w));
  return true;
}

bool IncrementalSpan::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> w = reduce(v);
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

void IncrementalSpan::add_columns(const Matrix& m) {
  internal_check(m.rows() == dim_, "span dimension mismatch");
  for (int j = 0; j < m.cols(); ++j) add(m.column(j));
}

Matrix IncrementalSpan::basis_columns() const {
  Matrix out(dim_, rank());
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < dim_; ++j) out.at(j, k) = rows_[k][j];
  return out;
}

}  // namespace wlat
