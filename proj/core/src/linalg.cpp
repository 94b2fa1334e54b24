#include "cliff/linalg.hpp"

#include <utility>

#include "cliff/errors.hpp"

namespace cliff {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  RatMat r = *this;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  RatMat r = *this;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMat RatMat::scaled(const Rat& s) const {
  RatMat r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

// Gauss-Jordan on [A | B], returning rank; after the call A is in RREF.
int eliminate(RatMat& a, RatMat* b) {
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(rank, j));
      if (b)
        for (int j = 0; j < b->cols(); ++j) std::swap(b->at(pivot, j), b->at(rank, j));
    }
    Rat inv = a.at(rank, col).inverse();
    for (int j = 0; j < a.cols(); ++j) a.at(rank, j) *= inv;
    if (b)
      for (int j = 0; j < b->cols(); ++j) b->at(rank, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == rank || a.at(i, col).is_zero()) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(rank, j);
      if (b)
        for (int j = 0; j < b->cols(); ++j) b->at(i, j) -= f * b->at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  RatMat a = *this;
  RatMat b = identity(rows_);
  if (eliminate(a, &b) != rows_) throw SingularMatrix();
  return b;
}

bool RatMat::is_invertible() const {
  if (rows_ != cols_) return false;
  RatMat a = *this;
  return eliminate(a, nullptr) == rows_;
}

std::vector<Rat> RatMat::solve(const std::vector<Rat>& b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
    throw Error("solve dimension mismatch");
  RatMat a = *this;
  RatMat rhs(rows_, 1);
  for (int i = 0; i < rows_; ++i) rhs.at(i, 0) = b[i];
  if (eliminate(a, &rhs) != rows_) throw SingularMatrix();
  std::vector<Rat> x(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i) x[i] = rhs.at(i, 0);
  return x;
}

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
  RatMat a = *this;
  eliminate(a, nullptr);
  // Locate pivot columns.
  std::vector<int> pivot_of_col(cols_, -1);
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    if (!a.at(row, col).is_zero()) {
      pivot_of_col[col] = row;
      ++row;
    }
  }
  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free_col] = Rat(1);
    for (int col = 0; col < cols_; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -a.at(pivot_of_col[col], free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cliff
