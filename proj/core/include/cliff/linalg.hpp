#pragma once

#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

// Dense exact-rational matrix with Gauss-Jordan elimination. Sized for this
// project's needs (n <= 12 frames, 2^n x 2^n inversion solves, small kernel
// computations); no pivoting heuristics beyond first-nonzero.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& s) const;
  RatMat transpose() const;

  // Throws SingularMatrix when not invertible.
  RatMat inverse() const;
  bool is_invertible() const;

  // Solves A x = b for square A; throws SingularMatrix.
  std::vector<Rat> solve(const std::vector<Rat>& b) const;

  // Basis of the null space (each entry one kernel vector), via RREF.
  std::vector<std::vector<Rat>> kernel_basis() const;

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace cliff
