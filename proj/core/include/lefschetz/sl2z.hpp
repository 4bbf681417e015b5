#pragma once

#include "lefschetz/bigint.hpp"
#include "lefschetz/free_group.hpp"

#include <string>

namespace lefschetz {

// Element of SL(2,Z) = Map_1, the genus-1 mapping class group.
class SL2ZMatrix {
 public:
  SL2ZMatrix() : a_(1), b_(0), c_(0), d_(1) {}
  SL2ZMatrix(BigInt a, BigInt b, BigInt c, BigInt d);  // throws unless ad - bc = 1

  // A = [[1,1],[0,1]], B = [[1,0],[-1,1]]
  static SL2ZMatrix A() { return {1, 1, 0, 1}; }
  static SL2ZMatrix B() { return {1, 0, -1, 1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  BigInt trace() const { return a_ + d_; }
  BigInt determinant() const { return a_ * d_ - b_ * c_; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  SL2ZMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  std::string to_string() const;

  friend SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y);
  friend bool operator==(const SL2ZMatrix&, const SL2ZMatrix&) = default;

 private:
  BigInt a_, b_, c_, d_;
};

// Words over {A, B} are rank-2 free words with x1 = A, x2 = B.  The
// product is taken left to right as a matrix product.
SL2ZMatrix sl2z_eval(const FreeWord& word);

}  // namespace lefschetz
