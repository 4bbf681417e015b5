#include "lefschetz/sl2z.hpp"

#include "lefschetz/errors.hpp"

#include <sstream>

namespace lefschetz {

SL2ZMatrix::SL2ZMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() != 1) throw InputError("SL(2,Z) matrix must have determinant 1");
}

std::string SL2ZMatrix::to_string() const {
  std::ostringstream os;
  os << "[[" << a_ << ", " << b_ << "], [" << c_ << ", " << d_ << "]]";
  return os.str();
}

SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y) {
  SL2ZMatrix r;
  r.a_ = x.a_ * y.a_ + x.b_ * y.c_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.d_;
  r.c_ = x.c_ * y.a_ + x.d_ * y.c_;
  r.d_ = x.c_ * y.b_ + x.d_ * y.d_;
  return r;
}

SL2ZMatrix sl2z_eval(const FreeWord& word) {
  if (word.rank() != 2) throw InputError("SL(2,Z) words use the two letters A, B");
  return evaluate(word, std::vector<SL2ZMatrix>{SL2ZMatrix::A(), SL2ZMatrix::B()}, SL2ZMatrix{},
                  [](const SL2ZMatrix& m) { return m.inverse(); });
}

}  // namespace lefschetz
