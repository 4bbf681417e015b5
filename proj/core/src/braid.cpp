#include "lefschetz/braid.hpp"

#include <sstream>

namespace lefschetz {

BraidWord::BraidWord(std::size_t strands) : strands_(strands) {
  if (strands == 0) throw InputError("braid group needs at least one strand");
}

BraidWord::BraidWord(std::size_t strands, std::vector<Letter> letters) : BraidWord(strands) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push(l);
}

BraidWord BraidWord::generator(std::size_t strands, std::size_t i, int exponent) {
  BraidWord w(strands);
  Letter l = exponent >= 0 ? static_cast<Letter>(i) : -static_cast<Letter>(i);
  for (int k = 0; k < std::abs(exponent); ++k) w.push(l);
  return w;
}

void BraidWord::push(Letter l) {
  if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands_)
    throw InputError("braid generator x" + std::to_string(std::abs(l)) + " out of range for B_" +
                     std::to_string(strands_));
  if (!letters_.empty() && letters_.back() == -l)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

long long BraidWord::exponent_sum() const {
  long long s = 0;
  for (Letter l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord BraidWord::inverse() const {
  BraidWord w(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

BraidWord BraidWord::pow(long long n) const {
  BraidWord base = n >= 0 ? *this : inverse();
  BraidWord out(strands_);
  for (long long k = 0; k < std::llabs(n); ++k) out *= base;
  return out;
}

BraidWord BraidWord::conjugated_by(const BraidWord& g) const { return g * *this * g.inverse(); }

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    os << (k ? " " : "") << 'x' << std::abs(letters_[k]);
    if (letters_[k] < 0) os << "^-1";
  }
  return os.str();
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.strands_ != strands_) throw InputError("braid strand-count mismatch");
  for (Letter l : rhs.letters_) push(l);
  return *this;
}

FreeAutomorphism artin_automorphism(const BraidWord& w, const WordLimits& limits) {
  const std::size_t d = w.strands();
  std::vector<FreeWord> t;
  t.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) t.push_back(FreeWord::generator(d, i));
  for (Letter l : w.letters()) {
    hurwitz_step(t, l, [](const FreeWord& x) { return x.inverse(); });
    const std::size_t i = static_cast<std::size_t>(std::abs(l));
    if (t[i - 1].length() > limits.max_length || t[i].length() > limits.max_length)
      throw ResourceError("Artin image exceeded length ceiling " + std::to_string(limits.max_length));
  }
  return FreeAutomorphism(d, std::move(t));
}

bool braid_equal(const BraidWord& u, const BraidWord& v, const WordLimits& limits) {
  if (u.strands() != v.strands()) throw InputError("braid_equal: strand-count mismatch");
  if (u == v) return true;
  // u == v in B_d iff u v^-1 acts trivially
  return artin_automorphism(u * v.inverse(), limits).is_identity();
}

Permutation braid_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (Letter l : w.letters()) {
    auto i = static_cast<std::uint32_t>(std::abs(l));
    p = p * Permutation::transposition(w.strands(), i, i + 1);
  }
  return p;
}

BraidWord full_twist(std::size_t d) {
  if (d < 2) throw InputError("full_twist requires d >= 2");
  std::vector<Letter> one;
  for (std::size_t i = 1; i < d; ++i) one.push_back(static_cast<Letter>(i));
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < d; ++k) letters.insert(letters.end(), one.begin(), one.end());
  return BraidWord(d, std::move(letters));
}

}  // namespace lefschetz
