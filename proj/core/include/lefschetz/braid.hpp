#pragma once

#include "lefschetz/free_group.hpp"
#include "lefschetz/permutation.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace lefschetz {

// Word in the Artin generators X_1..X_{d-1} of the braid group B_d.
// Stored freely reduced; equality of *elements* is braid_equal, not ==.
class BraidWord {
 public:
  explicit BraidWord(std::size_t strands = 2);
  BraidWord(std::size_t strands, std::vector<Letter> letters);

  static BraidWord generator(std::size_t strands, std::size_t i, int exponent = 1);

  std::size_t strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  long long exponent_sum() const;

  BraidWord inverse() const;
  BraidWord pow(long long n) const;
  BraidWord conjugated_by(const BraidWord& g) const;  // g * this * g^-1
  std::string to_string() const;                      // "x1 x2^-1", "" for the empty word

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }
  // Letter-sequence identity; use braid_equal for group equality.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void push(Letter l);
  std::size_t strands_;
  std::vector<Letter> letters_;
};

// One Hurwitz step of the letter l = +-i on a tuple of group elements.
//   X_i:      (t_i, t_{i+1}) -> (t_i t_{i+1} t_i^-1, t_i)
//   X_i^-1:   (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^-1 t_i t_{i+1})
// Applying the letters of a word left to right is the right action of B_d
// on tuples; it preserves the ordered product t_1 ... t_d.
template <class Element, class Inverse>
void hurwitz_step(std::vector<Element>& t, Letter l, Inverse inv) {
  const std::size_t i = static_cast<std::size_t>(std::abs(l));
  if (i == 0 || i >= t.size()) throw InputError("Hurwitz step index out of range");
  Element& a = t[i - 1];
  Element& b = t[i];
  if (l > 0) {
    Element na = a * b * inv(a);
    b = std::move(a);
    a = std::move(na);
  } else {
    Element nb = inv(b) * a * b;
    a = std::move(b);
    b = std::move(nb);
  }
}

template <class Element, class Inverse>
std::vector<Element> hurwitz_act(std::vector<Element> t, const BraidWord& w, Inverse inv) {
  for (Letter l : w.letters()) hurwitz_step(t, l, inv);
  return t;
}

// Artin action on F_d = pi_1(disc minus d points):
//   X_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
// Homomorphism: artin(uv) = artin(u) * artin(v).  Fixes x_1 x_2 ... x_d.
FreeAutomorphism artin_automorphism(const BraidWord& w, const WordLimits& limits = {});

// Group equality in B_d, decided by the faithful Artin action.
bool braid_equal(const BraidWord& u, const BraidWord& v, const WordLimits& limits = {});

// Underlying strand permutation; multiplicative for the left-to-right product.
Permutation braid_permutation(const BraidWord& w);

// (X_1 ... X_{d-1})^d, the central full twist.
BraidWord full_twist(std::size_t d);

}  // namespace lefschetz
