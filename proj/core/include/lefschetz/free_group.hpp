#pragma once

#include "lefschetz/errors.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lefschetz {

// Signed generator index: +i is x_i, -i is x_i^{-1}, 1 <= i <= rank.
using Letter = int;

// Element of the free group F_rank, always stored freely reduced, so
// equality of elements is equality of letter sequences.
class FreeWord {
 public:
  explicit FreeWord(std::size_t rank = 1);
  FreeWord(std::size_t rank, std::vector<Letter> letters);  // reduces

  static FreeWord generator(std::size_t rank, std::size_t i, int exponent = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord pow(long long n) const;
  // g * this * g^-1
  FreeWord conjugated_by(const FreeWord& g) const;
  // Cyclically reduced core; the word equals u * core * u^-1.
  FreeWord cyclic_core(FreeWord* outer = nullptr) const;
  // Exponent sum of each generator (abelianization image).
  std::vector<long long> exponent_sums() const;
  std::string to_string() const;  // "x1 x2^-1", "1" for the identity

  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  void push(Letter l);
  std::size_t rank_;
  std::vector<Letter> letters_;
};

// True iff u and v are conjugate in the free group.
bool are_conjugate(const FreeWord& u, const FreeWord& v);

// Resource ceiling for word growth in automorphism computations.
struct WordLimits {
  std::size_t max_length = 1u << 22;
};

// Automorphism (endomorphism, unchecked) of F_rank given by generator images.
// Composition: (a * b)(w) = a(b(w)).
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(std::size_t rank = 1);  // identity
  FreeAutomorphism(std::size_t rank, std::vector<FreeWord> images);

  std::size_t rank() const { return rank_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(std::size_t i) const { return images_.at(i - 1); }  // 1-based
  bool is_identity() const;

  FreeWord apply(const FreeWord& w, const WordLimits& limits = {}) const;

  // Inner automorphism w -> g w g^-1.
  static FreeAutomorphism conjugation(const FreeWord& g);

  friend FreeAutomorphism operator*(const FreeAutomorphism& a, const FreeAutomorphism& b);
  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;
  friend auto operator<=>(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::size_t rank_;
  std::vector<FreeWord> images_;
};

// Evaluate a free word in a group given the images of the generators.
// Group must provide operator*, an identity passed in, and inverse via `inv`.
template <class Element, class Inverse>
Element evaluate(const FreeWord& w, const std::vector<Element>& images, Element identity, Inverse inv) {
  if (images.size() != w.rank()) throw InputError("evaluate: image count does not match rank");
  std::vector<Element> inverses;
  inverses.reserve(images.size());
  for (const auto& g : images) inverses.push_back(inv(g));
  Element acc = std::move(identity);
  for (Letter l : w.letters()) acc = acc * (l > 0 ? images[l - 1] : inverses[-l - 1]);
  return acc;
}

}  // namespace lefschetz
