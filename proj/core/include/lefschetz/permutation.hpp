#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lefschetz {

// Element of S_N acting on points 1..N.
//
// Products read left to right: (p * q) applies p first, then q, so
// p * q maps i to q(p(i)).  This matches the left-to-right reading of
// words in the free and braid groups.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 1);
  // images[i-1] is the image of point i (1-based values)
  static Permutation from_images(const std::vector<std::uint32_t>& images);
  static Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b);
  // cycles are 1-based
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  // 1-based image of 1-based point
  std::uint32_t operator()(std::uint32_t point) const { return images_.at(point - 1) + 1; }

  bool is_identity() const;
  bool is_transposition() const;
  // points moved, sorted (1-based)
  std::vector<std::uint32_t> support() const;
  int sign() const;
  Permutation inverse() const;
  std::vector<std::vector<std::uint32_t>> cycles() const;  // nontrivial cycles, 1-based
  std::string to_string() const;                           // cycle notation, "()" for identity

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  const std::vector<std::uint32_t>& zero_based() const { return images_; }

 private:
  std::vector<std::uint32_t> images_;  // 0-based
};

// g^-1 * p * g: relabel p by g (apply g^-1, then p, then g).
Permutation conjugate_by(const Permutation& p, const Permutation& g);

// True if the group generated by gens acts transitively on 1..N.
bool generates_transitive(const std::vector<Permutation>& gens, std::size_t degree);

}  // namespace lefschetz

template <>
struct std::hash<lefschetz::Permutation> {
  std::size_t operator()(const lefschetz::Permutation& p) const noexcept;
};
