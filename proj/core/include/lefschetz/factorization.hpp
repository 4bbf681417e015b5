#pragma once

#include "lefschetz/braid.hpp"
#include "lefschetz/free_group.hpp"
#include "lefschetz/sl2z.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// Group in which factors live.
//   braid: B_d, letters x1..x_{d-1}, equality by Artin action
//   sl2z:  words in A, B evaluated as matrices
//   free:  F_rank, reduced words (symbolic twist alphabet)
enum class ContextKind { braid, sl2z, free };

// A freely reduced word; its meaning depends on the context.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  long long exponent_sum() const;
  Element inverse() const;
  Element conjugated_by(const Element& g) const;  // g * this * g^-1

  Element& operator*=(const Element& rhs);
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

struct GroupContext {
  ContextKind kind = ContextKind::braid;
  std::size_t size = 2;  // strands for braid, rank for free, 2 for sl2z

  static GroupContext braid(std::size_t strands) { return {ContextKind::braid, strands}; }
  static GroupContext sl2z() { return {ContextKind::sl2z, 2}; }
  static GroupContext free(std::size_t rank) { return {ContextKind::free, rank}; }

  std::size_t letter_bound() const;  // largest generator index
  void check(const Element& e) const;
  bool equal(const Element& a, const Element& b, const WordLimits& limits = {}) const;
  bool is_identity(const Element& a, const WordLimits& limits = {}) const;
  // string that is equal for group-equal elements
  std::string canonical(const Element& a, const WordLimits& limits = {}) const;
  std::string format(const Element& a) const;
  Element parse(const std::string& text) const;
  std::string name() const;

  BraidWord as_braid(const Element& a) const;
  SL2ZMatrix as_matrix(const Element& a) const;

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

enum class TargetKind { identity, full_twist, element };

struct Target {
  TargetKind kind = TargetKind::identity;
  Element element;  // used when kind == element

  static Target identity() { return {}; }
  static Target full_twist() { return {TargetKind::full_twist, {}}; }
  static Target of(Element e) { return {TargetKind::element, std::move(e)}; }
  friend bool operator==(const Target&, const Target&) = default;
};

struct Factorization {
  GroupContext context;
  Target target;
  std::vector<Element> factors;

  // Target as a concrete element of the context.
  Element target_element() const;
  Element product() const;
  long long exponent_sum() const;
};

// Product (left to right) equals the target.
bool verify_product(const Factorization& f, const WordLimits& limits = {});

// Element-wise group equality, same context and target.
bool factorizations_equal(const Factorization& a, const Factorization& b, const WordLimits& limits = {});

// dir = +1: (a, b) -> (a b a^-1, a) at positions i, i+1 (1-based); dir = -1 inverts.
Factorization hurwitz_move(const Factorization& f, std::size_t i, int dir);

// Every factor a -> g a g^-1; an explicit target is conjugated too.
Factorization global_conjugate(const Factorization& f, const Element& g);

using Admissibility = std::function<bool(const Element&, const Factorization&)>;

// Insert (g, g^-1) so that g lands at position i (1 <= i <= n+1).
Factorization insert_pair(const Factorization& f, std::size_t i, const Element& g, const Admissibility& admissible);
// Remove positions i, i+1 which must multiply to the identity.
Factorization delete_pair(const Factorization& f, std::size_t i);

// f1 followed by phi^-1 a phi for every factor a of f2.
Factorization twisted_fiber_sum(const Factorization& f1, const Factorization& f2, const Element& phi);

enum class MoveType { hurwitz, conjugate, insert_pair, delete_pair };

struct Move {
  MoveType type = MoveType::hurwitz;
  std::size_t index = 1;  // 1-based
  int direction = 1;
  Element element;

  std::string describe(const GroupContext& ctx) const;
  friend bool operator==(const Move&, const Move&) = default;
};

using MovePath = std::vector<Move>;

Factorization apply_move(const Factorization& f, const Move& m, const Admissibility& admissible = {});
Factorization replay(const Factorization& f, const MovePath& path, const Admissibility& admissible = {});

}  // namespace lefschetz
