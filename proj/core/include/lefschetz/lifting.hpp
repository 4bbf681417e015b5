#pragma once

#include "lefschetz/bigint.hpp"
#include "lefschetz/braid.hpp"
#include "lefschetz/braided_curve.hpp"
#include "lefschetz/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// g = (d - 2N + 2) / 2 for a simply branched N-sheeted cover of the sphere.
long long fiber_genus(long long sheets, long long branch_points);

// True iff the Hurwitz action of w fixes the transposition tuple exactly.
bool is_liftable(const BraidWord& w, const BranchData& branch);

struct HomologyAction {
  IntMatrix matrix;          // 2g x 2g, acts on column vectors
  Permutation marked_points;  // on the N preimages of infinity
};

// Closed surface covering the sphere, built from the wedge of loops
// x_1..x_d at the base point: N vertices (sheets), N d edges (s, i) from s
// to s theta_i, and faces traced from the lifted rotation
// (out_1, in_1, ..., out_d, in_d).  H_1 is computed from a spanning tree
// rooted at sheet 1 and the face boundaries.
class CoverModel {
 public:
  explicit CoverModel(const BranchData& branch);

  std::size_t sheets() const { return branch_.sheets; }
  std::size_t branch_points() const { return branch_.transpositions.size(); }
  std::size_t vertex_count() const { return branch_.sheets; }
  std::size_t edge_count() const { return sheets() * branch_points(); }
  std::size_t face_count() const { return faces_.size(); }
  long long euler_characteristic() const;
  long long genus() const { return genus_; }
  const BranchData& branch() const { return branch_; }

  // Intersection form on the chosen basis of H_1 (2g x 2g).
  const IntMatrix& intersection_form() const { return form_; }
  // Interleaving form on the loops left after contracting the spanning tree.
  const IntMatrix& loop_form() const { return loop_form_; }
  // Face boundaries in loop coordinates (one column per face).
  const IntMatrix& face_boundaries() const { return boundaries_; }

  // Loop coordinates of the lift of a word starting at sheet s (1-based);
  // the lift must close up.
  IntVector loop_vector(const FreeWord& w, std::size_t sheet) const;
  // H_1 coordinates of a closed lift.
  IntVector homology_class(const FreeWord& w, std::size_t sheet) const;
  // Word of the fundamental cycle through non-tree edge k.
  const FreeWord& cycle_word(std::size_t k) const { return cycle_words_.at(k); }
  std::size_t loop_count() const { return cycle_words_.size(); }

  // Lift of a liftable braid fixing the sheets over the base point.
  HomologyAction action(const BraidWord& w, const WordLimits& limits = {}) const;

 private:
  std::size_t edge_id(std::size_t sheet0, std::size_t gen0) const { return sheet0 * branch_points() + gen0; }
  std::vector<long long> lift_edges(const FreeWord& w, std::size_t sheet0, std::size_t* end0) const;

  BranchData branch_;
  long long genus_ = 0;
  std::vector<std::vector<int>> faces_;     // dart cycles
  std::vector<long long> loop_index_;       // edge -> loop index or -1 for tree edges
  std::vector<FreeWord> cycle_words_;
  IntMatrix boundaries_;
  IntMatrix projection_;  // loop coordinates -> H_1
  IntMatrix section_;     // H_1 -> loop coordinates
  IntMatrix loop_form_;
  IntMatrix form_;
};

HomologyAction lift_homology_action(const BraidWord& w, const BranchData& branch);

// Intersection-form check M^T J M == J.
bool is_symplectic(const IntMatrix& m, const IntMatrix& j);

struct PencilFactor {
  std::size_t index = 0;  // 1-based factor position
  int exponent = 1;
  IntMatrix matrix;
  bool trivial = false;
};

struct PencilMonodromy {
  long long genus = 0;
  IntMatrix intersection_form;
  std::vector<PencilFactor> tangencies;     // Dehn twist images
  std::vector<PencilFactor> singular;       // nodes and cusps, expected trivial
  bool singular_trivial = true;
  IntMatrix product;  // product of the tangency matrices, in order
  bool product_is_identity = false;
  bool all_symplectic = true;
};

PencilMonodromy pencil_monodromy(const BraidedCurveSpec& spec, const BranchData& branch);

}  // namespace lefschetz
