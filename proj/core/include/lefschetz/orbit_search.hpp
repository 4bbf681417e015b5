#pragma once

#include "lefschetz/factorization.hpp"

#include <optional>
#include <string>

namespace lefschetz {

struct SearchBudget {
  std::size_t depth = 6;
  std::size_t states = 100000;
};

struct MoveSet {
  bool hurwitz = true;
  bool conjugate = true;  // by single generators and their inverses
};

struct SearchResult {
  std::optional<MovePath> path;  // replayable certificate
  bool budget_exhausted = false;  // states cap hit before the depth bound was covered
  std::size_t states_visited = 0;
  std::size_t depth_reached = 0;
};

// Key that is equal for factorizations with element-wise equal factors.
std::string canonical_key(const Factorization& f, const WordLimits& limits = {});

// Breadth-first search from f1 toward f2.  Moves are expanded in a fixed
// order (Hurwitz i = 1.., +1 before -1, then conjugation by x1, x1^-1, ...),
// so the first path found is the same on every run.  A missing path means
// "not found within budget" only.
SearchResult orbit_search(const Factorization& f1, const Factorization& f2, const SearchBudget& budget = {},
                          const MoveSet& moves = {}, const WordLimits& limits = {});

}  // namespace lefschetz
