#include "lefschetz/orbit_search.hpp"

#include "lefschetz/errors.hpp"

#include <deque>
#include <unordered_map>

namespace lefschetz {

std::string canonical_key(const Factorization& f, const WordLimits& limits) {
  std::string key = std::to_string(f.factors.size());
  key += '|';
  for (const auto& a : f.factors) {
    key += f.context.canonical(a, limits);
    key += '|';
  }
  return key;
}

namespace {

struct Node {
  Factorization f;
  std::size_t parent;
  Move move;
  std::size_t depth;
};

std::vector<Move> expansions(const Factorization& f, const MoveSet& moves) {
  std::vector<Move> out;
  if (moves.hurwitz)
    for (std::size_t i = 1; i < f.factors.size(); ++i)
      for (int dir : {1, -1}) out.push_back(Move{MoveType::hurwitz, i, dir, {}});
  if (moves.conjugate)
    for (std::size_t g = 1; g <= f.context.letter_bound(); ++g)
      for (int s : {1, -1})
        out.push_back(Move{MoveType::conjugate, 1, 1, Element({s * static_cast<Letter>(g)})});
  return out;
}

}  // namespace

SearchResult orbit_search(const Factorization& f1, const Factorization& f2, const SearchBudget& budget,
                          const MoveSet& moves, const WordLimits& limits) {
  if (!(f1.context == f2.context)) throw InputError("orbit_search: factorizations live in different groups");
  if (!f1.context.equal(f1.target_element(), f2.target_element(), limits))
    throw InputError("orbit_search: targets differ");
  if (budget.states == 0) throw InputError("orbit_search: state budget must be positive");

  SearchResult result;
  const std::string goal = canonical_key(f2, limits);
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;

  nodes.push_back({f1, 0, {}, 0});
  seen.emplace(canonical_key(f1, limits), 0);
  queue.push_back(0);

  auto path_to = [&](std::size_t idx) {
    MovePath p;
    while (idx != 0) {
      p.push_back(nodes[idx].move);
      idx = nodes[idx].parent;
    }
    return MovePath(p.rbegin(), p.rend());
  };

  if (seen.begin()->first == goal) {
    result.path = MovePath{};
    result.states_visited = 1;
    return result;
  }

  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::size_t depth = nodes[cur].depth;
    result.depth_reached = std::max(result.depth_reached, depth);
    if (depth >= budget.depth) continue;
    for (const Move& m : expansions(nodes[cur].f, moves)) {
      Factorization next = apply_move(nodes[cur].f, m);
      std::string key = canonical_key(next, limits);
      if (seen.count(key)) continue;
      if (nodes.size() >= budget.states) {
        result.budget_exhausted = true;
        result.states_visited = nodes.size();
        return result;
      }
      nodes.push_back({std::move(next), cur, m, depth + 1});
      const std::size_t idx = nodes.size() - 1;
      if (key == goal) {
        result.path = path_to(idx);
        result.states_visited = nodes.size();
        result.depth_reached = depth + 1;
        return result;
      }
      seen.emplace(std::move(key), idx);
      queue.push_back(idx);
    }
  }
  result.states_visited = nodes.size();
  return result;
}

}  // namespace lefschetz
