#pragma once

#include "lefschetz/free_group.hpp"
#include "lefschetz/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// <x_1..x_n | r_1, ..., r_m>.  With n = 0 the relator list is empty.
struct Presentation {
  std::size_t generators = 0;
  std::vector<FreeWord> relators;

  void add(const FreeWord& r);  // cyclically reduces, skips trivial and repeated relators
  std::string to_string() const;
};

AbelianGroup presentation_abelianization(const Presentation& p);

struct TietzeOptions {
  std::size_t max_steps = 10000;
  std::size_t max_total_length = 1u << 16;
};

struct TietzeResult {
  Presentation presentation;
  std::size_t steps = 0;
  std::size_t eliminated = 0;
};

// Eliminate generators occurring once in some relator, reduce and dedupe.
TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options = {});

// Number of subgroups of each index 1..max_index (entry k-1 for index k),
// by standardized coset-table backtracking.
std::vector<std::size_t> low_index_subgroup_counts(const Presentation& p, std::size_t max_index = 6);

struct OrderCertificate {
  std::optional<BigInt> order;  // finite order when decided
  bool infinite = false;
  std::string method;
};

// Decided only for presentations on 0 or 1 generators (after simplification).
OrderCertificate order_certificate(const Presentation& p);

}  // namespace lefschetz
