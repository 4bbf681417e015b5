#pragma once

#include "lefschetz/bigint.hpp"

#include <string>
#include <vector>

namespace lefschetz {

// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_r, all d_i > 0.  The transforms are kept so callers
// can check the certificate or change coordinates.
struct SmithForm {
  IntMatrix left;       // U, rows x rows
  IntMatrix diagonal;   // D, rows x cols
  IntMatrix right;      // V, cols x cols
  IntMatrix left_inverse;  // U^{-1}
  std::vector<BigInt> invariants;  // nonzero diagonal entries, in order
  std::size_t rank() const { return invariants.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k, t_i > 1.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of the relation matrix: Z^rows / (column span of a).
AbelianGroup cokernel(const IntMatrix& a);

}  // namespace lefschetz
