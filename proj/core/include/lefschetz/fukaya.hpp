#pragma once

#include "lefschetz/arrangement.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// Morphism generator: an intersection point of L_source and L_target
// (source < target) or the formal identity of one object.
struct Generator {
  std::string name;
  int source = 0;  // 1-based object
  int target = 0;
  int vertex = -1;  // topology vertex, -1 for identities
  bool identity() const { return vertex < 0; }
};

// A Z_2 combination, as the sorted list of generators with coefficient 1.
using Z2Vector = std::vector<std::size_t>;

struct FukayaData {
  std::size_t objects = 0;
  std::vector<Generator> generators;  // sorted by (source, target, name)
  // mu^n tables: key = the n inputs, only nonzero values stored.
  std::map<std::vector<std::size_t>, Z2Vector> mu;
  std::size_t max_order = 0;  // tables are complete for n <= max_order

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;  // throws InputError
  std::vector<std::size_t> hom(int i, int j) const;
  // Table lookup.  Throws InputError for a non-composable tuple and
  // std::out_of_range when max_order < n < objects (missing table).
  Z2Vector value(const std::vector<std::size_t>& inputs) const;
  std::string format(const Z2Vector& v) const;
};

// Intersection points for i < j, the identity for i == j, nothing for i > j.
std::vector<Generator> hom_basis(const CurveArrangement& arr, int i, int j);

struct PolygonOptions {
  std::size_t max_subsets = std::size_t{1} << 22;  // connected face sets examined
  std::size_t max_winding = 2;  // extra turns of a boundary arc in the immersed-candidate scan
};

struct Polygon {
  std::vector<int> faces;
  std::vector<int> labels;        // arc curves, cyclic order starting at the lowest
  std::vector<std::size_t> inputs;  // generator indices p_1..p_n
  std::size_t output = 0;
};

struct BoundaryScan {
  std::vector<Polygon> embedded;        // simple boundary loops with multiplicity <= 1
  std::size_t immersed_candidates = 0;  // loops with multiplicity >= 2 or self-touching
  std::string first_immersed;
};

// Independent scan over corner tuples: each tuple, starting direction and
// choice of extra arc turns gives at most one loop turning left at every
// corner.  Multiplicities are
// winding numbers normalized to 0 on punctured faces.
BoundaryScan scan_polygon_boundaries(const CurveArrangement& arr, const std::vector<Generator>& gens,
                                     const PolygonOptions& options = {});

// Embedded puncture-free polygons with convex corners and increasing arc
// labels.  Throws ResourceError past the subset cap and CapabilityError on
// a candidate that is pinched at a vertex or a boundary loop that may
// bound an immersed polygon.
std::vector<Polygon> enumerate_polygons(const CurveArrangement& arr, const std::vector<Generator>& gens,
                                        const PolygonOptions& options = {});

// Requires a valid, exact arrangement (InputError otherwise).  max_order 0
// means all orders up to r - 1.
FukayaData compute_category(const CurveArrangement& arr, std::size_t max_order = 0,
                            const PolygonOptions& options = {});

// mu^n on named generators; the chain must be composable.
Z2Vector compute_mu(const CurveArrangement& arr, const std::vector<std::string>& inputs,
                    const PolygonOptions& options = {});

struct AInfinityReport {
  bool holds = true;
  std::size_t relations_checked = 0;
  std::optional<std::vector<std::size_t>> failing_chain;
  std::string failure;  // human readable
};

// All composable chains of length 1..up_to.  Throws InputError if a needed
// table is missing.
AInfinityReport verify_a_infinity(const FukayaData& data, std::size_t up_to);

// Three curves on a four-punctured sphere meeting pairwise in two points,
// vertices named a, a' (L1, L2), b, b' (L2, L3), c, c' (L1, L3).
CurveArrangement conic_pencil_example();

}  // namespace lefschetz
