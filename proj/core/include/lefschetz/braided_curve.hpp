#pragma once

#include "lefschetz/braid.hpp"
#include "lefschetz/factorization.hpp"
#include "lefschetz/permutation.hpp"
#include "lefschetz/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// conjugator * X_base^exponent * conjugator^-1.  Exponent 1 is a tangency,
// 2 / -2 a positive / negative node, 3 a cusp.
struct CurveFactor {
  BraidWord conjugator;
  std::size_t base = 1;
  int exponent = 1;

  BraidWord braid() const;
};

struct BraidedCurveSpec {
  std::size_t degree = 2;
  std::vector<CurveFactor> factors;

  void validate() const;  // throws InputError
  Factorization as_factorization() const;
};

// Covering monodromy: one transposition of S_N per puncture of the reference line.
struct BranchData {
  std::size_t sheets = 2;
  std::vector<Permutation> transpositions;

  void validate() const;  // transpositions of degree N
  bool transitive() const;
  // theta on a free word of rank d
  Permutation evaluate(const FreeWord& w) const;
  friend bool operator==(const BranchData&, const BranchData&) = default;
};

std::string factor_type(int exponent);

struct CurveReport {
  bool valid = false;
  bool checksum_ok = false;
  long long exponent_sum = 0;
  long long expected_sum = 0;
  std::optional<bool> product_ok;  // empty when the check ran out of resources
  std::vector<std::string> notes;
};

CurveReport verify_braided_curve(const BraidedCurveSpec& spec, const WordLimits& limits = {});

// Images under artin(conjugator) of x_base, x_base+1.
std::pair<FreeWord, FreeWord> local_meridians(const CurveFactor& f, std::size_t degree);

struct ThetaReport {
  bool compatible = false;
  bool relators_killed = false;
  bool local_types_ok = false;
  bool transitive = false;
  std::vector<std::string> diagnostics;
};

ThetaReport theta_compatible(const BraidedCurveSpec& spec, const BranchData& branch);

struct ZvkOptions {
  bool stabilized = false;
  std::size_t conjugator_length = 4;
  std::size_t max_relators = 20000;
};

// Generators gamma_1..gamma_d.  Relators gamma_i^-1 phi_Q(gamma_i) for every
// factor Q, plus gamma_1 ... gamma_d (the product our Artin action fixes).
// Stabilized: [gamma_i, v gamma_j v^-1] for |v| <= conjugator_length when the
// theta images of gamma_i and v gamma_j v^-1 are disjoint transpositions.
Presentation zvk_presentation(const BraidedCurveSpec& spec, const ZvkOptions& options = {},
                              const BranchData* branch = nullptr);

struct StructureReport {
  bool pass = false;
  std::size_t image_order = 0;
  std::size_t ambient_order = 0;
  std::size_t index = 0;
  bool parity_defined = false;
  bool image_in_parity_kernel = false;
  std::vector<std::string> image_generators;
  std::vector<std::string> notes;
};

// Image of gamma_i -> (theta_i, 1) in S_N x Z_d against the parity map
// (sigma, c) -> sign(sigma) (-1)^c.
StructureReport structure_sequence_check(const Presentation& p, const BranchData& branch, std::size_t d);

struct ThetaEnumeration {
  std::vector<BranchData> classes;
  std::size_t examined = 0;
  bool bound_exceeded = false;
  std::vector<std::string> diagnostics;
};

// Compatible assignments up to simultaneous conjugation in S_N.  bound caps
// the number of complete assignments examined.
ThetaEnumeration enumerate_thetas(const BraidedCurveSpec& spec, std::size_t sheets, std::size_t bound = 1000000);

// Lexicographically least relabeling of the tuple under S_N.
BranchData canonical_branch(const BranchData& b);

struct LambdaQuotient {
  AbelianGroup quotient;  // Z^2 / Lambda
  std::size_t power = 0;  // N - 1
  std::string summary;
};

LambdaQuotient lambda_quotient(const std::vector<std::pair<long long, long long>>& pairs, std::size_t sheets);

}  // namespace lefschetz
