#pragma once

#include "lefschetz/bigint.hpp"
#include "lefschetz/smith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefschetz {

struct TwistDatum {
  bool separating = false;
  std::vector<long long> homology_class;  // length 2g, zero iff separating
  std::optional<int> genus_split;         // h in 1..g/2, separating only
};

struct FibrationSpec {
  int genus = 0;
  int base_points = 0;  // 0 for a fibration
  std::vector<TwistDatum> twists;

  std::size_t delta() const { return twists.size(); }
  void validate() const;  // throws InputError
};

struct InvariantReport {
  long long chi = 0;
  long long b1 = 0;
  long long b2 = 0;
  std::optional<long long> sigma;  // empty: unsupported word class
  std::optional<long long> c1_squared;
  long long c2 = 0;
  AbelianGroup h1;
  std::vector<std::string> notes;
};

// Thrown when the Hodge-bundle degree forces a non-integral signature:
// the relation cannot come from a hyperelliptic fibration.
class NonIntegralHodgeDegree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

long long euler_characteristic(const FibrationSpec& spec);

// H_1(Sigma_g) / <vanishing cycles> via the Smith form of the 2g x delta matrix.
AbelianGroup h1_quotient(const FibrationSpec& spec);

// Hypothetical relation made of delta separating twists on a genus-g fiber.
InvariantReport separating_word_report(int g, long long delta);

struct HyperellipticSignature {
  Rational hodge_degree;  // c
  long long sigma = 0;
};

// delta_h[h-1] counts reducible fibers whose components have genus h and g-h.
HyperellipticSignature hyperelliptic_signature(int g, long long delta0, const std::vector<long long>& delta_h = {});

// Signature, Euler number and derived classes.  sigma is filled only for
// separating-only words and for genus <= 2 (hyperelliptic) words.
InvariantReport invariants(const FibrationSpec& spec);

struct Genus3Report {
  bool nonholomorphic = false;
  bool chi_condition = false;      // 7 does not divide chi + 1
  bool pairing_condition = false;  // pairing with the hyperelliptic class is negative
  long long chi_plus_one_mod_7 = 0;
  long long delta = 0;
  Rational pairing;  // 9 (sigma + delta) / 4 - delta
};

Genus3Report genus3_nonholomorphic(long long chi, long long sigma);

// g = 1 + (self_intersection + K_dot) / 2
long long adjunction_genus(long long self_intersection, long long k_dot);

struct DivisorComponent {
  long long multiplicity = 1;
  std::optional<long long> declared_genus;
};

struct ComponentReport {
  long long d_dot = 0;  // D . Sigma_j
  long long genus = 0;
  bool negative = false;
  bool exceptional_sphere = false;
};

struct SmoothingReport {
  bool smoothable = true;
  std::vector<ComponentReport> components;
};

// Components with multiplicities and their symmetric intersection matrix
// (self-intersections on the diagonal).  Genera come from
// D.Sigma_j + Sigma_j^2 = 2 g_j - 2.
SmoothingReport smoothing_criterion(const std::vector<DivisorComponent>& components,
                                    const std::vector<std::vector<long long>>& intersections);

long long gw_section_index(long long dim_m, long long c1_pairing);

struct TaubesDimension {
  long long dimension = 0;
  int euler_sign = 1;  // (-1)^(N+1)
};

TaubesDimension taubes_moduli_dimension(long long b_plus, long long b1);

}  // namespace lefschetz
