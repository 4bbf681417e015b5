#include "lefschetz/fibration.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

void FibrationSpec::validate() const {
  if (genus < 0) throw InputError("genus must be non-negative");
  if (base_points < 0) throw InputError("base point count must be non-negative");
  const std::size_t len = 2 * static_cast<std::size_t>(genus);
  for (std::size_t k = 0; k < twists.size(); ++k) {
    const auto& t = twists[k];
    const std::string where = "twist " + std::to_string(k + 1) + ": ";
    if (t.separating) {
      if (!t.genus_split) throw InputError(where + "separating twist needs a genus split h");
      if (*t.genus_split < 1 || *t.genus_split > genus / 2)
        throw InputError(where + "genus split must lie in 1.." + std::to_string(genus / 2));
      for (long long v : t.homology_class)
        if (v != 0) throw InputError(where + "separating twist must have zero homology class");
    } else {
      if (t.genus_split) throw InputError(where + "genus split given for a non-separating twist");
      if (t.homology_class.size() != len)
        throw InputError(where + "homology class must have length " + std::to_string(len));
      bool nonzero = false;
      for (long long v : t.homology_class) nonzero = nonzero || v != 0;
      if (!nonzero && genus > 0) throw InputError(where + "non-separating twist has zero homology class");
    }
  }
}

long long euler_characteristic(const FibrationSpec& spec) {
  return 4 - 4LL * spec.genus - spec.base_points + static_cast<long long>(spec.delta());
}

AbelianGroup h1_quotient(const FibrationSpec& spec) {
  spec.validate();
  const std::size_t rows = 2 * static_cast<std::size_t>(spec.genus);
  if (rows == 0) return {};
  IntMatrix m(rows, std::max<std::size_t>(spec.delta(), 1));
  for (std::size_t c = 0; c < spec.delta(); ++c) {
    const auto& t = spec.twists[c];
    if (t.separating) continue;
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = t.homology_class[r];
  }
  return cokernel(m);
}

InvariantReport separating_word_report(int g, long long delta) {
  if (g < 1) throw InputError("separating_word_report needs genus >= 1");
  if (delta < 1) throw InputError("separating_word_report needs at least one twist");
  InvariantReport r;
  r.sigma = -delta;
  r.b1 = 2LL * g;
  r.b2 = delta + 2;
  r.c2 = 4 - 4LL * g + delta;
  r.chi = r.c2;
  r.c1_squared = 2 * r.chi + 3 * *r.sigma;
  r.h1.free_rank = static_cast<std::size_t>(2 * g);
  if (*r.c1_squared < -delta)
    r.notes.push_back("c1^2 = " + std::to_string(*r.c1_squared) + " < -delta: X would be rational or ruled, " +
                      "whose b1 cannot be " + std::to_string(r.b1) + " with these counts; no such relation");
  return r;
}

HyperellipticSignature hyperelliptic_signature(int g, long long delta0, const std::vector<long long>& delta_h) {
  if (g < 0) throw InputError("genus must be non-negative");
  if (delta0 < 0) throw InputError("fiber counts must be non-negative");
  if (delta_h.size() > static_cast<std::size_t>(g / 2))
    throw InputError("reducible fiber counts given for h > g/2");
  BigInt num = BigInt(g) * delta0;
  long long total = delta0;
  for (std::size_t k = 0; k < delta_h.size(); ++k) {
    if (delta_h[k] < 0) throw InputError("fiber counts must be non-negative");
    const long long h = static_cast<long long>(k) + 1;
    num += BigInt(4 * h * (g - h)) * delta_h[k];
    total += delta_h[k];
  }
  HyperellipticSignature out;
  out.hodge_degree = Rational(num, BigInt(8LL * g + 4));
  const Rational four_c = out.hodge_degree * 4;
  if (denominator(four_c) != 1)
    throw NonIntegralHodgeDegree("Hodge degree " + out.hodge_degree.str() + " gives non-integral signature " +
                                 Rational(four_c - total).str());
  out.sigma = to_ll(numerator(four_c)) - total;
  return out;
}

InvariantReport invariants(const FibrationSpec& spec) {
  spec.validate();
  InvariantReport r;
  r.chi = euler_characteristic(spec);
  r.c2 = r.chi;
  r.h1 = h1_quotient(spec);
  r.b1 = static_cast<long long>(r.h1.free_rank);
  r.b2 = r.chi - 2 + 2 * r.b1;

  long long delta0 = 0;
  std::vector<long long> delta_h(static_cast<std::size_t>(spec.genus / 2), 0);
  for (const auto& t : spec.twists) {
    if (t.separating)
      ++delta_h[static_cast<std::size_t>(*t.genus_split - 1)];
    else
      ++delta0;
  }
  const long long delta = static_cast<long long>(spec.delta());

  std::optional<long long> fib_sigma;
  if (spec.genus >= 1 && delta >= 1 && delta0 == 0) {
    fib_sigma = separating_word_report(spec.genus, delta).sigma;
    r.notes.push_back("separating-only word: each twist contributes -1 to the signature");
  } else if (spec.genus <= 2) {
    fib_sigma = hyperelliptic_signature(spec.genus, delta0, delta_h).sigma;
    r.notes.push_back("signature from the hyperelliptic Hodge-bundle relation");
  } else {
    r.notes.push_back("signature: unsupported word class (genus >= 3, not separating-only)");
  }
  if (fib_sigma) {
    r.sigma = *fib_sigma + spec.base_points;
    if (spec.base_points > 0)
      r.notes.push_back("pencil: " + std::to_string(spec.base_points) +
                        " exceptional sections blown down (sigma + n, chi - n)");
    r.c1_squared = 2 * r.chi + 3 * *r.sigma;
  }
  return r;
}

Genus3Report genus3_nonholomorphic(long long chi, long long sigma) {
  Genus3Report r;
  r.delta = chi + 8;
  r.chi_plus_one_mod_7 = ((chi + 1) % 7 + 7) % 7;
  r.chi_condition = r.chi_plus_one_mod_7 != 0;
  r.pairing = Rational(BigInt(9) * (BigInt(sigma) + r.delta), BigInt(4)) - r.delta;
  r.pairing_condition = r.pairing < 0;
  r.nonholomorphic = r.chi_condition && r.pairing_condition;
  return r;
}

long long adjunction_genus(long long self_intersection, long long k_dot) {
  const long long s = self_intersection + k_dot;
  if (s % 2 != 0) throw InputError("adjunction: self-intersection + K.Sigma must be even");
  const long long g = 1 + s / 2;
  if (g < 0) throw InputError("adjunction: negative genus " + std::to_string(g));
  return g;
}

SmoothingReport smoothing_criterion(const std::vector<DivisorComponent>& components,
                                    const std::vector<std::vector<long long>>& q) {
  const std::size_t n = components.size();
  if (q.size() != n) throw InputError("intersection matrix size differs from component count");
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) throw InputError("intersection matrix must be square");
    if (components[i].multiplicity <= 0) throw InputError("multiplicities must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (q[i][j] != q[j][i]) throw InputError("intersection matrix must be symmetric");
  }
  SmoothingReport out;
  for (std::size_t j = 0; j < n; ++j) {
    ComponentReport c;
    for (std::size_t i = 0; i < n; ++i) c.d_dot += components[i].multiplicity * q[i][j];
    const long long s = c.d_dot + q[j][j];
    if (s % 2 != 0 || s < -2)
      throw InputError("component " + std::to_string(j + 1) + ": adjunction gives no valid genus");
    c.genus = 1 + s / 2;
    if (components[j].declared_genus && *components[j].declared_genus != c.genus)
      throw InputError("component " + std::to_string(j + 1) + ": declared genus " +
                       std::to_string(*components[j].declared_genus) + " but adjunction gives " +
                       std::to_string(c.genus));
    c.negative = c.d_dot < 0;
    c.exceptional_sphere = c.negative && c.genus == 0 && q[j][j] == -1;
    if (c.negative) out.smoothable = false;
    out.components.push_back(c);
  }
  return out;
}

long long gw_section_index(long long dim_m, long long c1_pairing) {
  if (dim_m < 2 || dim_m % 2 != 0) throw InputError("manifold dimension must be even and at least 2");
  return (dim_m - 6) + 2 * c1_pairing;
}

TaubesDimension taubes_moduli_dimension(long long b_plus, long long b1) {
  const long long s = b_plus - b1 - 1;
  if (s < 0 || s % 2 != 0) throw InputError("b+ - b1 - 1 must be even and non-negative");
  TaubesDimension t;
  t.dimension = s / 2 - 1;
  t.euler_sign = (t.dimension + 1) % 2 == 0 ? 1 : -1;
  return t;
}

}  // namespace lefschetz
