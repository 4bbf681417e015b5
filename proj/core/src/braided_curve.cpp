#include "lefschetz/braided_curve.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lefschetz {

BraidWord CurveFactor::braid() const {
  return conjugator * BraidWord::generator(conjugator.strands(), base, exponent) * conjugator.inverse();
}

std::string factor_type(int exponent) {
  switch (exponent) {
    case 1: return "tangency";
    case 2: return "positive node";
    case -2: return "negative node";
    case 3: return "cusp";
    default: return "invalid";
  }
}

void BraidedCurveSpec::validate() const {
  if (degree < 1) throw InputError("curve degree must be positive");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    const std::string where = "factor " + std::to_string(k + 1) + ": ";
    if (f.conjugator.strands() != degree) throw InputError(where + "conjugator lives in the wrong braid group");
    if (f.base < 1 || f.base + 1 > degree) throw InputError(where + "base generator out of range");
    if (f.exponent != 1 && f.exponent != 2 && f.exponent != -2 && f.exponent != 3)
      throw InputError(where + "exponent must be one of 1, 2, -2, 3");
  }
}

Factorization BraidedCurveSpec::as_factorization() const {
  validate();
  Factorization f;
  f.context = GroupContext::braid(degree);
  f.target = Target::full_twist();
  for (const auto& q : factors) f.factors.emplace_back(q.braid().letters());
  return f;
}

void BranchData::validate() const {
  if (sheets < 1) throw InputError("sheet count must be positive");
  for (std::size_t k = 0; k < transpositions.size(); ++k) {
    if (transpositions[k].degree() != sheets)
      throw InputError("assignment " + std::to_string(k + 1) + " has the wrong degree");
    if (!transpositions[k].is_transposition())
      throw InputError("assignment " + std::to_string(k + 1) + " is not a transposition");
  }
}

bool BranchData::transitive() const { return generates_transitive(transpositions, sheets); }

Permutation BranchData::evaluate(const FreeWord& w) const {
  if (w.rank() != transpositions.size()) throw InputError("branch data length differs from word rank");
  return lefschetz::evaluate(w, transpositions, Permutation(sheets), [](const Permutation& p) { return p.inverse(); });
}

CurveReport verify_braided_curve(const BraidedCurveSpec& spec, const WordLimits& limits) {
  spec.validate();
  CurveReport r;
  for (const auto& f : spec.factors) r.exponent_sum += f.exponent;
  r.expected_sum = static_cast<long long>(spec.degree * (spec.degree - 1));
  r.checksum_ok = r.exponent_sum == r.expected_sum;
  if (!r.checksum_ok) {
    r.notes.push_back("exponent checksum " + std::to_string(r.exponent_sum) + " != d(d-1) = " +
                      std::to_string(r.expected_sum));
    return r;
  }
  try {
    r.product_ok = verify_product(spec.as_factorization(), limits);
  } catch (const ResourceError& e) {
    r.notes.push_back(std::string("product check undetermined: ") + e.what());
    return r;
  }
  if (!*r.product_ok) r.notes.push_back("product of factors is not the full twist");
  r.valid = *r.product_ok;
  return r;
}

std::pair<FreeWord, FreeWord> local_meridians(const CurveFactor& f, std::size_t degree) {
  const FreeAutomorphism a = artin_automorphism(f.conjugator);
  (void)degree;
  return {a.image(f.base), a.image(f.base + 1)};
}

namespace {

bool disjoint(const Permutation& a, const Permutation& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  std::vector<std::uint32_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return common.empty();
}

std::size_t shared_points(const Permutation& a, const Permutation& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  std::vector<std::uint32_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return common.size();
}

}  // namespace

ThetaReport theta_compatible(const BraidedCurveSpec& spec, const BranchData& branch) {
  spec.validate();
  branch.validate();
  if (branch.transpositions.size() != spec.degree)
    throw InputError("branch data has " + std::to_string(branch.transpositions.size()) +
                     " transpositions for degree " + std::to_string(spec.degree));
  ThetaReport r;
  const std::size_t d = spec.degree;

  // theta extends over the relators of the curve complement
  r.relators_killed = true;
  for (std::size_t k = 0; k < spec.factors.size(); ++k) {
    const FreeAutomorphism a = artin_automorphism(spec.factors[k].braid());
    for (std::size_t i = 1; i <= d; ++i)
      if (branch.evaluate(a.image(i)) != branch.transpositions[i - 1]) {
        r.relators_killed = false;
        r.diagnostics.push_back("factor " + std::to_string(k + 1) + " relator at gamma_" + std::to_string(i) +
                                " not killed by theta");
        break;
      }
  }
  FreeWord proj(d);
  for (std::size_t i = 1; i <= d; ++i) proj *= FreeWord::generator(d, i);
  if (!branch.evaluate(proj).is_identity()) {
    r.relators_killed = false;
    r.diagnostics.push_back("theta(gamma_1 ... gamma_d) is not the identity");
  }

  r.local_types_ok = true;
  for (std::size_t k = 0; k < spec.factors.size(); ++k) {
    const auto& f = spec.factors[k];
    const auto [m1, m2] = local_meridians(f, d);
    const Permutation t1 = branch.evaluate(m1);
    const Permutation t2 = branch.evaluate(m2);
    bool ok = false;
    std::string want;
    switch (f.exponent) {
      case 1:
        ok = t1 == t2;
        want = "equal";
        break;
      case 2:
      case -2:
        ok = disjoint(t1, t2);
        want = "disjoint";
        break;
      case 3:
        ok = shared_points(t1, t2) == 1;
        want = "adjacent";
        break;
    }
    if (!ok) {
      r.local_types_ok = false;
      r.diagnostics.push_back("factor " + std::to_string(k + 1) + " (" + factor_type(f.exponent) +
                              "): local meridians map to " + t1.to_string() + ", " + t2.to_string() +
                              ", expected " + want + " transpositions");
    }
  }
  r.transitive = branch.transitive();
  if (!r.transitive) r.diagnostics.push_back("image of theta is not transitive");
  r.compatible = r.relators_killed && r.local_types_ok && r.transitive;
  return r;
}

namespace {

// all reduced words of length <= max_len over rank generators, shortlex order
std::vector<FreeWord> words_up_to(std::size_t rank, std::size_t max_len) {
  std::vector<FreeWord> out{FreeWord(rank)};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      const std::vector<Letter> ls = out[k].letters();
      for (std::size_t g = 1; g <= rank; ++g)
        for (int s : {1, -1}) {
          const Letter l = s * static_cast<Letter>(g);
          if (!ls.empty() && ls.back() == -l) continue;
          std::vector<Letter> next = ls;
          next.push_back(l);
          out.emplace_back(rank, std::move(next));
        }
    }
    begin = end;
  }
  return out;
}

}  // namespace

Presentation zvk_presentation(const BraidedCurveSpec& spec, const ZvkOptions& options, const BranchData* branch) {
  spec.validate();
  const std::size_t d = spec.degree;
  Presentation p;
  p.generators = d;
  for (const auto& f : spec.factors) {
    const FreeAutomorphism a = artin_automorphism(f.braid());
    for (std::size_t i = 1; i <= d; ++i) p.add(FreeWord::generator(d, i).inverse() * a.image(i));
  }
  FreeWord proj(d);
  for (std::size_t i = 1; i <= d; ++i) proj *= FreeWord::generator(d, i);
  p.add(proj);

  if (options.stabilized) {
    if (!branch) throw InputError("stabilized presentation needs branch data");
    branch->validate();
    if (branch->transpositions.size() != d) throw InputError("branch data length differs from degree");
    std::set<std::vector<Letter>> seen;
    for (const auto& r : p.relators) seen.insert(r.letters());
    for (const FreeWord& v : words_up_to(d, options.conjugator_length)) {
      const Permutation tv = branch->evaluate(v);
      const Permutation tv_inv = tv.inverse();
      for (std::size_t j = 1; j <= d; ++j) {
        const FreeWord c = FreeWord::generator(d, j).conjugated_by(v);
        const Permutation tc = tv * branch->transpositions[j - 1] * tv_inv;
        for (std::size_t i = 1; i <= d; ++i) {
          if (!disjoint(branch->transpositions[i - 1], tc)) continue;
          const FreeWord gi = FreeWord::generator(d, i);
          FreeWord comm = (gi * c * gi.inverse() * c.inverse()).cyclic_core();
          if (comm.is_identity() || !seen.insert(comm.letters()).second) continue;
          if (p.relators.size() >= options.max_relators)
            throw ResourceError("stabilized presentation exceeds " + std::to_string(options.max_relators) +
                                " relators");
          p.relators.push_back(std::move(comm));
        }
      }
    }
  }
  return p;
}

StructureReport structure_sequence_check(const Presentation& p, const BranchData& branch, std::size_t d) {
  branch.validate();
  if (d < 1) throw InputError("degree must be positive");
  if (p.generators != branch.transpositions.size())
    throw InputError("presentation and branch data have different generator counts");
  if (branch.sheets > 8) throw ResourceError("structure check enumerates S_N x Z_d only for N <= 8");
  for (const auto& r : p.relators) {
    if (!branch.evaluate(r).is_identity())
      throw InputError("theta is not a homomorphism on the presentation: relator " + r.to_string());
    long long s = 0;
    for (long long e : r.exponent_sums()) s += e;
    if (s % static_cast<long long>(d) != 0)
      throw InputError("degree map is not a homomorphism: relator " + r.to_string());
  }

  StructureReport r;
  std::size_t fact = 1;
  for (std::size_t k = 2; k <= branch.sheets; ++k) fact *= k;
  r.ambient_order = fact * d;

  using Elt = std::pair<Permutation, std::size_t>;
  std::set<Elt> seen;
  std::vector<Elt> queue{{Permutation(branch.sheets), 0}};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elt cur = queue[head];
    for (const auto& t : branch.transpositions) {
      Elt next{cur.first * t, (cur.second + 1) % d};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  r.image_order = seen.size();
  r.index = r.ambient_order / r.image_order;
  std::set<Permutation> distinct(branch.transpositions.begin(), branch.transpositions.end());
  for (const auto& t : distinct) r.image_generators.push_back("(" + t.to_string() + ", 1)");

  r.parity_defined = d % 2 == 0;
  if (!r.parity_defined) {
    r.notes.push_back("d odd: (-1)^c is not defined on Z_d");
  } else {
    r.image_in_parity_kernel = true;
    for (const auto& [perm, c] : seen)
      if (perm.sign() * (c % 2 == 0 ? 1 : -1) != 1) r.image_in_parity_kernel = false;
  }
  if (branch.sheets == 1) r.notes.push_back("N = 1: image is Z_d, degenerate case");
  r.pass = r.parity_defined && r.image_in_parity_kernel && r.index == 2 && branch.sheets > 1;
  return r;
}

BranchData canonical_branch(const BranchData& b) {
  const std::size_t n = b.sheets;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  BranchData best = b;
  do {
    const Permutation g = Permutation::from_images(perm);
    BranchData c{n, {}};
    for (const auto& t : b.transpositions) c.transpositions.push_back(conjugate_by(t, g));
    if (c.transpositions < best.transpositions) best = std::move(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ThetaEnumeration enumerate_thetas(const BraidedCurveSpec& spec, std::size_t sheets, std::size_t bound) {
  ThetaEnumeration out;
  const CurveReport cr = verify_braided_curve(spec);
  if (!cr.valid) {
    out.diagnostics.push_back("spec rejected by verify_braided_curve");
    out.diagnostics.insert(out.diagnostics.end(), cr.notes.begin(), cr.notes.end());
    return out;
  }
  if (sheets < 2) {
    out.diagnostics.push_back("no transpositions exist in S_" + std::to_string(sheets));
    return out;
  }
  if (sheets > 8) throw ResourceError("theta enumeration limited to N <= 8");
  const std::size_t d = spec.degree;
  std::vector<Permutation> choices;
  for (std::uint32_t a = 1; a <= sheets; ++a)
    for (std::uint32_t b = a + 1; b <= sheets; ++b) choices.push_back(Permutation::transposition(sheets, a, b));

  std::set<std::vector<Permutation>> found;
  // first transposition fixed to (1 2): every class has such a member
  BranchData cur{sheets, std::vector<Permutation>(d, choices.front())};
  std::function<bool(std::size_t)> fill = [&](std::size_t k) -> bool {
    if (k == d) {
      if (out.examined >= bound) {
        out.bound_exceeded = true;
        out.diagnostics.push_back("bound of " + std::to_string(bound) + " assignments reached");
        return false;
      }
      ++out.examined;
      if (theta_compatible(spec, cur).compatible) found.insert(canonical_branch(cur).transpositions);
      return true;
    }
    for (const auto& c : choices) {
      cur.transpositions[k] = c;
      if (!fill(k + 1)) return false;
    }
    return true;
  };
  fill(1);
  for (const auto& t : found) out.classes.push_back(BranchData{sheets, t});
  return out;
}

LambdaQuotient lambda_quotient(const std::vector<std::pair<long long, long long>>& pairs, std::size_t sheets) {
  if (sheets < 1) throw InputError("sheet count must be positive");
  IntMatrix m(2, std::max<std::size_t>(pairs.size(), 1));
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    m(0, c) = pairs[c].first;
    m(1, c) = pairs[c].second;
  }
  LambdaQuotient q;
  q.quotient = cokernel(m);
  q.power = sheets - 1;
  q.summary = "(" + q.quotient.to_string() + ")^" + std::to_string(q.power);
  return q;
}

}  // namespace lefschetz
