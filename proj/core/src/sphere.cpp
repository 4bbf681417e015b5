#include "lefschetz/sphere.hpp"

#include "lefschetz/errors.hpp"

#include <cstdlib>

namespace lefschetz {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

FreeWord cap_last_puncture(const FreeWord& w) {
  const std::size_t n = w.rank();
  FreeWord prefix(n);
  for (std::size_t i = 1; i < n; ++i) prefix *= FreeWord::generator(n, i);
  const FreeWord last = prefix.inverse();
  FreeWord out(n);
  for (Letter l : w.letters()) {
    if (static_cast<std::size_t>(std::abs(l)) == n)
      out *= l > 0 ? last : prefix;
    else
      out *= FreeWord(n, {l});
  }
  return out;
}

namespace {

// If v == x1^k x2' x1^-k for the single-letter word x2' = target, return k.
std::optional<long long> conjugating_power(const FreeWord& v, Letter target) {
  const auto& ls = v.letters();
  if (ls.size() % 2 == 0) return std::nullopt;
  const std::size_t k = ls.size() / 2;
  if (ls[k] != target) return std::nullopt;
  if (k == 0) return 0;
  const Letter head = ls[0];
  if (std::abs(head) != 1) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i)
    if (ls[i] != head || ls[ls.size() - 1 - i] != -head) return std::nullopt;
  return head > 0 ? static_cast<long long>(k) : -static_cast<long long>(k);
}

}  // namespace

InnerCheck sphere_quotient_is_inner(const FreeAutomorphism& a, std::size_t n, int window) {
  if (a.rank() != n) throw InputError("sphere_quotient_is_inner: automorphism rank differs from n");
  FreeWord relator(n);
  for (std::size_t i = 1; i <= n; ++i) relator *= FreeWord::generator(n, i);
  if (!are_conjugate(a.apply(relator), relator))
    throw InputError("automorphism does not preserve x1...xn up to conjugacy");

  InnerCheck out;
  if (n == 1) {
    out.verdict = Verdict::yes;
    out.conjugator = FreeWord(n);
    out.note = "quotient group is trivial";
    return out;
  }

  std::vector<FreeWord> img;
  for (std::size_t i = 1; i < n; ++i) img.push_back(cap_last_puncture(a.image(i)));
  const FreeWord x1 = FreeWord::generator(n, 1);

  if (n == 2) {
    // quotient is Z: only the identity is inner
    out.verdict = img[0] == x1 ? Verdict::yes : Verdict::no;
    if (out.verdict == Verdict::yes) out.conjugator = FreeWord(n);
    out.note = "quotient group is infinite cyclic";
    return out;
  }

  FreeWord u(n);
  const FreeWord core = img[0].cyclic_core(&u);
  if (core != x1) {
    out.verdict = Verdict::no;
    out.note = "image of x1 is not conjugate to x1 in the quotient";
    return out;
  }
  // conjugator is u x1^k; the image of x2 pins k down
  const FreeWord v = u.inverse() * img[1] * u;
  const auto k = conjugating_power(v, 2);
  if (!k) {
    out.verdict = Verdict::no;
    out.note = "image of x2 is not conjugate to x2 by any u x1^k";
    return out;
  }
  if (std::llabs(*k) > window) {
    out.verdict = Verdict::undetermined;
    out.note = "conjugator exponent " + std::to_string(*k) + " outside search window";
    return out;
  }
  const FreeWord w = u * x1.pow(*k);
  for (std::size_t i = 1; i < n; ++i) {
    if (FreeWord::generator(n, i).conjugated_by(w) != img[i - 1]) {
      out.verdict = Verdict::no;
      out.note = "conjugation by the candidate fails on x" + std::to_string(i);
      return out;
    }
  }
  out.verdict = Verdict::yes;
  out.conjugator = w;
  return out;
}

}  // namespace lefschetz
