#include "lefschetz/permutation.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lefschetz {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw InputError("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(const std::vector<std::uint32_t>& images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::uint32_t v = images[i];
    if (v < 1 || v > images.size() || seen[v - 1])
      throw InputError("permutation images are not a bijection of 1..N");
    seen[v - 1] = true;
    p.images_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
  if (a == b || a < 1 || b < 1 || a > degree || b > degree)
    throw InputError("invalid transposition (" + std::to_string(a) + " " + std::to_string(b) + ")");
  Permutation p(degree);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::uint32_t a = cyc[k];
      std::uint32_t b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || a > degree || used[a - 1])
        throw InputError("cycle notation: point out of range or repeated");
      used[a - 1] = true;
      p.images_[a - 1] = b - 1;
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_transposition() const { return support().size() == 2; }

std::vector<std::uint32_t> Permutation::support() const {
  std::vector<std::uint32_t> s;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) s.push_back(static_cast<std::uint32_t>(i + 1));
  return s;
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

Permutation Permutation::inverse() const {
  Permutation q(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return q;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<std::uint32_t> cyc;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<std::uint32_t>(j + 1));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InputError("permutation degree mismatch");
  Permutation r(p.degree());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Permutation conjugate_by(const Permutation& p, const Permutation& g) { return g.inverse() * p * g; }

bool generates_transitive(const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      std::uint32_t y = g.zero_based().at(x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

}  // namespace lefschetz

std::size_t std::hash<lefschetz::Permutation>::operator()(const lefschetz::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.zero_based()) h = (h ^ v) * 1099511628211ull;
  return h;
}
