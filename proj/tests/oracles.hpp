#pragma once
// Small, deliberately naive re-implementations used as test oracles.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline Word reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word inv(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

inline Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce(a);
}

// Substitute images for x_i in w.
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int l : w) out = cat(out, l > 0 ? images[l - 1] : inv(images[-l - 1]));
  return out;
}

// Images of x_1..x_d under the braid word, letter by letter, as the
// composite map phi_{l1} o phi_{l2} o ...: images[i] = phi_{l1}(phi_{l2}(...(x_i))).
inline std::vector<Word> artin(const Word& braid, int d) {
  std::vector<Word> images;
  for (int i = 1; i <= d; ++i) images.push_back({i});
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
    const int l = *it;
    const int i = std::abs(l);
    std::vector<Word> gen;
    for (int k = 1; k <= d; ++k) gen.push_back({k});
    if (l > 0) {
      gen[i - 1] = {i, i + 1, -i};
      gen[i] = {i};
    } else {
      gen[i - 1] = {i + 1};
      gen[i] = {-(i + 1), i, i + 1};
    }
    for (auto& img : images) img = substitute(img, gen);
  }
  return images;
}

struct M2 {
  long long a, b, c, d;
  friend M2 operator*(M2 x, M2 y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(M2, M2) = default;
};

inline M2 sl2(const Word& w) {
  const M2 A{1, 1, 0, 1}, Ai{1, -1, 0, 1}, B{1, 0, -1, 1}, Bi{1, 0, 1, 1};
  M2 m{1, 0, 0, 1};
  for (int l : w) m = m * (l == 1 ? A : l == -1 ? Ai : l == 2 ? B : Bi);
  return m;
}

// Permutations as 0-based image vectors; product applies p then q.
using Perm = std::vector<int>;
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}
inline Perm swap_perm(int n, int a, int b) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(b - 1)]);
  return p;
}

// Strand permutation of a braid word, strand positions swapped per letter.
inline Perm strands(const Word& braid, int d) {
  Perm p(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int l : braid) p = compose(p, swap_perm(d, std::abs(l), std::abs(l) + 1));
  return p;
}

// Hurwitz action on a tuple of transpositions, each stored as a sorted pair.
using Tr = std::pair<int, int>;
inline int apply_tr(Tr t, int x) { return x == t.first ? t.second : x == t.second ? t.first : x; }
inline Tr sorted(int a, int b) { return a < b ? Tr{a, b} : Tr{b, a}; }
// a b a^-1 for transpositions is the transposition a relabels b to.
inline Tr conj(Tr a, Tr b) { return sorted(apply_tr(a, b.first), apply_tr(a, b.second)); }

inline std::vector<Tr> hurwitz(std::vector<Tr> t, const Word& braid) {
  for (int l : braid) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l));
    Tr& a = t[i - 1];
    Tr& b = t[i];
    if (l > 0) {
      const Tr na = conj(a, b);
      b = a;
      a = na;
    } else {
      const Tr nb = conj(b, a);
      a = b;
      b = nb;
    }
  }
  return t;
}

inline Word random_word(std::mt19937_64& rng, int gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> g(1, gens);
  Word w;
  const std::size_t n = len(rng);
  for (std::size_t k = 0; k < n; ++k) w.push_back(rng() % 2 ? g(rng) : -g(rng));
  return w;
}

}  // namespace oracle
