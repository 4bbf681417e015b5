#include "lefschetz/presentation.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace lefschetz {

namespace {

// lexicographically least cyclic permutation of w and w^-1
std::vector<Letter> cyclic_canonical(const FreeWord& w) {
  std::vector<Letter> best;
  for (const FreeWord& v : {w, w.inverse()}) {
    const auto& ls = v.letters();
    for (std::size_t s = 0; s < ls.size(); ++s) {
      std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(s), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(s));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

}  // namespace

void Presentation::add(const FreeWord& r) {
  if (generators == 0) return;
  if (r.rank() != generators) throw InputError("relator rank differs from generator count");
  FreeWord c = r.cyclic_core();
  if (c.is_identity()) return;
  const auto key = cyclic_canonical(c);
  for (const auto& existing : relators)
    if (existing.length() == c.length() && cyclic_canonical(existing) == key) return;
  relators.push_back(std::move(c));
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 1; i <= generators; ++i) os << (i > 1 ? ", " : "") << "x" << i;
  os << " | ";
  for (std::size_t k = 0; k < relators.size(); ++k) os << (k ? ", " : "") << relators[k].to_string();
  os << ">";
  return os.str();
}

AbelianGroup presentation_abelianization(const Presentation& p) {
  if (p.generators == 0) return {};
  IntMatrix m(p.generators, std::max<std::size_t>(p.relators.size(), 1));
  for (std::size_t c = 0; c < p.relators.size(); ++c) {
    const auto sums = p.relators[c].exponent_sums();
    for (std::size_t r = 0; r < p.generators; ++r) m(r, c) = sums[r];
  }
  return cokernel(m);
}

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options) {
  TietzeResult out;
  Presentation cur;
  cur.generators = p.generators;
  for (const auto& r : p.relators) cur.add(r);

  while (out.steps < options.max_steps && cur.generators > 0) {
    ++out.steps;
    // candidate: shortest relator containing some generator exactly once
    std::optional<std::pair<std::size_t, Letter>> pick;
    for (std::size_t k = 0; k < cur.relators.size(); ++k) {
      if (pick && cur.relators[k].length() >= cur.relators[pick->first].length()) continue;
      std::vector<int> count(cur.generators + 1, 0);
      for (Letter l : cur.relators[k].letters()) ++count[static_cast<std::size_t>(std::abs(l))];
      for (std::size_t g = 1; g <= cur.generators; ++g)
        if (count[g] == 1) {
          pick = {k, static_cast<Letter>(g)};
          break;
        }
    }
    if (!pick) break;

    const FreeWord& rel = cur.relators[pick->first];
    const Letter x = pick->second;
    const auto& ls = rel.letters();
    const auto pos = static_cast<std::size_t>(
        std::find_if(ls.begin(), ls.end(), [&](Letter l) { return std::abs(l) == x; }) - ls.begin());
    // rel rotated to x^e w; then x = w^-1 (e = 1) or x = w (e = -1)
    std::vector<Letter> w(ls.begin() + static_cast<std::ptrdiff_t>(pos) + 1, ls.end());
    w.insert(w.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(pos));
    FreeWord wx(cur.generators, w);
    const FreeWord value = ls[pos] > 0 ? wx.inverse() : wx;

    const std::size_t n = cur.generators - 1;
    std::size_t total = 0;
    std::vector<std::vector<Letter>> rewritten;
    for (std::size_t k = 0; k < cur.relators.size(); ++k) {
      if (k == pick->first) continue;
      std::vector<Letter> out_letters;
      for (Letter l : cur.relators[k].letters()) {
        if (std::abs(l) == x) {
          const FreeWord v = l > 0 ? value : value.inverse();
          out_letters.insert(out_letters.end(), v.letters().begin(), v.letters().end());
        } else {
          out_letters.push_back(l);
        }
      }
      total += out_letters.size();
      rewritten.push_back(std::move(out_letters));
    }
    if (total > options.max_total_length) break;

    Presentation next;
    next.generators = n;
    if (n > 0)
      for (auto& letters : rewritten) {
        for (Letter& l : letters)
          if (std::abs(l) > x) l += l > 0 ? -1 : 1;
        next.add(FreeWord(n, letters));
      }
    cur = std::move(next);
    ++out.eliminated;
  }
  out.presentation = std::move(cur);
  return out;
}

namespace {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_index)
      : cols_(2 * p.generators), max_(max_index), counts_(max_index, 0) {
    for (const auto& r : p.relators) {
      std::vector<std::size_t> cols;
      for (Letter l : r.letters()) cols.push_back(column(l));
      relators_.push_back(std::move(cols));
    }
  }

  std::vector<std::size_t> run() {
    if (cols_ == 0) {
      counts_[0] = 1;
      return counts_;
    }
    std::vector<int> table(max_ * cols_, -1);
    search(table, 1);
    return counts_;
  }

 private:
  static std::size_t column(Letter l) { return 2 * (static_cast<std::size_t>(std::abs(l)) - 1) + (l < 0 ? 1 : 0); }
  static std::size_t inverse_col(std::size_t c) { return c ^ 1u; }

  bool assign(std::vector<int>& t, std::size_t coset, std::size_t col, int value) const {
    int& fwd = t[coset * cols_ + col];
    int& back = t[static_cast<std::size_t>(value) * cols_ + inverse_col(col)];
    if (fwd != -1 && fwd != value) return false;
    if (back != -1 && back != static_cast<int>(coset)) return false;
    fwd = value;
    back = static_cast<int>(coset);
    return true;
  }

  // scan all relators from all cosets; fill single gaps; false on contradiction
  bool deduce(std::vector<int>& t, std::size_t n) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rel : relators_) {
        const std::size_t len = rel.size();
        for (std::size_t c = 0; c < n; ++c) {
          // forward
          int f = static_cast<int>(c);
          std::size_t i = 0;
          while (i < len && t[static_cast<std::size_t>(f) * cols_ + rel[i]] != -1)
            f = t[static_cast<std::size_t>(f) * cols_ + rel[i++]];
          if (i == len) {
            if (f != static_cast<int>(c)) return false;
            continue;
          }
          // backward from c along inverses
          int b = static_cast<int>(c);
          std::size_t j = len;
          while (j > i && t[static_cast<std::size_t>(b) * cols_ + inverse_col(rel[j - 1])] != -1)
            b = t[static_cast<std::size_t>(b) * cols_ + inverse_col(rel[--j])];
          if (j == i + 1) {
            if (!assign(t, static_cast<std::size_t>(f), rel[i], b)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void search(std::vector<int>& t, std::size_t n) {
    // first undefined entry
    std::size_t pos = n * cols_;
    for (std::size_t k = 0; k < n * cols_; ++k)
      if (t[k] == -1) {
        pos = k;
        break;
      }
    if (pos == n * cols_) {
      ++counts_[n - 1];
      return;
    }
    const std::size_t coset = pos / cols_;
    const std::size_t col = pos % cols_;
    const std::size_t limit = std::min(n + 1, max_);
    for (std::size_t v = 0; v < limit; ++v) {
      std::vector<int> next = t;
      if (!assign(next, coset, col, static_cast<int>(v))) continue;
      const std::size_t m = std::max(n, v + 1);
      if (!deduce(next, m)) continue;
      search(next, m);
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::size_t> counts_;
};

}  // namespace

std::vector<std::size_t> low_index_subgroup_counts(const Presentation& p, std::size_t max_index) {
  if (max_index == 0) throw InputError("max_index must be positive");
  if (max_index > 8) throw ResourceError("low-index enumeration capped at index 8");
  return CosetEnumerator(p, max_index).run();
}

OrderCertificate order_certificate(const Presentation& p) {
  OrderCertificate c;
  if (p.generators == 0) {
    c.order = BigInt(1);
    c.method = "no generators left";
    return c;
  }
  if (p.generators == 1) {
    BigInt g = 0;
    for (const auto& r : p.relators) g = gcd(g, BigInt(std::abs(r.exponent_sums()[0])));
    if (g == 0) {
      c.infinite = true;
      c.method = "one generator, no effective relator";
    } else {
      c.order = g;
      c.method = "one generator, gcd of relator exponents";
    }
    return c;
  }
  c.method = "undecided: more than one generator";
  return c;
}

}  // namespace lefschetz
