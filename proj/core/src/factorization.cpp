#include "lefschetz/factorization.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/word_syntax.hpp"

#include <cstdlib>
#include <sstream>

namespace lefschetz {

Element::Element(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push(l);
}

void Element::push(Letter l) {
  if (l == 0) throw InputError("letter 0 is not a generator");
  if (!letters_.empty() && letters_.back() == -l)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

long long Element::exponent_sum() const {
  long long s = 0;
  for (Letter l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

Element Element::inverse() const {
  Element e;
  e.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) e.letters_.push_back(-*it);
  return e;
}

Element Element::conjugated_by(const Element& g) const { return g * *this * g.inverse(); }

Element& Element::operator*=(const Element& rhs) {
  for (Letter l : rhs.letters_) push(l);
  return *this;
}

std::size_t GroupContext::letter_bound() const {
  switch (kind) {
    case ContextKind::braid: return size == 0 ? 0 : size - 1;
    case ContextKind::sl2z: return 2;
    case ContextKind::free: return size;
  }
  return 0;
}

void GroupContext::check(const Element& e) const {
  const std::size_t bound = letter_bound();
  for (Letter l : e.letters())
    if (static_cast<std::size_t>(std::abs(l)) > bound)
      throw InputError("letter " + std::to_string(l) + " does not belong to " + name());
}

std::string GroupContext::name() const {
  switch (kind) {
    case ContextKind::braid: return "B_" + std::to_string(size);
    case ContextKind::sl2z: return "SL(2,Z)";
    case ContextKind::free: return "F_" + std::to_string(size);
  }
  return "?";
}

BraidWord GroupContext::as_braid(const Element& a) const {
  if (kind != ContextKind::braid) throw InputError("element is not a braid");
  return BraidWord(size, a.letters());
}

SL2ZMatrix GroupContext::as_matrix(const Element& a) const {
  if (kind != ContextKind::sl2z) throw InputError("element is not an SL(2,Z) word");
  return sl2z_eval(FreeWord(2, a.letters()));
}

bool GroupContext::is_identity(const Element& a, const WordLimits& limits) const {
  check(a);
  if (a.empty()) return true;
  switch (kind) {
    case ContextKind::braid: return artin_automorphism(as_braid(a), limits).is_identity();
    case ContextKind::sl2z: return as_matrix(a).is_identity();
    case ContextKind::free: return false;
  }
  return false;
}

bool GroupContext::equal(const Element& a, const Element& b, const WordLimits& limits) const {
  if (a == b) return true;
  return is_identity(a * b.inverse(), limits);
}

std::string GroupContext::canonical(const Element& a, const WordLimits& limits) const {
  check(a);
  switch (kind) {
    case ContextKind::braid: {
      if (size < 2) return "";
      std::string s;
      const FreeAutomorphism phi = artin_automorphism(as_braid(a), limits);
      for (const auto& img : phi.images()) {
        s += img.to_string();
        s += ';';
      }
      return s;
    }
    case ContextKind::sl2z: {
      const SL2ZMatrix m = as_matrix(a);
      return m.to_string();
    }
    case ContextKind::free: return FreeWord(size, a.letters()).to_string();
  }
  return "";
}

std::string GroupContext::format(const Element& a) const {
  switch (kind) {
    case ContextKind::braid: return as_braid(a).to_string();
    case ContextKind::sl2z: return format_sl2z_word(FreeWord(2, a.letters()));
    case ContextKind::free: return a.empty() ? "" : FreeWord(size, a.letters()).to_string();
  }
  return "";
}

Element GroupContext::parse(const std::string& text) const {
  switch (kind) {
    case ContextKind::braid: return Element(parse_braid(text, size).letters());
    case ContextKind::sl2z: return Element(parse_sl2z_word(text).letters());
    case ContextKind::free: return Element(parse_free_word(text, size).letters());
  }
  return {};
}

Element Factorization::target_element() const {
  switch (target.kind) {
    case TargetKind::identity: return {};
    case TargetKind::full_twist:
      if (context.kind != ContextKind::braid) throw InputError("full_twist target needs a braid context");
      if (context.size < 2) return {};
      return Element(full_twist(context.size).letters());
    case TargetKind::element: return target.element;
  }
  return {};
}

Element Factorization::product() const {
  Element p;
  for (const auto& a : factors) p *= a;
  return p;
}

long long Factorization::exponent_sum() const {
  long long s = 0;
  for (const auto& a : factors) s += a.exponent_sum();
  return s;
}

bool verify_product(const Factorization& f, const WordLimits& limits) {
  for (const auto& a : f.factors) f.context.check(a);
  return f.context.equal(f.product(), f.target_element(), limits);
}

bool factorizations_equal(const Factorization& a, const Factorization& b, const WordLimits& limits) {
  if (!(a.context == b.context) || a.factors.size() != b.factors.size()) return false;
  if (!a.context.equal(a.target_element(), b.target_element(), limits)) return false;
  for (std::size_t k = 0; k < a.factors.size(); ++k)
    if (!a.context.equal(a.factors[k], b.factors[k], limits)) return false;
  return true;
}

Factorization hurwitz_move(const Factorization& f, std::size_t i, int dir) {
  if (i < 1 || i >= f.factors.size())
    throw InputError("Hurwitz index " + std::to_string(i) + " out of range for " +
                     std::to_string(f.factors.size()) + " factors");
  if (dir != 1 && dir != -1) throw InputError("Hurwitz direction must be +1 or -1");
  Factorization g = f;
  hurwitz_step(g.factors, dir > 0 ? static_cast<Letter>(i) : -static_cast<Letter>(i),
               [](const Element& e) { return e.inverse(); });
  return g;
}

Factorization global_conjugate(const Factorization& f, const Element& g) {
  f.context.check(g);
  Factorization out = f;
  for (auto& a : out.factors) a = a.conjugated_by(g);
  if (out.target.kind == TargetKind::element) out.target.element = out.target.element.conjugated_by(g);
  return out;
}

Factorization insert_pair(const Factorization& f, std::size_t i, const Element& g, const Admissibility& admissible) {
  f.context.check(g);
  if (i < 1 || i > f.factors.size() + 1) throw InputError("insert_pair position out of range");
  if (admissible && !admissible(g, f)) throw InputError("pair is not admissible");
  Factorization out = f;
  auto it = out.factors.begin() + static_cast<std::ptrdiff_t>(i - 1);
  it = out.factors.insert(it, g.inverse());
  out.factors.insert(it, g);
  return out;
}

Factorization delete_pair(const Factorization& f, std::size_t i) {
  if (i < 1 || i + 1 > f.factors.size()) throw InputError("delete_pair position out of range");
  if (!f.context.is_identity(f.factors[i - 1] * f.factors[i]))
    throw InputError("factors at " + std::to_string(i) + ", " + std::to_string(i + 1) + " are not mutually inverse");
  Factorization out = f;
  auto it = out.factors.begin() + static_cast<std::ptrdiff_t>(i - 1);
  out.factors.erase(it, it + 2);
  return out;
}

Factorization twisted_fiber_sum(const Factorization& f1, const Factorization& f2, const Element& phi) {
  if (!(f1.context == f2.context)) throw InputError("fiber sum of factorizations in different groups");
  if (f1.target.kind != TargetKind::identity || f2.target.kind != TargetKind::identity)
    throw InputError("fiber sum needs identity targets");
  f1.context.check(phi);
  Factorization out = f1;
  const Element phi_inv = phi.inverse();
  for (const auto& a : f2.factors) out.factors.push_back(phi_inv * a * phi);
  return out;
}

std::string Move::describe(const GroupContext& ctx) const {
  std::ostringstream os;
  switch (type) {
    case MoveType::hurwitz: os << "hurwitz(" << index << (direction > 0 ? ",+1)" : ",-1)"); break;
    case MoveType::conjugate: os << "conjugate(" << ctx.format(element) << ")"; break;
    case MoveType::insert_pair: os << "insert_pair(" << index << "," << ctx.format(element) << ")"; break;
    case MoveType::delete_pair: os << "delete_pair(" << index << ")"; break;
  }
  return os.str();
}

Factorization apply_move(const Factorization& f, const Move& m, const Admissibility& admissible) {
  switch (m.type) {
    case MoveType::hurwitz: return hurwitz_move(f, m.index, m.direction);
    case MoveType::conjugate: return global_conjugate(f, m.element);
    case MoveType::insert_pair: return insert_pair(f, m.index, m.element, admissible);
    case MoveType::delete_pair: return delete_pair(f, m.index);
  }
  return f;
}

Factorization replay(const Factorization& f, const MovePath& path, const Admissibility& admissible) {
  Factorization cur = f;
  for (const auto& m : path) cur = apply_move(cur, m, admissible);
  return cur;
}

}  // namespace lefschetz
