#include "lefschetz/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lefschetz {

FreeWord::FreeWord(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw InputError("free group rank must be positive");
}

FreeWord::FreeWord(std::size_t rank, std::vector<Letter> letters) : FreeWord(rank) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push(l);
}

FreeWord FreeWord::generator(std::size_t rank, std::size_t i, int exponent) {
  FreeWord w(rank);
  Letter l = exponent >= 0 ? static_cast<Letter>(i) : -static_cast<Letter>(i);
  for (int k = 0; k < std::abs(exponent); ++k) w.push(l);
  return w;
}

void FreeWord::push(Letter l) {
  if (l == 0 || static_cast<std::size_t>(std::abs(l)) > rank_)
    throw InputError("generator index " + std::to_string(l) + " out of range for rank " +
                     std::to_string(rank_));
  if (!letters_.empty() && letters_.back() == -l)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FreeWord FreeWord::inverse() const {
  FreeWord w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

FreeWord FreeWord::pow(long long n) const {
  FreeWord base = n >= 0 ? *this : inverse();
  FreeWord out(rank_);
  for (long long k = 0; k < std::llabs(n); ++k) out *= base;
  return out;
}

FreeWord FreeWord::conjugated_by(const FreeWord& g) const { return g * *this * g.inverse(); }

FreeWord FreeWord::cyclic_core(FreeWord* outer) const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  if (outer) *outer = FreeWord(rank_, std::vector<Letter>(letters_.begin(), letters_.begin() + lo));
  return FreeWord(rank_, std::vector<Letter>(letters_.begin() + lo, letters_.begin() + hi));
}

std::vector<long long> FreeWord::exponent_sums() const {
  std::vector<long long> s(rank_, 0);
  for (Letter l : letters_) s[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return s;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long e = static_cast<long long>(j - i) * (letters_[i] > 0 ? 1 : -1);
    os << (first ? "" : " ") << 'x' << std::abs(letters_[i]);
    if (e != 1) os << '^' << e;
    first = false;
    i = j;
  }
  return os.str();
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  if (rhs.rank_ != rank_) throw InputError("free word rank mismatch");
  for (Letter l : rhs.letters_) push(l);
  return *this;
}

bool are_conjugate(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) return false;
  const auto a = u.cyclic_core().letters();
  const auto b = v.cyclic_core().letters();
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Letter> doubled(a);
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

FreeAutomorphism::FreeAutomorphism(std::size_t rank) : rank_(rank) {
  for (std::size_t i = 1; i <= rank; ++i) images_.push_back(FreeWord::generator(rank, i));
}

FreeAutomorphism::FreeAutomorphism(std::size_t rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (images_.size() != rank_) throw InputError("automorphism needs one image per generator");
  for (const auto& w : images_)
    if (w.rank() != rank_) throw InputError("automorphism image has wrong rank");
}

bool FreeAutomorphism::is_identity() const { return *this == FreeAutomorphism(rank_); }

FreeWord FreeAutomorphism::apply(const FreeWord& w, const WordLimits& limits) const {
  if (w.rank() != rank_) throw InputError("automorphism applied to word of wrong rank");
  FreeWord out(rank_);
  for (Letter l : w.letters()) {
    const FreeWord& img = images_[std::abs(l) - 1];
    out *= l > 0 ? img : img.inverse();
    if (out.length() > limits.max_length)
      throw ResourceError("free word exceeded length ceiling " + std::to_string(limits.max_length));
  }
  return out;
}

FreeAutomorphism FreeAutomorphism::conjugation(const FreeWord& g) {
  std::vector<FreeWord> imgs;
  for (std::size_t i = 1; i <= g.rank(); ++i) imgs.push_back(FreeWord::generator(g.rank(), i).conjugated_by(g));
  return FreeAutomorphism(g.rank(), std::move(imgs));
}

FreeAutomorphism operator*(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank_ != b.rank_) throw InputError("automorphism rank mismatch");
  std::vector<FreeWord> imgs;
  imgs.reserve(b.rank_);
  for (const auto& w : b.images_) imgs.push_back(a.apply(w));
  return FreeAutomorphism(a.rank_, std::move(imgs));
}

}  // namespace lefschetz
