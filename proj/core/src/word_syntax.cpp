#include "lefschetz/word_syntax.hpp"

#include "lefschetz/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace lefschetz {

namespace {

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

long long parse_int(std::string_view s, std::string_view token) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("malformed token '" + std::string(token) + "'");
  return v;
}

struct Power {
  std::string base;
  long long exponent = 1;
};

Power split_power(const std::string& token) {
  Power p;
  auto caret = token.find('^');
  p.base = token.substr(0, caret);
  if (caret != std::string::npos) p.exponent = parse_int(std::string_view(token).substr(caret + 1), token);
  return p;
}

// x<i>^<e> tokens as signed letters, index checked against max_index
std::vector<Letter> indexed_letters(std::string_view text, std::size_t max_index) {
  std::vector<Letter> out;
  for (const auto& tok : tokens(text)) {
    if (tok == "1") continue;
    Power p = split_power(tok);
    if (p.base.size() < 2 || p.base[0] != 'x') throw InputError("unknown token '" + tok + "'");
    long long i = parse_int(std::string_view(p.base).substr(1), tok);
    if (i < 1 || static_cast<std::size_t>(i) > max_index)
      throw InputError("generator index out of range in '" + tok + "'");
    for (long long k = 0; k < std::llabs(p.exponent); ++k)
      out.push_back(p.exponent > 0 ? static_cast<Letter>(i) : -static_cast<Letter>(i));
  }
  return out;
}

}  // namespace

BraidWord parse_braid(std::string_view text, std::size_t strands) {
  return BraidWord(strands, indexed_letters(text, strands == 0 ? 0 : strands - 1));
}

FreeWord parse_free_word(std::string_view text, std::size_t rank) {
  return FreeWord(rank, indexed_letters(text, rank));
}

FreeWord parse_sl2z_word(std::string_view text) {
  std::vector<Letter> out;
  for (const auto& tok : tokens(text)) {
    if (tok == "1" || tok == "I") continue;
    Power p = split_power(tok);
    Letter l = 0;
    if (p.base == "A")
      l = 1;
    else if (p.base == "B")
      l = 2;
    else
      throw InputError("unknown SL(2,Z) token '" + tok + "'");
    for (long long k = 0; k < std::llabs(p.exponent); ++k) out.push_back(p.exponent > 0 ? l : -l);
  }
  return FreeWord(2, std::move(out));
}

std::string format_sl2z_word(const FreeWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters().size(); ++k) {
    Letter l = w.letters()[k];
    os << (k ? " " : "") << (std::abs(l) == 1 ? 'A' : 'B');
    if (l < 0) os << "^-1";
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("cycle notation: expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw InputError("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw InputError("cycle notation: unexpected character '" + std::string(1, text[i]) + "'");
      cyc.push_back(static_cast<std::uint32_t>(parse_int(text.substr(i, j - i), text)));
      i = j;
    }
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace lefschetz
