#pragma once

#include "lefschetz/braid.hpp"
#include "lefschetz/free_group.hpp"
#include "lefschetz/permutation.hpp"

#include <string>
#include <string_view>

namespace lefschetz {

// Whitespace-separated tokens.  Braids and free words: `x3`, `x3^-1`,
// `x2^4`.  SL(2,Z) words: `A`, `B^-1`.  "1" or an empty string is the
// identity.  Unknown tokens raise InputError.
BraidWord parse_braid(std::string_view text, std::size_t strands);
FreeWord parse_free_word(std::string_view text, std::size_t rank);
FreeWord parse_sl2z_word(std::string_view text);
std::string format_sl2z_word(const FreeWord& w);

// Cycle notation "(1 2)(3 4)"; "()" is the identity.
Permutation parse_permutation(std::string_view text, std::size_t degree);

}  // namespace lefschetz
