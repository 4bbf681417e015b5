#pragma once

#include "lefschetz/free_group.hpp"

#include <optional>
#include <string>

namespace lefschetz {

enum class Verdict { yes, no, undetermined };
std::string to_string(Verdict v);

struct InnerCheck {
  Verdict verdict = Verdict::undetermined;
  std::optional<FreeWord> conjugator;  // rank n, letters in x_1..x_{n-1}
  std::string note;
};

// Decide whether an automorphism of F_n that preserves the class of
// x_1 ... x_n descends to an inner automorphism of
// pi_1(S^2 - n points) = <x_1..x_n | x_1 ... x_n>.
//
// The quotient is free on x_1..x_{n-1}.  A conjugator must have the form
// u x_1^k where u is read off the image of x_1; k is searched in
// [-window, window] and anything outside is reported undetermined.
InnerCheck sphere_quotient_is_inner(const FreeAutomorphism& a, std::size_t n, int window = 8);

// Image of w under x_n -> (x_1 ... x_{n-1})^-1, as a word of rank n.
FreeWord cap_last_puncture(const FreeWord& w);

}  // namespace lefschetz
