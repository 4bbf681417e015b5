#pragma once

#include "lefschetz/bigint.hpp"

namespace lefschetz {

struct MoishezonFamily {
  BigInt degree;  // d_p
  BigInt cusps;   // kappa_p
  BigInt nodes;   // nu_p
  // c_1(K) = omega_coefficient [omega] + torus_coefficient PD([T])
  Rational omega_coefficient;
  BigInt torus_coefficient;
  bool proportional = false;
};

// Branch curve numerics of the family indexed by p >= 2 and twist count k.
MoishezonFamily moishezon_family(long long p, long long k);

}  // namespace lefschetz
