#include "lefschetz/moishezon.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

MoishezonFamily moishezon_family(long long p, long long k) {
  if (p < 2) throw InputError("moishezon_family needs p >= 2");
  const BigInt P = p;
  MoishezonFamily f;
  f.degree = 9 * P * (P - 1);
  f.cusps = 27 * (P - 1) * (4 * P - 5);
  const BigInt twice_nodes = 27 * (P - 1) * (P - 2) * (3 * P * P + 3 * P - 8);
  f.nodes = twice_nodes / 2;
  f.omega_coefficient = Rational(6 * P - 9, P);
  f.torus_coefficient = (2 * P - 3) * BigInt(k);
  f.proportional = k == 0;
  return f;
}

}  // namespace lefschetz
