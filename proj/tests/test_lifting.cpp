#include "oracles.hpp"

#include "lefschetz/lifting.hpp"
#include "lefschetz/word_syntax.hpp"

#include <doctest.h>

#include <functional>

using namespace lefschetz;

namespace {

BranchData theta(std::size_t n, const std::vector<std::string>& ts) {
  BranchData b;
  b.sheets = n;
  for (const auto& t : ts) b.transpositions.push_back(parse_permutation(t, n));
  return b;
}

BranchData all_12(std::size_t d) { return theta(2, std::vector<std::string>(d, "(1 2)")); }

std::vector<oracle::Tr> tuple(const BranchData& b) {
  std::vector<oracle::Tr> out;
  for (const auto& p : b.transpositions) {
    const auto s = p.support();
    out.push_back({static_cast<int>(s[0]), static_cast<int>(s[1])});
  }
  return out;
}

IntMatrix sub_identity(const IntMatrix& m) { return m - IntMatrix::identity(m.rows()); }

bool is_zero(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

// rank 1 and square zero: x -> x + lambda w(v, x) v
bool transvection_like(const IntMatrix& m) {
  const IntMatrix n = sub_identity(m);
  if (is_zero(n) || !is_zero(n * n)) return false;
  for (std::size_t r = 0; r < n.rows(); ++r)
    for (std::size_t s = r + 1; s < n.rows(); ++s)
      for (std::size_t c = 0; c < n.cols(); ++c)
        for (std::size_t e = c + 1; e < n.cols(); ++e)
          if (n(r, c) * n(s, e) - n(r, e) * n(s, c) != 0) return false;
  return true;
}

BigInt content(const IntMatrix& m) {
  BigInt g = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g = boost::multiprecision::gcd(g, m(r, c));
  return g;
}

IntMatrix power(const IntMatrix& m, int k) {
  IntMatrix out = IntMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

// Picard-Lefschetz oracle: the lift of w X_base^e w^-1 (e = 1, 2, equal
// transpositions) is x -> x + e (c^T J x) c, c the class of the closed lift of u v^-1.
void check_twist(const CoverModel& m, const CurveFactor& f) {
  const std::size_t d = m.branch_points();
  const auto [u, v] = local_meridians(f, d);
  const Permutation tu = m.branch().evaluate(u);
  REQUIRE(tu == m.branch().evaluate(v));
  const IntVector c = m.homology_class(u * v.inverse(), tu.support()[0]);
  const IntMatrix& j = m.intersection_form();
  const std::size_t n = c.size();
  IntMatrix expected = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      BigInt cj = 0;
      for (std::size_t t = 0; t < n; ++t) cj += c[t] * j(t, k);
      expected(r, k) += f.exponent * c[r] * cj;
    }
  CHECK(m.action(f.braid()).matrix == expected);
}

void all_words(std::size_t gens, std::size_t len, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  f(cur);
  if (cur.size() == len) return;
  for (int g = 1; g <= static_cast<int>(gens); ++g)
    for (int s : {1, -1}) {
      if (!cur.empty() && cur.back() == -s * g) continue;
      cur.push_back(s * g);
      all_words(gens, len, cur, f);
      cur.pop_back();
    }
}

}  // namespace

TEST_CASE("fiber genus") {
  CHECK(fiber_genus(2, 6) == 2);
  CHECK(fiber_genus(2, 2) == 0);
  CHECK(fiber_genus(2, 4) == 1);
  CHECK_THROWS_AS(fiber_genus(3, 5), InputError);
  CHECK_THROWS_AS(fiber_genus(3, 2), InputError);
}

TEST_CASE("liftability") {
  CHECK(is_liftable(parse_braid("x1", 2), all_12(2)));
  CHECK_FALSE(is_liftable(parse_braid("x1", 2), theta(3, {"(1 2)", "(1 3)"})));
  CHECK(is_liftable(BraidWord(2), theta(3, {"(1 2)", "(1 3)"})));
  CHECK_THROWS_AS(is_liftable(parse_braid("x1", 3), all_12(2)), InputError);

  // agreement with the tuple oracle on every reduced word of length <= 6
  for (const BranchData& b : {all_12(4), theta(3, {"(1 2)", "(2 3)", "(2 3)", "(1 2)"})}) {
    const auto t = tuple(b);
    std::vector<int> cur;
    std::size_t checked = 0, liftable = 0;
    all_words(3, 6, cur, [&](const std::vector<int>& w) {
      const bool lib = is_liftable(BraidWord(4, w), b);
      CHECK(lib == (oracle::hurwitz(t, w) == t));
      ++checked;
      liftable += lib;
    });
    CHECK(checked > 10000);
    CHECK(liftable > 0);
  }
}

TEST_CASE("cover model topology") {
  for (const BranchData& b : {all_12(2), all_12(4), all_12(6), theta(3, {"(1 2)", "(2 3)", "(2 3)", "(1 2)"}),
                              theta(3, {"(1 2)", "(1 2)", "(2 3)", "(2 3)", "(1 3)", "(1 3)"})}) {
    const CoverModel m(b);
    const long long g = fiber_genus(static_cast<long long>(b.sheets), static_cast<long long>(b.transpositions.size()));
    CHECK(m.genus() == g);
    CHECK(m.euler_characteristic() == 2 - 2 * g);
    CHECK(static_cast<long long>(m.vertex_count()) - static_cast<long long>(m.edge_count()) +
              static_cast<long long>(m.face_count()) ==
          2 - 2 * g);
    // face boundaries are cycles with zero interleaving against every loop
    CHECK(is_zero(m.face_boundaries().transposed() * m.loop_form()));
    const IntMatrix& j = m.intersection_form();
    CHECK(j.transposed() == IntMatrix(j.rows(), j.cols()) - j);
    if (g > 0) {
      // unimodular
      BigInt det = 1;
      if (g == 1) det = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
      if (g == 1) CHECK((det == 1 || det == -1));
    }
  }
  CHECK_THROWS_AS(CoverModel(theta(3, {"(1 2)", "(1 2)"})), InputError);
  CHECK_THROWS_AS(CoverModel(theta(2, {"(1 2)"})), InputError);
}

TEST_CASE("half twists lift to Dehn twists") {
  const BranchData b = all_12(4);
  const CoverModel m(b);
  REQUIRE(m.genus() == 1);
  const IntMatrix t1 = m.action(parse_braid("x1", 4)).matrix;
  const IntMatrix t2 = m.action(parse_braid("x2", 4)).matrix;
  CHECK(transvection_like(t1));
  CHECK(content(sub_identity(t1)) == 1);
  // the genus-1 relations of SL(2,Z): braid relation and (T_a T_b)^6 = 1
  CHECK(t1 * t2 * t1 == t2 * t1 * t2);
  CHECK(power(t1 * t2, 6).is_identity());
  CHECK_FALSE(power(t1 * t2, 3).is_identity());

  const IntMatrix sq = lift_homology_action(parse_braid("x1^2", 4), b).matrix;
  CHECK(sq == t1 * t1);
  CHECK(transvection_like(sq));
  CHECK(is_symplectic(sq, m.intersection_form()));
  CHECK(content(sub_identity(sq)) == 2);
  CHECK(m.action(BraidWord(4)).matrix.is_identity());
  std::mt19937_64 rng(53);
  for (int it = 0; it < 60; ++it) {
    const CurveFactor f{BraidWord(4, oracle::random_word(rng, 3, 5)), 1 + rng() % 3, static_cast<int>(1 + rng() % 2)};
    check_twist(m, f);
  }
  const CoverModel m2(all_12(6));
  for (int it = 0; it < 60; ++it) {
    const CurveFactor f{BraidWord(6, oracle::random_word(rng, 5, 5)), 1 + rng() % 5, static_cast<int>(1 + rng() % 2)};
    check_twist(m2, f);
  }
}

TEST_CASE("liftable words form a subgroup and lift homomorphically") {
  const BranchData b = theta(3, {"(1 2)", "(2 3)", "(2 3)", "(1 2)", "(1 3)", "(1 3)"});
  const CoverModel m(b);
  REQUIRE(m.genus() == 1);
  std::mt19937_64 rng(47);
  std::vector<BraidWord> lift;
  for (int it = 0; it < 4000 && lift.size() < 12; ++it) {
    const BraidWord w(6, oracle::random_word(rng, 5, 6));
    if (!w.empty() && is_liftable(w, b)) lift.push_back(w);
  }
  REQUIRE(lift.size() >= 4);
  for (const auto& u : lift) {
    CHECK(is_liftable(u.inverse(), b));
    const IntMatrix mu = m.action(u).matrix;
    CHECK(is_symplectic(mu, m.intersection_form()));
    CHECK(m.action(u.inverse()).matrix * mu == IntMatrix::identity(mu.rows()));
    for (const auto& v : lift) {
      REQUIRE(is_liftable(u * v, b));
      CHECK(m.action(u * v).matrix == m.action(u).matrix * m.action(v).matrix);
    }
  }
  CHECK_THROWS_AS(m.action(parse_braid("x1", 6)), InputError);
}

TEST_CASE("nodes lift trivially") {
  const BranchData b = theta(4, {"(1 2)", "(3 4)", "(2 3)", "(2 3)", "(3 4)", "(1 2)", "(1 2)", "(1 2)"});
  const CoverModel m(b);
  REQUIRE(m.genus() == 1);
  CHECK(m.action(parse_braid("x1^2", 8)).matrix.is_identity());
  // positions 5, 6 carry (3 4), (1 2); a conjugate of that node as well
  CHECK(m.action(parse_braid("x5^2", 8)).matrix.is_identity());
  const BraidWord q = parse_braid("x2 x3 x2^2 x3^-1 x2^-1", 8);
  REQUIRE(is_liftable(q, b));
  // here the lifted curve is null-homologous
  check_twist(m, {parse_braid("x2 x3", 8), 2, 2});
  CHECK(m.action(q).matrix.is_identity());
}

TEST_CASE("pencil monodromy") {
  BraidedCurveSpec conic;
  conic.degree = 2;
  conic.factors = {{BraidWord(2), 1, 1}, {BraidWord(2), 1, 1}};
  const auto pc = pencil_monodromy(conic, all_12(2));
  CHECK(pc.genus == 0);
  CHECK(pc.product_is_identity);

  BraidedCurveSpec sextic;
  sextic.degree = 6;
  for (int rep = 0; rep < 6; ++rep)
    for (std::size_t i = 1; i < 6; ++i) sextic.factors.push_back({BraidWord(6), i, 1});
  const auto p = pencil_monodromy(sextic, all_12(6));
  CHECK(p.genus == 2);
  CHECK(p.tangencies.size() == 30);
  CHECK(p.all_symplectic);
  CHECK(p.product_is_identity);
  CHECK(p.product.is_identity());
  for (const auto& f : p.tangencies) CHECK(transvection_like(f.matrix));

  // genus-2 chain: (x1 ... x5)^6 lifts to the identity
  CHECK(lift_homology_action(full_twist(6), all_12(6)).matrix.is_identity());

  BraidedCurveSpec bad = conic;
  CHECK_THROWS_AS(pencil_monodromy(bad, theta(3, {"(1 2)", "(2 3)"})), InputError);
}
