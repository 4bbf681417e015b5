#include "oracles.hpp"

#include "lefschetz/braided_curve.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/moishezon.hpp"
#include "lefschetz/presentation.hpp"
#include "lefschetz/word_syntax.hpp"

#include <doctest.h>

using namespace lefschetz;

namespace {

BraidedCurveSpec conic() {
  BraidedCurveSpec s;
  s.degree = 2;
  s.factors = {{BraidWord(2), 1, 1}, {BraidWord(2), 1, 1}};
  return s;
}

BraidedCurveSpec nodal_cubic() {
  BraidedCurveSpec s;
  s.degree = 3;
  s.factors = {{BraidWord(3), 1, 2},
               {parse_braid("x1^-1", 3), 2, 1},
               {BraidWord(3), 2, 1},
               {BraidWord(3), 1, 1},
               {BraidWord(3), 2, 1}};
  return s;
}

BranchData theta(std::size_t n, const std::vector<std::string>& ts) {
  BranchData b;
  b.sheets = n;
  for (const auto& t : ts) b.transpositions.push_back(parse_permutation(t, n));
  return b;
}

Presentation pres(std::size_t n, const std::vector<std::string>& rels) {
  Presentation p;
  p.generators = n;
  for (const auto& r : rels) p.add(parse_free_word(r, n));
  return p;
}

// conjugate every factor by w
BraidedCurveSpec conjugate_spec(const BraidedCurveSpec& s, const BraidWord& w) {
  BraidedCurveSpec out = s;
  for (auto& f : out.factors) f.conjugator = w * f.conjugator;
  return out;
}

// theta o artin(w^-1), the assignment that moves along with the conjugated spec
BranchData transport(const BranchData& b, const BraidWord& w) {
  BranchData out = b;
  const auto phi = artin_automorphism(w.inverse());
  for (std::size_t i = 1; i <= b.transpositions.size(); ++i) out.transpositions[i - 1] = b.evaluate(phi.image(i));
  return out;
}

}  // namespace

TEST_CASE("verify braided curves") {
  const auto c = verify_braided_curve(conic());
  CHECK(c.valid);
  CHECK(c.checksum_ok);
  CHECK(c.product_ok == true);
  CHECK(verify_braided_curve(nodal_cubic()).valid);

  // two cusps: checksum 6 passes, the Artin oracle decides
  BraidedCurveSpec cusps;
  cusps.degree = 3;
  cusps.factors = {{BraidWord(3), 1, 3}, {BraidWord(3), 2, 3}};
  const auto r = verify_braided_curve(cusps);
  CHECK(r.checksum_ok);
  const bool oracle_equal = oracle::artin({1, 1, 1, 2, 2, 2}, 3) == oracle::artin({1, 2, 1, 2, 1, 2}, 3);
  CHECK(r.product_ok == oracle_equal);
  CHECK(r.valid == oracle_equal);

  BraidedCurveSpec one;
  one.degree = 3;
  one.factors = {{BraidWord(3), 1, 1}};
  const auto bad = verify_braided_curve(one);
  CHECK_FALSE(bad.checksum_ok);
  CHECK_FALSE(bad.valid);
  CHECK(bad.exponent_sum == 1);
  CHECK(bad.expected_sum == 6);

  BraidedCurveSpec wrong = conic();
  wrong.factors[0].exponent = 4;
  CHECK_THROWS_AS(wrong.validate(), InputError);
  wrong.factors[0] = {BraidWord(2), 2, 1};
  CHECK_THROWS_AS(wrong.validate(), InputError);
}

TEST_CASE("theta compatibility") {
  CHECK(theta_compatible(conic(), theta(2, {"(1 2)", "(1 2)"})).compatible);
  BraidedCurveSpec cusp;
  cusp.degree = 2;
  cusp.factors = {{BraidWord(2), 1, 3}};
  const auto c = theta_compatible(cusp, theta(4, {"(1 2)", "(3 4)"}));
  CHECK_FALSE(c.compatible);
  CHECK_FALSE(c.local_types_ok);
  BraidedCurveSpec three = conic();
  three.degree = 3;
  three.factors = {{BraidWord(3), 1, 1}};
  const auto nt = theta_compatible(conic(), theta(3, {"(1 2)", "(1 2)"}));
  CHECK_FALSE(nt.transitive);
  CHECK_FALSE(nt.compatible);
  CHECK_THROWS_AS(theta_compatible(conic(), theta(2, {"(1 2)"})), InputError);
  // a node must see disjoint transpositions
  BraidedCurveSpec node;
  node.degree = 2;
  node.factors = {{BraidWord(2), 1, 2}};
  CHECK_FALSE(theta_compatible(node, theta(2, {"(1 2)", "(1 2)"})).local_types_ok);
}

TEST_CASE("theta compatibility is invariant under relabeling and transport") {
  const auto sextic = [] {
    BraidedCurveSpec s;
    s.degree = 4;
    for (int rep = 0; rep < 4; ++rep)
      for (std::size_t i = 1; i < 4; ++i) s.factors.push_back({BraidWord(4), i, 1});
    return s;
  }();
  REQUIRE(verify_braided_curve(sextic).valid);
  const BranchData t = theta(2, {"(1 2)", "(1 2)", "(1 2)", "(1 2)"});
  REQUIRE(theta_compatible(sextic, t).compatible);
  const BranchData t3 = theta(3, {"(1 2)", "(1 2)", "(2 3)", "(2 3)"});
  const bool base3 = theta_compatible(sextic, t3).compatible;
  std::mt19937_64 rng(41);
  for (int it = 0; it < 40; ++it) {
    const BraidWord w(4, oracle::random_word(rng, 3, 5));
    const BraidedCurveSpec moved = conjugate_spec(sextic, w);
    CHECK(verify_braided_curve(moved).valid);
    CHECK(theta_compatible(moved, transport(t, w)).compatible);
    CHECK(theta_compatible(moved, transport(t3, w)).compatible == base3);
    // relabel sheets
    const Permutation g = parse_permutation("(1 3 2)", 3);
    BranchData r = t3;
    for (auto& p : r.transpositions) p = conjugate_by(p, g);
    CHECK(theta_compatible(sextic, r).compatible == base3);
  }
}

TEST_CASE("Zariski-van Kampen presentations") {
  const Presentation p = zvk_presentation(conic());
  CHECK(presentation_abelianization(p).to_string() == "Z/2");
  const auto simp = tietze_simplify(p);
  const auto cert = order_certificate(simp.presentation);
  REQUIRE(cert.order);
  CHECK(*cert.order == 2);
  CHECK(low_index_subgroup_counts(p, 4) == std::vector<std::size_t>{1, 1, 0, 0});

  BraidedCurveSpec line;
  line.degree = 1;
  const auto lp = zvk_presentation(line);
  CHECK(presentation_abelianization(lp).is_trivial());
  CHECK(*order_certificate(tietze_simplify(lp).presentation).order == 1);

  CHECK(presentation_abelianization(zvk_presentation(nodal_cubic())).to_string() == "Z/3");

  CHECK(presentation_abelianization(pres(2, {"x1 x2 x1^-1 x2^-1"})).free_rank == 2);
  CHECK(presentation_abelianization(pres(1, {"x1^5"})).to_string() == "Z/5");
  CHECK_THROWS_AS(zvk_presentation(conic(), {true, 4, 20000}, nullptr), InputError);
}

TEST_CASE("presentation invariants survive moves") {
  std::mt19937_64 rng(43);
  const auto base = presentation_abelianization(zvk_presentation(nodal_cubic()));
  for (int it = 0; it < 20; ++it) {
    const BraidWord w(3, oracle::random_word(rng, 2, 4));
    const auto moved = conjugate_spec(nodal_cubic(), w);
    CHECK(presentation_abelianization(zvk_presentation(moved)) == base);
    // Hurwitz move on factors 1, 2: (a, b) -> (a b a^-1, a)
    BraidedCurveSpec h = nodal_cubic();
    const CurveFactor a = h.factors[0], b = h.factors[1];
    h.factors[0] = {a.braid() * b.conjugator, b.base, b.exponent};
    h.factors[1] = a;
    CHECK(verify_braided_curve(h).valid);
    CHECK(presentation_abelianization(zvk_presentation(h)) == base);
  }
  // an admissible pair of opposite nodes
  BraidedCurveSpec ins = conic();
  ins.degree = 2;
  ins.factors.insert(ins.factors.begin() + 1, {{BraidWord(2), 1, 2}, {BraidWord(2), 1, -2}});
  CHECK(verify_braided_curve(ins).valid);
  CHECK(presentation_abelianization(zvk_presentation(ins)) == presentation_abelianization(zvk_presentation(conic())));
  const BranchData t = theta(2, {"(1 2)", "(1 2)"});
  CHECK(presentation_abelianization(zvk_presentation(ins, {true, 4, 20000}, &t)) ==
        presentation_abelianization(zvk_presentation(conic(), {true, 4, 20000}, &t)));
}

TEST_CASE("structure sequence") {
  const BranchData t = theta(2, {"(1 2)", "(1 2)"});
  const auto r = structure_sequence_check(zvk_presentation(conic()), t, 2);
  CHECK(r.pass);
  CHECK(r.ambient_order == 4);
  CHECK(r.image_order == 2);
  CHECK(r.index == 2);
  CHECK(r.image_in_parity_kernel);
  CHECK_THROWS_AS(structure_sequence_check(zvk_presentation(nodal_cubic()), theta(2, {"(1 2)", "(1 2)", "(1 2)"}), 2),
                  InputError);
}

TEST_CASE("theta enumeration") {
  const auto e = enumerate_thetas(conic(), 2);
  REQUIRE(e.classes.size() == 1);
  CHECK(e.classes[0] == theta(2, {"(1 2)", "(1 2)"}));
  CHECK(enumerate_thetas(conic(), 1).classes.empty());
  BraidedCurveSpec one;
  one.degree = 3;
  one.factors = {{BraidWord(3), 1, 1}};
  const auto bad = enumerate_thetas(one, 2);
  CHECK(bad.classes.empty());
  CHECK_FALSE(bad.diagnostics.empty());
  // canonical classes are pairwise distinct
  BraidedCurveSpec quartic;
  quartic.degree = 4;
  for (int rep = 0; rep < 4; ++rep)
    for (std::size_t i = 1; i < 4; ++i) quartic.factors.push_back({BraidWord(4), i, 1});
  const auto q = enumerate_thetas(quartic, 3);
  for (std::size_t i = 0; i < q.classes.size(); ++i) {
    CHECK(canonical_branch(q.classes[i]) == q.classes[i]);
    CHECK(theta_compatible(quartic, q.classes[i]).compatible);
    for (std::size_t j = i + 1; j < q.classes.size(); ++j) CHECK_FALSE(q.classes[i] == q.classes[j]);
  }
}

TEST_CASE("lambda quotient") {
  CHECK(lambda_quotient({{1, 0}, {0, 1}}, 3).quotient.is_trivial());
  const auto z = lambda_quotient({{3, 1}}, 2);
  CHECK(z.quotient.free_rank == 1);
  CHECK(z.quotient.torsion.empty());
  const auto e = lambda_quotient({}, 4);
  CHECK(e.quotient.free_rank == 2);
  CHECK(e.power == 3);
  CHECK(lambda_quotient({{2, 0}, {0, 4}}, 2).quotient.to_string() == "Z/2 + Z/4");
}

TEST_CASE("Moishezon family") {
  const auto a = moishezon_family(2, 0);
  CHECK(a.degree == 18);
  CHECK(a.cusps == 81);
  CHECK(a.nodes == 0);
  CHECK(a.proportional);
  const auto b = moishezon_family(3, 1);
  CHECK(b.degree == 54);
  CHECK(b.cusps == 378);
  CHECK(b.nodes == 756);
  CHECK_FALSE(b.proportional);
  const auto k5 = moishezon_family(2, 5), k7 = moishezon_family(2, 7);
  CHECK(k5.degree == k7.degree);
  CHECK(k5.cusps == k7.cusps);
  CHECK(k5.nodes == k7.nodes);
  CHECK(k5.torus_coefficient != k7.torus_coefficient);
  CHECK_THROWS_AS(moishezon_family(1, 0), InputError);
  for (long long p = 2; p <= 40; ++p)
    for (long long k = 0; k <= 3; ++k) {
      const auto m = moishezon_family(p, k);
      CHECK(m.degree == 9 * p * (p - 1));
      CHECK(m.cusps == 27 * (p - 1) * (4 * p - 5));
      CHECK(2 * m.nodes == 27 * (p - 1) * (p - 2) * (3 * p * p + 3 * p - 8));
      CHECK(m.omega_coefficient * p == 6 * p - 9);
      CHECK(m.torus_coefficient == (2 * p - 3) * k);
      CHECK(m.proportional == (k == 0));
    }
}

TEST_CASE("curve JSON") {
  const auto j = io::to_json(nodal_cubic());
  const auto back = io::curve_from_json(j);
  CHECK(io::dump(io::to_json(back)) == io::dump(j));
  const auto t = theta(3, {"(1 2)", "(2 3)"});
  CHECK(io::branch_from_json(io::to_json(t)) == t);
  CHECK_THROWS_AS(io::branch_from_json(io::parse_json(R"j({"sheets":2,"transpositions":["(1 2 3)"]})j")), InputError);
}
