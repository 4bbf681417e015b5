#include "lefschetz_cli/cli.hpp"

#include "lefschetz/circle_arrangement.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/fukaya.hpp"
#include "lefschetz/word_syntax.hpp"

#include <fstream>

namespace lefschetz::cli {

namespace {

using io::Json;

FibrationSpec elliptic(int base_points) {
  FibrationSpec s;
  s.genus = 1;
  s.base_points = base_points;
  for (int k = 0; k < 12; ++k) s.twists.push_back({false, k % 2 == 0 ? std::vector<long long>{1, 0} : std::vector<long long>{0, 1}, {}});
  return s;
}

// chain c1..c5 on (a1, b1, a2, b2); the word (c1 c2 c3 c4 c5 c5 c4 c3 c2 c1)^2
FibrationSpec genus_two(int base_points) {
  const std::vector<std::vector<long long>> chain = {
      {0, 1, 0, 0}, {1, 0, 0, 0}, {0, -1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  FibrationSpec s;
  s.genus = 2;
  s.base_points = base_points;
  for (int rep = 0; rep < 2; ++rep) {
    for (int k = 0; k < 5; ++k) s.twists.push_back({false, chain[static_cast<std::size_t>(k)], {}});
    for (int k = 4; k >= 0; --k) s.twists.push_back({false, chain[static_cast<std::size_t>(k)], {}});
  }
  return s;
}

Json with_kind(Json j, const std::string& kind, const std::string& about) {
  j["kind"] = kind;
  j["about"] = about;
  return j;
}

BranchData all_same(std::size_t count) {
  BranchData b;
  b.sheets = 2;
  for (std::size_t k = 0; k < count; ++k) b.transpositions.push_back(Permutation::transposition(2, 1, 2));
  return b;
}

BraidedCurveSpec tangencies_only(std::size_t degree) {
  BraidedCurveSpec s;
  s.degree = degree;
  for (std::size_t rep = 0; rep < degree; ++rep)
    for (std::size_t i = 1; i < degree; ++i) s.factors.push_back({BraidWord(degree), i, 1});
  return s;
}

// two disjoint circles, one marker each; the outer face has two boundary cycles
CurveArrangement disjoint_curves() {
  CurveArrangement arr;
  arr.darts = {{0, 1, 1}, {1, 0, 1}, {2, 3, 2}, {3, 2, 2}};
  arr.faces = {{{{0}}, 1}, {{{2}}, 1}, {{{1}, {3}}, 1}};
  arr.curves = {{0}, {2}};
  return arr;
}

}  // namespace

std::vector<CorpusFile> corpus() {
  std::vector<CorpusFile> files;
  files.push_back({"e1.json", "fibration",
                   with_kind(io::to_json(elliptic(0)), "fibration", "elliptic fibration, (a b)^6 on the torus")});
  files.push_back({"cubic_pencil.json", "fibration",
                   with_kind(io::to_json(elliptic(9)), "fibration", "pencil of plane cubics: 9 base points, 12 singular fibers")});
  files.push_back({"genus2_fibration.json", "fibration",
                   with_kind(io::to_json(genus_two(0)), "fibration", "genus-2 chain relation with 20 twists")});
  files.push_back({"genus2_pencil.json", "fibration",
                   with_kind(io::to_json(genus_two(12)), "fibration", "genus-2 pencil on a quadric: 12 base points, 20 singular fibers")});

  Factorization elliptic_sl2z;
  elliptic_sl2z.context = GroupContext::sl2z();
  for (int k = 0; k < 6; ++k) {
    elliptic_sl2z.factors.push_back(elliptic_sl2z.context.parse("A"));
    elliptic_sl2z.factors.push_back(elliptic_sl2z.context.parse("B"));
  }
  files.push_back({"sl2z_elliptic.json", "factorization",
                   with_kind(io::to_json(elliptic_sl2z), "factorization", "(A B)^6 = I in SL(2,Z)")});

  Factorization b3;
  b3.context = GroupContext::braid(3);
  b3.target = Target::full_twist();
  for (int k = 0; k < 3; ++k) {
    b3.factors.push_back(b3.context.parse("x1"));
    b3.factors.push_back(b3.context.parse("x2"));
  }
  files.push_back({"b3_full_twist.json", "factorization",
                   with_kind(io::to_json(b3), "factorization", "(x1 x2)^3 = full twist in B_3")});
  Factorization b3_moved = hurwitz_move(hurwitz_move(b3, 1, 1), 3, -1);
  files.push_back({"b3_full_twist_moved.json", "factorization",
                   with_kind(io::to_json(b3_moved), "factorization", "Hurwitz-equivalent form of b3_full_twist")});

  {
    BraidedCurveSpec conic = tangencies_only(2);
    Json j = io::to_json(conic);
    j["theta"] = io::to_json(all_same(2));
    files.push_back({"conic.json", "braided_curve", with_kind(j, "braided_curve", "smooth conic: two tangencies, double cover")});
  }
  {
    BraidedCurveSpec cubic;
    cubic.degree = 3;
    cubic.factors = {{BraidWord(3), 1, 2},
                     {parse_braid("x1^-1", 3), 2, 1},
                     {BraidWord(3), 2, 1},
                     {BraidWord(3), 1, 1},
                     {BraidWord(3), 2, 1}};
    files.push_back({"nodal_cubic.json", "braided_curve",
                     with_kind(io::to_json(cubic), "braided_curve", "nodal cubic: one node and four tangencies")});
  }
  {
    BraidedCurveSpec sextic = tangencies_only(6);
    Json j = io::to_json(sextic);
    j["theta"] = io::to_json(all_same(6));
    files.push_back({"genus2_curve.json", "braided_curve",
                     with_kind(j, "braided_curve", "degree-6 curve with 30 tangencies; double cover with genus-2 fibers")});
  }
  files.push_back({"conic_arrangement.json", "arrangement",
                   with_kind(io::to_json(conic_pencil_example()), "arrangement",
                             "vanishing cycles of the conic pencil on a four-punctured sphere")});
  files.push_back({"disjoint_curves.json", "arrangement",
                   with_kind(io::to_json(disjoint_curves()), "arrangement", "two disjoint curves, three punctures")});
  files.push_back({"moishezon.json", "moishezon",
                   {{"kind", "moishezon"},
                    {"about", "branch curve numerics of the twisted family"},
                    {"cases", Json::array({Json{{"p", 2}, {"k", 0}}, Json{{"p", 3}, {"k", 0}}, Json{{"p", 3}, {"k", 1}},
                                           Json{{"p", 5}, {"k", 2}}})}}});
  return files;
}

Json install_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
  Json entries = Json::array();
  for (const auto& f : corpus()) {
    const std::string bytes = io::dump(f.content);
    std::ofstream out(dir / f.name, std::ios::binary);
    if (!out) throw InputError("cannot write " + (dir / f.name).string());
    out << bytes;
    entries.push_back({{"name", f.name}, {"kind", f.kind}, {"bytes", bytes.size()}, {"sha256", sha256_hex(bytes)}});
  }
  Json manifest = {{"files", entries}};
  io::write_json_file(dir / "manifest.json", manifest);
  return manifest;
}

}  // namespace lefschetz::cli
