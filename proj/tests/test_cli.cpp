#include "lefschetz_cli/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using lefschetz::cli::run;
using Json = lefschetz::io::Json;

namespace {

struct Out {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

fs::path scratch(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("lefschetz_cli_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

}  // namespace

TEST_CASE("corpus install is stable and complete") {
  const fs::path a = scratch("a"), b = scratch("b");
  REQUIRE(call({"examples", "install", a.string()}).code == 0);
  REQUIRE(call({"examples", "install", b.string()}).code == 0);
  const Json m = Json::parse(slurp(a / "manifest.json"));
  CHECK(m.at("files").size() >= 5);
  CHECK(slurp(a / "manifest.json") == slurp(b / "manifest.json"));
  for (const auto& f : m.at("files")) {
    const std::string name = f.at("name");
    const std::string bytes = slurp(a / name);
    CHECK(bytes == slurp(b / name));
    CHECK(lefschetz::cli::sha256_hex(bytes) == f.at("sha256").get<std::string>());
    CHECK(bytes.size() == f.at("bytes").get<std::size_t>());
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("every bundled spec passes its verifier") {
  const fs::path dir = scratch("verify");
  REQUIRE(call({"examples", "install", dir.string()}).code == 0);
  const Json m = Json::parse(slurp(dir / "manifest.json"));
  for (const auto& f : m.at("files")) {
    const std::string kind = f.at("kind"), path = (dir / f.at("name").get<std::string>()).string();
    std::vector<std::vector<std::string>> commands;
    if (kind == "fibration") commands = {{"invariants", path}};
    if (kind == "factorization") commands = {{"factorization", "verify", path}};
    if (kind == "braided_curve") commands = {{"curve", "verify", path}, {"curve", "zvk", path}};
    if (kind == "arrangement") commands = {{"fukaya", "compute", path}, {"fukaya", "verify", path}};
    if (kind == "moishezon") commands = {{"moishezon", path}};
    REQUIRE_FALSE(commands.empty());
    for (const auto& c : commands) {
      const Out o = call(c);
      CHECK_MESSAGE(o.code == 0, c[0] << " " << path << "\n" << o.out << o.err);
    }
  }
  CHECK(call({"lift", "pencil", (dir / "genus2_curve.json").string()}).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("documented runs") {
  const fs::path dir = scratch("runs");
  REQUIRE(call({"examples", "install", dir.string()}).code == 0);
  const Out inv = call({"--json", "invariants", (dir / "e1.json").string()});
  CHECK(inv.code == 0);
  CHECK(inv.json()["payload"]["chi"] == 12);
  CHECK(inv.json()["payload"]["sigma"] == -8);
  CHECK(inv.json()["status"] == "ok");
  CHECK(inv.json()["provenance"]["inputs"][0]["sha256"].get<std::string>().size() == 64);

  CHECK(call({"curve", "verify", (dir / "conic.json").string()}).code == 0);

  const Out fk = call({"--json", "fukaya", "compute", (dir / "conic_arrangement.json").string()});
  CHECK(fk.code == 0);
  std::set<std::string> table;
  const Json fkj = fk.json();
  for (const auto& e : fkj["payload"]["mu"]) {
    if (e["order"] != 2) continue;
    const auto in = e["inputs"];
    if (in[0].get<std::string>().rfind("id", 0) == 0 || in[1].get<std::string>().rfind("id", 0) == 0) continue;
    table.insert(in[0].get<std::string>() + " " + in[1].get<std::string>() + " -> " + e["value"].dump());
  }
  CHECK(table == std::set<std::string>{R"(a b -> ["c"])", R"(a b' -> ["c'"])", R"(a' b -> ["c'"])", R"(a' b' -> ["c"])"});

  // byte-identical JSON for identical inputs and budgets
  CHECK(call({"--json", "fukaya", "compute", (dir / "conic_arrangement.json").string()}).out == fk.out);
  const std::vector<std::string> search = {"--json", "factorization", "search", (dir / "b3_full_twist.json").string(),
                                           (dir / "b3_full_twist_moved.json").string()};
  CHECK(call(search).out == call(search).out);
  fs::remove_all(dir);
}

TEST_CASE("replay certificates") {
  const fs::path dir = scratch("replay");
  REQUIRE(call({"examples", "install", dir.string()}).code == 0);
  const std::string src = (dir / "b3_full_twist.json").string();
  write(dir / "empty.json", R"({"moves": []})");
  CHECK(call({"factorization", "replay", (dir / "empty.json").string(), src}).code == 0);

  // record a one-move path by search, then replay it
  CHECK(call({"factorization", "move", src, "--hurwitz", "2", "--dir", "1", "-o", (dir / "moved.json").string()}).code == 0);
  const Out s = call({"factorization", "search", src, (dir / "moved.json").string(), "-o", (dir / "path.json").string()});
  CHECK(s.code == 0);
  const Json path = Json::parse(slurp(dir / "path.json"));
  CHECK(path["moves"].size() == 1);
  CHECK(call({"factorization", "replay", (dir / "path.json").string(), src}).code == 0);
  CHECK(call({"factorization", "replay", (dir / "path.json").string(), src, "--expect", (dir / "moved.json").string()}).code == 0);

  Json tampered = path;
  tampered["moves"][0]["direction"] = -tampered["moves"][0]["direction"].get<int>();
  write(dir / "tampered.json", tampered.dump());
  CHECK(call({"factorization", "replay", (dir / "tampered.json").string(), src}).code == 1);
  Json outside = path;
  outside["moves"][0]["index"] = 9;
  write(dir / "outside.json", outside.dump());
  CHECK(call({"factorization", "replay", (dir / "outside.json").string(), src}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("codes");
  REQUIRE(call({"examples", "install", dir.string()}).code == 0);
  // input errors
  CHECK(call({"invariants", (dir / "missing.json").string()}).code == 2);
  write(dir / "broken.json", "{\"genus\": ");
  CHECK(call({"invariants", (dir / "broken.json").string()}).code == 2);
  write(dir / "badspec.json", R"({"genus": 1, "twists": [{"class": [1, 0, 0]}]})");
  CHECK(call({"invariants", (dir / "badspec.json").string()}).code == 2);
  CHECK(call({"--frobnicate", "invariants", (dir / "e1.json").string()}).code == 2);
  CHECK(call({"--budget-depth", "0", "braid", "eq", "x1", "x1"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"braid", "eq", "x1", "x9", "--strands", "3"}).code == 2);
  // violated properties
  CHECK(call({"braid", "eq", "x1 x2", "x2 x1"}).code == 1);
  CHECK(call({"hyperelliptic", "--genus", "3", "--delta0", "13"}).code == 1);
  CHECK(call({"hyperelliptic", "--genus", "1", "--delta0", "12"}).code == 0);
  CHECK(call({"schedule", "--kind", "poly", "--param", "2"}).code == 1);
  CHECK(call({"schedule", "--kind", "log", "--param", "4", "--steps", "1"}).code == 0);
  write(dir / "theta3.json", R"j({"sheets": 3, "transpositions": ["(1 2)", "(1 3)"]})j");
  CHECK(call({"lift", "check", (dir / "theta3.json").string(), "--braid", "x1"}).code == 1);
  CHECK(call({"lift", "check", (dir / "conic.json").string(), "--braid", "x1^2"}).code == 0);
  // undetermined: budget
  CHECK(call({"--budget-states", "2", "factorization", "search", (dir / "b3_full_twist.json").string(),
              (dir / "b3_full_twist_moved.json").string()})
            .code == 3);
  CHECK(call({"--polygon-cap", "1", "fukaya", "compute", (dir / "conic_arrangement.json").string()}).code == 3);
  // help and version
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).out == "0.3.0\n");
  fs::remove_all(dir);
}

TEST_CASE("other subcommands") {
  const fs::path dir = scratch("misc");
  REQUIRE(call({"examples", "install", dir.string()}).code == 0);
  const Out g3 = call({"--json", "genus3", "--chi", "66", "--sigma", "-44"});
  CHECK(g3.code == 0);
  CHECK(g3.json()["payload"]["nonholomorphic"] == true);
  const Out th = call({"--json", "curve", "thetas", (dir / "conic.json").string(), "--sheets", "2"});
  CHECK(th.json()["payload"]["count"] == 1);
  const Out z = call({"--json", "curve", "zvk", (dir / "conic.json").string(), "--stabilized"});
  CHECK(z.code == 0);
  CHECK(z.json()["payload"]["abelianization"] == "Z/2");
  const Out mo = call({"--json", "moishezon", "--p", "3", "--k", "0"});
  CHECK(mo.json()["payload"]["cases"][0]["nodes"] == "756");
  const Out lp = call({"--json", "lift", "pencil", (dir / "genus2_curve.json").string()});
  CHECK(lp.json()["payload"]["genus"] == 2);
  CHECK(lp.json()["payload"]["product_is_identity"] == true);
  const Out fv = call({"--json", "fukaya", "verify", (dir / "conic_arrangement.json").string(), "--order", "4"});
  CHECK(fv.json()["payload"]["holds"] == true);
  fs::remove_all(dir);
}
