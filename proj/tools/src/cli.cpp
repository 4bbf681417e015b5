#include "lefschetz_cli/cli.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/fibration.hpp"
#include "lefschetz/lifting.hpp"
#include "lefschetz/moishezon.hpp"
#include "lefschetz/orbit_search.hpp"
#include "lefschetz/presentation.hpp"
#include "lefschetz/schedule.hpp"
#include "lefschetz/word_syntax.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace lefschetz::cli {

using io::Json;

int exit_code(Status s) {
  switch (s) {
    case Status::ok:
      return 0;
    case Status::violated:
      return 1;
    case Status::error:
      return 2;
    case Status::undetermined:
      return 3;
  }
  return 2;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::violated:
      return "violated";
    case Status::error:
      return "error";
    case Status::undetermined:
      return "undetermined";
  }
  return "error";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  return os.str();
}

namespace {

constexpr const char* kVersion = "0.3.0";

struct Config {
  bool json = false;
  std::size_t depth = 6;
  std::size_t states = 100000;
  std::size_t polygon_cap = std::size_t{1} << 22;
  std::uint64_t seed = 0;
};

class Session {
 public:
  explicit Session(const Config& c) : config(c) {}

  Json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
    try {
      return io::parse_json(bytes);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  Json provenance() const {
    return {{"tool", "lefschetz"},
            {"version", kVersion},
            {"inputs", inputs},
            {"budgets", {{"depth", config.depth}, {"states", config.states}, {"polygon_cap", config.polygon_cap}}},
            {"seed", config.seed}};
  }

  Config config;
  Json inputs = Json::array();
};

std::string str(const BigInt& v) { return v.str(); }
std::string str(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_ll(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::size_t infer_strands(const std::string& a, const std::string& b) {
  std::size_t best = 1;
  for (const auto* s : {&a, &b}) {
    std::istringstream is(*s);
    std::string tok;
    while (is >> tok) {
      if (tok.size() < 2 || tok[0] != 'x') continue;
      std::size_t k = 1;
      std::size_t v = 0;
      while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) v = v * 10 + static_cast<std::size_t>(tok[k++] - '0');
      best = std::max(best, v);
    }
  }
  return best + 1;
}

// ---------------------------------------------------------------- groups

Report braid_eq(Session&, const std::string& w1, const std::string& w2, std::size_t strands) {
  if (strands == 0) strands = infer_strands(w1, w2);
  const BraidWord a = parse_braid(w1, strands), b = parse_braid(w2, strands);
  const bool eq = braid_equal(a, b);
  Report r;
  r.status = eq ? Status::ok : Status::violated;
  r.payload = {{"strands", strands},
               {"equal", eq},
               {"permutation_1", braid_permutation(a).to_string()},
               {"permutation_2", braid_permutation(b).to_string()}};
  r.lines.push_back(std::string("braids ") + (eq ? "are equal" : "differ") + " in B_" + std::to_string(strands));
  return r;
}

Report factorization_verify(Session& s, const std::string& path) {
  const Factorization f = io::factorization_from_json(s.load(path));
  const bool ok = verify_product(f);
  Report r;
  r.status = ok ? Status::ok : Status::violated;
  r.payload = {{"context", f.context.name()},
               {"factors", f.factors.size()},
               {"exponent_sum", f.exponent_sum()},
               {"product", f.context.canonical(f.product())},
               {"target", f.context.canonical(f.target_element())},
               {"verified", ok}};
  r.lines.push_back(f.context.name() + ": " + std::to_string(f.factors.size()) + " factors, exponent sum " +
                    std::to_string(f.exponent_sum()));
  r.lines.push_back(std::string("product ") + (ok ? "equals" : "does not equal") + " the target");
  return r;
}

struct MoveArgs {
  std::size_t hurwitz = 0;
  int direction = 1;
  std::string conjugate;
  std::size_t insert = 0;
  std::string element;
  std::size_t remove = 0;
  std::string output;
};

Report factorization_move(Session& s, const std::string& path, const MoveArgs& a) {
  const Factorization f = io::factorization_from_json(s.load(path));
  const int chosen = (a.hurwitz > 0) + (!a.conjugate.empty()) + (a.insert > 0) + (a.remove > 0);
  if (chosen != 1) throw InputError("give exactly one of --hurwitz, --conjugate, --insert, --delete");
  Move m;
  if (a.hurwitz > 0) {
    m = {MoveType::hurwitz, a.hurwitz, a.direction, {}};
    if (a.direction != 1 && a.direction != -1) throw InputError("--dir must be 1 or -1");
  } else if (!a.conjugate.empty()) {
    m = {MoveType::conjugate, 1, 1, f.context.parse(a.conjugate)};
  } else if (a.insert > 0) {
    if (a.element.empty()) throw InputError("--insert needs --element");
    m = {MoveType::insert_pair, a.insert, 1, f.context.parse(a.element)};
  } else {
    m = {MoveType::delete_pair, a.remove, 1, {}};
  }
  const Factorization g = apply_move(f, m, [](const Element&, const Factorization&) { return true; });
  const bool preserved = verify_product(g) == verify_product(f) && f.context.equal(g.product(), f.product());
  Report r;
  r.status = preserved ? Status::ok : Status::violated;
  r.payload = {{"move", m.describe(f.context)}, {"factorization", io::to_json(g)}, {"product_preserved", preserved}};
  r.lines.push_back("applied " + m.describe(f.context));
  for (std::size_t k = 0; k < g.factors.size(); ++k) r.lines.push_back("  " + std::to_string(k + 1) + ": " + g.context.format(g.factors[k]));
  if (!a.output.empty()) io::write_json_file(a.output, io::to_json(g));
  return r;
}

Report factorization_search(Session& s, const std::string& from, const std::string& to, const std::string& output) {
  const Factorization f1 = io::factorization_from_json(s.load(from));
  const Factorization f2 = io::factorization_from_json(s.load(to));
  const SearchResult res = orbit_search(f1, f2, {s.config.depth, s.config.states});
  Report r;
  r.payload = {{"found", res.path.has_value()},
               {"states_visited", res.states_visited},
               {"depth_reached", res.depth_reached},
               {"budget_exhausted", res.budget_exhausted}};
  if (res.path) {
    r.status = Status::ok;
    Json cert = io::to_json(*res.path, f1.context);
    const Factorization reached = replay(f1, *res.path);
    Json result = Json::array();
    for (const auto& e : reached.factors) result.push_back(f1.context.format(e));
    cert["result"] = result;
    r.payload["path"] = cert;
    r.lines.push_back("equivalent by " + std::to_string(res.path->size()) + " moves:");
    for (const auto& m : *res.path) r.lines.push_back("  " + m.describe(f1.context));
    if (!output.empty()) io::write_json_file(output, cert);
  } else if (res.budget_exhausted || res.depth_reached >= s.config.depth) {
    r.status = Status::undetermined;
    r.lines.push_back("not found within depth " + std::to_string(s.config.depth) + " and " + std::to_string(s.config.states) +
                      " states");
  } else {
    r.status = Status::violated;
    r.lines.push_back("orbit exhausted after " + std::to_string(res.states_visited) + " states: not equivalent under these moves");
  }
  return r;
}

Report factorization_replay(Session& s, const std::string& path_file, const std::string& source, const std::string& expect) {
  const Json pj = s.load(path_file);
  const Factorization f = io::factorization_from_json(s.load(source));
  const MovePath path = io::move_path_from_json(pj, f.context);
  Report r;
  Factorization reached;
  try {
    reached = replay(f, path, [](const Element&, const Factorization&) { return true; });
  } catch (const InputError& e) {
    r.status = Status::violated;
    r.payload = {{"applied", false}, {"reason", e.what()}};
    r.lines.push_back(std::string("certificate does not apply: ") + e.what());
    return r;
  }
  std::optional<Factorization> claimed;
  if (!expect.empty()) {
    claimed = io::factorization_from_json(s.load(expect));
  } else if (pj.contains("result")) {
    Factorization c = f;
    c.factors.clear();
    for (const auto& w : pj.at("result")) c.factors.push_back(f.context.parse(w.get<std::string>()));
    claimed = c;
  }
  const bool product_ok = f.context.equal(reached.product(), f.product());
  const bool match = !claimed || factorizations_equal(reached, *claimed);
  r.status = product_ok && match ? Status::ok : Status::violated;
  r.payload = {{"applied", true}, {"moves", path.size()}, {"product_preserved", product_ok}, {"matches_claim", match},
               {"claim_present", claimed.has_value()}, {"result", io::to_json(reached)}};
  r.lines.push_back("replayed " + std::to_string(path.size()) + " moves");
  if (claimed) r.lines.push_back(std::string("result ") + (match ? "matches" : "does not match") + " the claimed factorization");
  return r;
}

// ---------------------------------------------------------------- fibrations

Report invariants_cmd(Session& s, const std::string& path) {
  const FibrationSpec spec = io::fibration_from_json(s.load(path));
  Report r;
  try {
    const InvariantReport inv = invariants(spec);
    r.payload = {{"genus", spec.genus},
                 {"base_points", spec.base_points},
                 {"singular_fibers", spec.delta()},
                 {"chi", inv.chi},
                 {"b1", inv.b1},
                 {"b2", inv.b2},
                 {"c2", inv.c2},
                 {"h1", inv.h1.to_string()},
                 {"notes", inv.notes}};
    r.payload["sigma"] = inv.sigma ? Json(*inv.sigma) : Json(nullptr);
    r.payload["c1_squared"] = inv.c1_squared ? Json(*inv.c1_squared) : Json(nullptr);
    r.lines.push_back("chi = " + std::to_string(inv.chi));
    r.lines.push_back("sigma = " + (inv.sigma ? std::to_string(*inv.sigma) : std::string("unsupported")));
    if (inv.c1_squared) r.lines.push_back("c1^2 = " + std::to_string(*inv.c1_squared));
    r.lines.push_back("b1 = " + std::to_string(inv.b1) + ", b2 = " + std::to_string(inv.b2));
    r.lines.push_back("H1 = " + inv.h1.to_string());
    for (const auto& n : inv.notes) r.lines.push_back("note: " + n);
  } catch (const NonIntegralHodgeDegree& e) {
    r.status = Status::violated;
    r.payload = {{"reason", e.what()}};
    r.lines.push_back(std::string("not realizable as a hyperelliptic fibration: ") + e.what());
  }
  return r;
}

Report hyperelliptic_cmd(int g, long long delta0, const std::vector<long long>& delta_h) {
  Report r;
  try {
    const auto h = hyperelliptic_signature(g, delta0, delta_h);
    r.payload = {{"hodge_degree", str(h.hodge_degree)}, {"sigma", h.sigma}};
    r.lines.push_back("hodge degree c = " + str(h.hodge_degree));
    r.lines.push_back("sigma = " + std::to_string(h.sigma));
  } catch (const NonIntegralHodgeDegree& e) {
    r.status = Status::violated;
    r.payload = {{"reason", e.what()}};
    r.lines.push_back(e.what());
  }
  return r;
}

Report genus3_cmd(long long chi, long long sigma) {
  const auto g = genus3_nonholomorphic(chi, sigma);
  Report r;
  r.payload = {{"nonholomorphic", g.nonholomorphic},
               {"chi_condition", g.chi_condition},
               {"pairing_condition", g.pairing_condition},
               {"chi_plus_one_mod_7", g.chi_plus_one_mod_7},
               {"delta", g.delta},
               {"pairing", str(g.pairing)}};
  r.lines.push_back(std::string("non-holomorphic: ") + (g.nonholomorphic ? "yes" : "not decided by these tests"));
  r.lines.push_back("(chi + 1) mod 7 = " + std::to_string(g.chi_plus_one_mod_7) + ", pairing = " + str(g.pairing));
  return r;
}

Report schedule_cmd(const std::string& kind, double param, int n, std::size_t steps, double beta0) {
  TransversalityKind k;
  if (kind == "log")
    k = TransversalityKind::log_kind(param);
  else if (kind == "poly")
    k = TransversalityKind::poly_kind(param);
  else
    throw InputError("--kind must be log or poly");
  const auto rep = donaldson_schedule(k, n, steps, beta0);
  Report r;
  r.status = rep.survives ? Status::ok : Status::violated;
  r.payload = {{"kind", k.to_string()},
               {"dimension", n},
               {"steps", steps},
               {"survives", rep.survives},
               {"violations", rep.violations.size()},
               {"notes", rep.notes}};
  r.payload["first_violation"] = rep.first_violation ? Json(*rep.first_violation) : Json(nullptr);
  r.payload["first_failure"] = rep.first_failure ? Json(*rep.first_failure) : Json(nullptr);
  r.payload["final_log_inv_beta"] = rep.log_inv_beta.empty() ? Json(nullptr) : Json(rep.log_inv_beta.back());
  r.lines.push_back(k.to_string() + ": " + (rep.survives ? "survives " : "fails within ") + std::to_string(steps) + " steps");
  if (rep.first_failure) r.lines.push_back("failing from N = " + std::to_string(*rep.first_failure));
  if (!rep.violations.empty()) r.lines.push_back(std::to_string(rep.violations.size()) + " violated steps in total");
  return r;
}

// ---------------------------------------------------------------- curves

struct CurveFile {
  BraidedCurveSpec spec;
  std::optional<BranchData> theta;
};

CurveFile load_curve(Session& s, const std::string& path) {
  const Json j = s.load(path);
  CurveFile c{io::curve_from_json(j), std::nullopt};
  if (j.contains("theta")) c.theta = io::branch_from_json(j.at("theta"));
  return c;
}

Report curve_verify(Session& s, const std::string& path) {
  const CurveFile c = load_curve(s, path);
  const CurveReport rep = verify_braided_curve(c.spec);
  Report r;
  r.payload = {{"degree", c.spec.degree},
               {"factors", c.spec.factors.size()},
               {"valid", rep.valid},
               {"checksum_ok", rep.checksum_ok},
               {"exponent_sum", rep.exponent_sum},
               {"expected_sum", rep.expected_sum},
               {"notes", rep.notes}};
  r.payload["product_ok"] = rep.product_ok ? Json(*rep.product_ok) : Json(nullptr);
  bool ok = rep.valid;
  r.lines.push_back("degree " + std::to_string(c.spec.degree) + ", " + std::to_string(c.spec.factors.size()) +
                    " factors, exponent sum " + std::to_string(rep.exponent_sum) + " (expected " +
                    std::to_string(rep.expected_sum) + ")");
  if (c.theta) {
    const ThetaReport t = theta_compatible(c.spec, *c.theta);
    r.payload["theta"] = {{"compatible", t.compatible},
                          {"relators_killed", t.relators_killed},
                          {"local_types_ok", t.local_types_ok},
                          {"transitive", t.transitive},
                          {"diagnostics", t.diagnostics}};
    ok = ok && t.compatible;
    r.lines.push_back(std::string("covering monodromy ") + (t.compatible ? "compatible" : "incompatible"));
    for (const auto& d : t.diagnostics) r.lines.push_back("  " + d);
  }
  for (const auto& n : rep.notes) r.lines.push_back("note: " + n);
  if (!rep.product_ok && rep.checksum_ok)
    r.status = Status::undetermined;
  else
    r.status = ok ? Status::ok : Status::violated;
  return r;
}

Report curve_zvk(Session& s, const std::string& path, bool stabilized, std::size_t conj_len, std::size_t max_index) {
  const CurveFile c = load_curve(s, path);
  if (stabilized && !c.theta) throw InputError("--stabilized needs a 'theta' entry in the curve file");
  ZvkOptions opts;
  opts.stabilized = stabilized;
  opts.conjugator_length = conj_len;
  const Presentation p = zvk_presentation(c.spec, opts, c.theta ? &*c.theta : nullptr);
  const AbelianGroup ab = presentation_abelianization(p);
  const TietzeResult simp = tietze_simplify(p);
  const OrderCertificate cert = order_certificate(simp.presentation);
  const auto counts = low_index_subgroup_counts(simp.presentation, max_index);
  Report r;
  r.payload = {{"generators", p.generators},
               {"relators", p.relators.size()},
               {"abelianization", ab.to_string()},
               {"simplified", simp.presentation.to_string()},
               {"tietze_steps", simp.steps},
               {"low_index_counts", counts},
               {"order_method", cert.method},
               {"infinite", cert.infinite}};
  r.payload["order"] = cert.order ? Json(str(*cert.order)) : Json(nullptr);
  r.lines.push_back(std::to_string(p.generators) + " generators, " + std::to_string(p.relators.size()) + " relators");
  r.lines.push_back("abelianization: " + ab.to_string());
  r.lines.push_back("simplified: " + simp.presentation.to_string());
  r.lines.push_back("order: " + (cert.order ? str(*cert.order) : cert.infinite ? std::string("infinite") : std::string("unknown")) +
                    " (" + cert.method + ")");
  if (c.theta && c.theta->sheets <= 8) {
    const StructureReport st = structure_sequence_check(p, *c.theta, c.spec.degree);
    r.payload["structure"] = {{"pass", st.pass},
                              {"image_order", st.image_order},
                              {"ambient_order", st.ambient_order},
                              {"index", st.index},
                              {"parity_defined", st.parity_defined},
                              {"image_in_parity_kernel", st.image_in_parity_kernel},
                              {"notes", st.notes}};
    r.lines.push_back("image in S_N x Z_d: order " + std::to_string(st.image_order) + ", index " + std::to_string(st.index));
  }
  return r;
}

Report curve_thetas(Session& s, const std::string& path, std::size_t sheets, std::size_t bound) {
  const CurveFile c = load_curve(s, path);
  const ThetaEnumeration en = enumerate_thetas(c.spec, sheets, bound);
  Report r;
  Json classes = Json::array();
  for (const auto& b : en.classes) classes.push_back(io::to_json(b));
  r.payload = {{"sheets", sheets}, {"classes", classes}, {"count", en.classes.size()}, {"examined", en.examined},
               {"bound_exceeded", en.bound_exceeded}, {"diagnostics", en.diagnostics}};
  r.status = en.bound_exceeded ? Status::undetermined : Status::ok;
  r.lines.push_back(std::to_string(en.classes.size()) + " conjugacy classes of compatible assignments (" +
                    std::to_string(en.examined) + " examined)");
  for (const auto& b : en.classes) {
    std::string line = " ";
    for (const auto& t : b.transpositions) line += " " + t.to_string();
    r.lines.push_back(line);
  }
  if (en.bound_exceeded) r.lines.push_back("enumeration bound reached");
  return r;
}

Report moishezon_cmd(Session& s, const std::string& path, long long p, long long k) {
  std::vector<std::pair<long long, long long>> cases;
  if (!path.empty()) {
    const Json j = s.load(path);
    if (!j.contains("cases") || !j.at("cases").is_array()) throw InputError("moishezon file needs a 'cases' array");
    for (const auto& c : j.at("cases")) {
      if (!c.contains("p") || !c.contains("k")) throw InputError("each case needs p and k");
      cases.emplace_back(c.at("p").get<long long>(), c.at("k").get<long long>());
    }
  } else {
    if (p == 0) throw InputError("give --p (and --k) or a file");
    cases.emplace_back(p, k);
  }
  Report r;
  Json out = Json::array();
  for (auto [pp, kk] : cases) {
    const auto m = moishezon_family(pp, kk);
    out.push_back({{"p", pp},
                   {"k", kk},
                   {"degree", str(m.degree)},
                   {"cusps", str(m.cusps)},
                   {"nodes", str(m.nodes)},
                   {"omega_coefficient", str(m.omega_coefficient)},
                   {"torus_coefficient", str(m.torus_coefficient)},
                   {"proportional", m.proportional}});
    r.lines.push_back("p=" + std::to_string(pp) + " k=" + std::to_string(kk) + ": degree " + str(m.degree) + ", cusps " +
                      str(m.cusps) + ", nodes " + str(m.nodes) + ", " + std::to_string(pp) + " c1(K) = " +
                      str(m.omega_coefficient * pp) + " [omega] + " + str(m.torus_coefficient) + " PD[T]" +
                      (m.proportional ? " (proportional)" : ""));
  }
  r.payload = {{"cases", out}};
  return r;
}

// ---------------------------------------------------------------- lifting

BranchData load_branch(Session& s, const std::string& path, std::size_t* degree) {
  const Json j = s.load(path);
  if (j.contains("theta")) {
    const auto spec = io::curve_from_json(j);
    if (degree) *degree = spec.degree;
    return io::branch_from_json(j.at("theta"));
  }
  BranchData b = io::branch_from_json(j);
  if (degree) *degree = b.transpositions.size();
  return b;
}

Report lift_check(Session& s, const std::string& path, const std::string& word) {
  std::size_t d = 0;
  const BranchData b = load_branch(s, path, &d);
  const BraidWord w = parse_braid(word, b.transpositions.size());
  const bool liftable = is_liftable(w, b);
  Report r;
  r.payload = {{"liftable", liftable}, {"braid", w.to_string()}};
  if (!liftable) {
    r.status = Status::violated;
    r.lines.push_back("braid does not preserve the covering monodromy");
    return r;
  }
  const CoverModel model(b);
  const HomologyAction act = model.action(w);
  const bool sym = is_symplectic(act.matrix, model.intersection_form());
  r.payload["genus"] = model.genus();
  r.payload["matrix"] = matrix_json(act.matrix);
  r.payload["intersection_form"] = matrix_json(model.intersection_form());
  r.payload["symplectic"] = sym;
  r.payload["marked_points"] = act.marked_points.to_string();
  r.status = sym ? Status::ok : Status::violated;
  r.lines.push_back("fiber genus " + std::to_string(model.genus()));
  r.lines.push_back("action on H1: " + act.matrix.to_string());
  r.lines.push_back(std::string("preserves the intersection form: ") + (sym ? "yes" : "no"));
  return r;
}

Report lift_pencil(Session& s, const std::string& path) {
  const CurveFile c = load_curve(s, path);
  if (!c.theta) throw InputError("lift pencil needs a 'theta' entry in the curve file");
  const PencilMonodromy pm = pencil_monodromy(c.spec, *c.theta);
  Report r;
  Json twists = Json::array();
  for (const auto& f : pm.tangencies) twists.push_back({{"index", f.index}, {"matrix", matrix_json(f.matrix)}});
  r.payload = {{"genus", pm.genus},
               {"intersection_form", matrix_json(pm.intersection_form)},
               {"tangencies", twists},
               {"singular_factors", pm.singular.size()},
               {"singular_trivial", pm.singular_trivial},
               {"product_is_identity", pm.product_is_identity},
               {"all_symplectic", pm.all_symplectic}};
  const bool ok = pm.singular_trivial && pm.product_is_identity && pm.all_symplectic;
  r.status = ok ? Status::ok : Status::violated;
  r.lines.push_back("fiber genus " + std::to_string(pm.genus) + ", " + std::to_string(pm.tangencies.size()) + " Dehn twists");
  r.lines.push_back(std::string("product of twists is the identity on H1: ") + (pm.product_is_identity ? "yes" : "no"));
  r.lines.push_back(std::string("nodes and cusps act trivially: ") + (pm.singular_trivial ? "yes" : "no"));
  return r;
}

// ---------------------------------------------------------------- fukaya

Report fukaya_compute(Session& s, const std::string& path, std::size_t max_n) {
  const CurveArrangement arr = io::arrangement_from_json(s.load(path));
  const ArrangementReport ar = validate_arrangement(arr);
  Report r;
  if (!ar.valid) {
    r.status = Status::error;
    r.payload = {{"errors", ar.errors}};
    for (const auto& e : ar.errors) r.lines.push_back("invalid: " + e);
    return r;
  }
  PolygonOptions opts;
  opts.max_subsets = s.config.polygon_cap;
  const FukayaData data = compute_category(arr, max_n, opts);
  r.payload = io::to_json(data);
  r.payload["arrangement"] = {{"vertices", ar.vertices}, {"edges", ar.edges}, {"faces", ar.faces}, {"punctures", ar.punctures}};
  r.lines.push_back("V = " + std::to_string(ar.vertices) + ", E = " + std::to_string(ar.edges) + ", F = " + std::to_string(ar.faces));
  for (int i = 1; i <= static_cast<int>(data.objects); ++i)
    for (int j = i + 1; j <= static_cast<int>(data.objects); ++j) {
      std::string names;
      for (auto g : data.hom(i, j)) names += " " + data.generators[g].name;
      r.lines.push_back("Hom(L" + std::to_string(i) + ", L" + std::to_string(j) + "): rank " + std::to_string(data.hom(i, j).size()) +
                        (names.empty() ? "" : " {" + names.substr(1) + "}"));
    }
  std::size_t shown = 0;
  for (const auto& [inputs, value] : data.mu) {
    bool unit = false;
    for (auto g : inputs) unit = unit || data.generators[g].identity();
    if (unit) continue;
    std::string args;
    for (auto g : inputs) args += (args.empty() ? "" : ", ") + data.generators[g].name;
    r.lines.push_back("mu" + std::to_string(inputs.size()) + "(" + args + ") = " + data.format(value));
    ++shown;
  }
  if (shown == 0) r.lines.push_back("all mu vanish apart from the units");
  return r;
}

Report fukaya_verify(Session& s, const std::string& path, std::size_t order) {
  const CurveArrangement arr = io::arrangement_from_json(s.load(path));
  PolygonOptions opts;
  opts.max_subsets = s.config.polygon_cap;
  const FukayaData data = compute_category(arr, 0, opts);
  const AInfinityReport rep = verify_a_infinity(data, order);
  Report r;
  r.status = rep.holds ? Status::ok : Status::violated;
  r.payload = {{"order", order}, {"holds", rep.holds}, {"relations_checked", rep.relations_checked}, {"failure", rep.failure}};
  r.lines.push_back(std::to_string(rep.relations_checked) + " relations checked up to order " + std::to_string(order));
  r.lines.push_back(rep.holds ? std::string("A-infinity relations hold") : "fails: " + rep.failure);
  return r;
}

Report examples_install(const std::string& dir) {
  const Json manifest = install_corpus(dir);
  Report r;
  r.payload = manifest;
  for (const auto& f : manifest.at("files"))
    r.lines.push_back(f.at("sha256").get<std::string>().substr(0, 16) + "  " + f.at("name").get<std::string>());
  r.lines.push_back("wrote " + std::to_string(manifest.at("files").size()) + " files and manifest.json to " + dir);
  return r;
}

void emit(const Report& r, const Session& s, std::ostream& out) {
  if (s.config.json) {
    Json j = {{"status", to_string(r.status)}, {"payload", r.payload}, {"provenance", s.provenance()}};
    out << io::dump(j);
  } else {
    for (const auto& l : r.lines) out << l << "\n";
    out << "status: " << to_string(r.status) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy and Fukaya-category workbench", "lefschetz"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Config config;
  app.add_flag("--json", config.json, "JSON report on stdout");
  app.add_option("--budget-depth", config.depth, "search depth bound")->check(CLI::PositiveNumber);
  app.add_option("--budget-states", config.states, "search state cap")->check(CLI::PositiveNumber);
  app.add_option("--polygon-cap", config.polygon_cap, "face sets examined per polygon search")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "recorded in the provenance");

  std::function<Report(Session&)> action;

  // braid
  auto* braid = app.add_subcommand("braid", "braid group words")->require_subcommand(1);
  std::string bw1, bw2;
  std::size_t strands = 0;
  auto* beq = braid->add_subcommand("eq", "equality of two braid words");
  beq->add_option("word1", bw1)->required();
  beq->add_option("word2", bw2)->required();
  beq->add_option("--strands", strands, "number of strands (default: from the words)");
  beq->callback([&] { action = [&](Session& s) { return braid_eq(s, bw1, bw2, strands); }; });

  // factorization
  auto* fact = app.add_subcommand("factorization", "monodromy factorizations")->require_subcommand(1);
  std::string ffile, ffile2, fout, fexpect;
  auto* fver = fact->add_subcommand("verify", "product equals the target");
  fver->add_option("file", ffile)->required()->check(CLI::ExistingFile);
  fver->callback([&] { action = [&](Session& s) { return factorization_verify(s, ffile); }; });
  MoveArgs margs;
  auto* fmove = fact->add_subcommand("move", "apply one move");
  fmove->add_option("file", ffile)->required()->check(CLI::ExistingFile);
  fmove->add_option("--hurwitz", margs.hurwitz, "Hurwitz move at position i");
  fmove->add_option("--dir", margs.direction, "+1 or -1");
  fmove->add_option("--conjugate", margs.conjugate, "global conjugation by a word");
  fmove->add_option("--insert", margs.insert, "insert (g, g^-1) at position i");
  fmove->add_option("--element", margs.element, "g for --insert");
  fmove->add_option("--delete", margs.remove, "delete the cancelling pair at position i");
  fmove->add_option("-o,--output", margs.output, "write the new factorization");
  fmove->callback([&] { action = [&](Session& s) { return factorization_move(s, ffile, margs); }; });
  auto* fsearch = fact->add_subcommand("search", "bounded search for a move path");
  fsearch->add_option("from", ffile)->required()->check(CLI::ExistingFile);
  fsearch->add_option("to", ffile2)->required()->check(CLI::ExistingFile);
  fsearch->add_option("-o,--output", fout, "write the path certificate");
  fsearch->callback([&] { action = [&](Session& s) { return factorization_search(s, ffile, ffile2, fout); }; });
  auto* freplay = fact->add_subcommand("replay", "check a path certificate");
  freplay->add_option("path", ffile2)->required()->check(CLI::ExistingFile);
  freplay->add_option("source", ffile)->required()->check(CLI::ExistingFile);
  freplay->add_option("--expect", fexpect, "factorization the path must reach")->check(CLI::ExistingFile);
  freplay->callback([&] { action = [&](Session& s) { return factorization_replay(s, ffile2, ffile, fexpect); }; });

  // fibrations
  std::string spec_file;
  auto* inv = app.add_subcommand("invariants", "invariants of a fibration or pencil");
  inv->add_option("file", spec_file)->required()->check(CLI::ExistingFile);
  inv->callback([&] { action = [&](Session& s) { return invariants_cmd(s, spec_file); }; });
  int hg = 1;
  long long hdelta0 = 0;
  std::vector<long long> hdelta_h;
  auto* hyp = app.add_subcommand("hyperelliptic", "signature of a hyperelliptic fibration");
  hyp->add_option("--genus", hg)->required();
  hyp->add_option("--delta0", hdelta0)->required();
  hyp->add_option("--delta-h", hdelta_h, "reducible fiber counts for h = 1..g/2")->delimiter(',');
  hyp->callback([&] { action = [&](Session&) { return hyperelliptic_cmd(hg, hdelta0, hdelta_h); }; });
  long long gchi = 0, gsigma = 0;
  auto* g3 = app.add_subcommand("genus3", "genus-3 non-holomorphicity tests");
  g3->add_option("--chi", gchi)->required();
  g3->add_option("--sigma", gsigma)->required();
  g3->callback([&] { action = [&](Session&) { return genus3_cmd(gchi, gsigma); }; });
  std::string skind = "log";
  double sparam = 1.0, sbeta0 = 0.25;
  int sdim = 2;
  std::size_t ssteps = 200;
  auto* sched = app.add_subcommand("schedule", "approximately holomorphic transversality schedule");
  sched->add_option("--kind", skind, "log or poly")->check(CLI::IsMember({"log", "poly"}));
  sched->add_option("--param", sparam, "d for log, q for poly");
  sched->add_option("--dim", sdim, "complex dimension n");
  sched->add_option("--steps", ssteps)->check(CLI::PositiveNumber);
  sched->add_option("--beta0", sbeta0);
  sched->callback([&] { action = [&](Session&) { return schedule_cmd(skind, sparam, sdim, ssteps, sbeta0); }; });

  // curves
  auto* curve = app.add_subcommand("curve", "braided curves")->require_subcommand(1);
  std::string cfile;
  auto* cver = curve->add_subcommand("verify", "factorization of the full twist and covering data");
  cver->add_option("file", cfile)->required()->check(CLI::ExistingFile);
  cver->callback([&] { action = [&](Session& s) { return curve_verify(s, cfile); }; });
  bool zstab = false;
  std::size_t zlen = 4, zindex = 4;
  auto* czvk = curve->add_subcommand("zvk", "fundamental group presentation of the complement");
  czvk->add_option("file", cfile)->required()->check(CLI::ExistingFile);
  czvk->add_flag("--stabilized", zstab, "add commutators of disjoint geometric generators");
  czvk->add_option("--conjugator-length", zlen);
  czvk->add_option("--max-index", zindex, "low-index subgroup counts up to this index");
  czvk->callback([&] { action = [&](Session& s) { return curve_zvk(s, cfile, zstab, zlen, zindex); }; });
  std::size_t tsheets = 2, tbound = 1000000;
  auto* cth = curve->add_subcommand("thetas", "enumerate covering monodromies");
  cth->add_option("file", cfile)->required()->check(CLI::ExistingFile);
  cth->add_option("--sheets", tsheets)->check(CLI::PositiveNumber);
  cth->add_option("--bound", tbound)->check(CLI::PositiveNumber);
  cth->callback([&] { action = [&](Session& s) { return curve_thetas(s, cfile, tsheets, tbound); }; });

  std::string mfile;
  long long mp = 0, mk = 0;
  auto* moish = app.add_subcommand("moishezon", "branch curve numerics of the twisted family");
  moish->add_option("file", mfile)->check(CLI::ExistingFile);
  moish->add_option("--p", mp);
  moish->add_option("--k", mk);
  moish->callback([&] { action = [&](Session& s) { return moishezon_cmd(s, mfile, mp, mk); }; });

  // lifting
  auto* lift = app.add_subcommand("lift", "lifting braids to the covering surface")->require_subcommand(1);
  std::string lfile, lword;
  auto* lcheck = lift->add_subcommand("check", "liftability and action on H1");
  lcheck->add_option("file", lfile)->required()->check(CLI::ExistingFile);
  lcheck->add_option("--braid", lword)->required();
  lcheck->callback([&] { action = [&](Session& s) { return lift_check(s, lfile, lword); }; });
  auto* lpencil = lift->add_subcommand("pencil", "Dehn twists of the induced pencil");
  lpencil->add_option("file", lfile)->required()->check(CLI::ExistingFile);
  lpencil->callback([&] { action = [&](Session& s) { return lift_pencil(s, lfile); }; });

  // fukaya
  auto* fuk = app.add_subcommand("fukaya", "directed category of an ordered curve system")->require_subcommand(1);
  std::string afile;
  std::size_t amax = 0, aorder = 4;
  auto* fcomp = fuk->add_subcommand("compute", "hom bases and mu tables");
  fcomp->add_option("file", afile)->required()->check(CLI::ExistingFile);
  fcomp->add_option("--max-n", amax, "highest mu order (default r - 1)");
  fcomp->callback([&] { action = [&](Session& s) { return fukaya_compute(s, afile, amax); }; });
  auto* fverify = fuk->add_subcommand("verify", "A-infinity relations");
  fverify->add_option("file", afile)->required()->check(CLI::ExistingFile);
  fverify->add_option("--order", aorder, "check chains up to this length")->check(CLI::PositiveNumber);
  fverify->callback([&] { action = [&](Session& s) { return fukaya_verify(s, afile, aorder); }; });

  auto* ex = app.add_subcommand("examples", "bundled example corpus")->require_subcommand(1);
  std::string exdir;
  auto* exinst = ex->add_subcommand("install", "write the corpus and its manifest");
  exinst->add_option("dir", exdir)->required();
  exinst->callback([&] { action = [&](Session&) { return examples_install(exdir); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(Status::error);
  }
  if (!action) {
    err << "error: no command\n";
    return exit_code(Status::error);
  }

  Session session(config);
  Report report;
  try {
    report = action(session);
  } catch (const ResourceError& e) {
    report.status = Status::undetermined;
    report.payload = {{"reason", e.what()}};
    report.lines = {std::string("budget exhausted: ") + e.what()};
  } catch (const CapabilityError& e) {
    report.status = Status::error;
    report.payload = {{"error", e.what()}, {"unsupported", true}};
    report.lines = {std::string("unsupported: ") + e.what()};
  } catch (const NonIntegralHodgeDegree& e) {
    report.status = Status::violated;
    report.payload = {{"reason", e.what()}};
    report.lines = {e.what()};
  } catch (const std::invalid_argument& e) {
    report.status = Status::error;
    report.payload = {{"error", e.what()}};
    report.lines = {std::string("error: ") + e.what()};
  } catch (const std::exception& e) {
    report.status = Status::error;
    report.payload = {{"error", std::string("internal: ") + e.what()}};
    report.lines = {std::string("internal error: ") + e.what()};
  }
  emit(report, session, out);
  return exit_code(report.status);
}

}  // namespace lefschetz::cli
