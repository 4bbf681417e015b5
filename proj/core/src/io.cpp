#include "lefschetz/io.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/word_syntax.hpp"

#include <fstream>
#include <sstream>

namespace lefschetz::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object containing '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j, key);
}

std::vector<Element> elements(const Json& list, const GroupContext& ctx) {
  if (!list.is_array()) throw InputError("expected an array of words");
  std::vector<Element> out;
  for (const auto& w : list) {
    if (!w.is_string()) throw InputError("words must be strings");
    out.push_back(ctx.parse(w.get<std::string>()));
  }
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump(j);
}

Json to_json(const GroupContext& ctx) {
  switch (ctx.kind) {
    case ContextKind::braid:
      return {{"group", "braid"}, {"strands", ctx.size}};
    case ContextKind::sl2z:
      return {{"group", "sl2z"}};
    case ContextKind::free:
      return {{"group", "free"}, {"rank", ctx.size}};
  }
  return {};
}

GroupContext context_from_json(const Json& j) {
  const auto group = get<std::string>(j, "group");
  if (group == "braid") {
    const auto d = get<long long>(j, "strands");
    if (d < 2) throw InputError("braid context needs at least 2 strands");
    return GroupContext::braid(static_cast<std::size_t>(d));
  }
  if (group == "sl2z") return GroupContext::sl2z();
  if (group == "free") {
    const auto r = get<long long>(j, "rank");
    if (r < 1) throw InputError("free context needs rank >= 1");
    return GroupContext::free(static_cast<std::size_t>(r));
  }
  throw InputError("unknown group '" + group + "'");
}

Json to_json(const Factorization& f) {
  Json j;
  j["context"] = to_json(f.context);
  switch (f.target.kind) {
    case TargetKind::identity:
      j["target"] = "identity";
      break;
    case TargetKind::full_twist:
      j["target"] = "full_twist";
      break;
    case TargetKind::element:
      j["target"] = {{"element", f.context.format(f.target.element)}};
      break;
  }
  j["factors"] = Json::array();
  for (const auto& e : f.factors) j["factors"].push_back(f.context.format(e));
  return j;
}

Factorization factorization_from_json(const Json& j) {
  Factorization f;
  f.context = context_from_json(field(j, "context"));
  const Json& t = field(j, "target");
  if (t.is_string()) {
    const auto s = t.get<std::string>();
    if (s == "identity")
      f.target = Target::identity();
    else if (s == "full_twist") {
      if (f.context.kind != ContextKind::braid) throw InputError("full_twist target needs a braid context");
      f.target = Target::full_twist();
    } else
      throw InputError("unknown target '" + s + "'");
  } else {
    f.target = Target::of(f.context.parse(get<std::string>(t, "element")));
  }
  f.factors = elements(field(j, "factors"), f.context);
  return f;
}

Json to_json(const MovePath& path, const GroupContext& ctx) {
  Json moves = Json::array();
  for (const auto& m : path) {
    Json x;
    switch (m.type) {
      case MoveType::hurwitz:
        x = {{"type", "hurwitz"}, {"index", m.index}, {"direction", m.direction}};
        break;
      case MoveType::conjugate:
        x = {{"type", "conjugate"}, {"element", ctx.format(m.element)}};
        break;
      case MoveType::insert_pair:
        x = {{"type", "insert_pair"}, {"index", m.index}, {"element", ctx.format(m.element)}};
        break;
      case MoveType::delete_pair:
        x = {{"type", "delete_pair"}, {"index", m.index}};
        break;
    }
    moves.push_back(x);
  }
  return {{"moves", moves}};
}

MovePath move_path_from_json(const Json& j, const GroupContext& ctx) {
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) throw InputError("'moves' must be an array");
  MovePath path;
  for (const auto& x : moves) {
    Move m;
    const auto type = get<std::string>(x, "type");
    if (type == "hurwitz") {
      m.type = MoveType::hurwitz;
      m.direction = get<int>(x, "direction");
      if (m.direction != 1 && m.direction != -1) throw InputError("hurwitz direction must be +1 or -1");
    } else if (type == "conjugate") {
      m.type = MoveType::conjugate;
    } else if (type == "insert_pair") {
      m.type = MoveType::insert_pair;
    } else if (type == "delete_pair") {
      m.type = MoveType::delete_pair;
    } else {
      throw InputError("unknown move type '" + type + "'");
    }
    if (m.type != MoveType::conjugate) {
      const auto i = get<long long>(x, "index");
      if (i < 1) throw InputError("move index is 1-based");
      m.index = static_cast<std::size_t>(i);
    }
    if (m.type == MoveType::conjugate || m.type == MoveType::insert_pair)
      m.element = ctx.parse(get<std::string>(x, "element"));
    path.push_back(m);
  }
  return path;
}

Json to_json(const FibrationSpec& spec) {
  Json twists = Json::array();
  for (const auto& t : spec.twists) {
    if (t.separating) {
      Json x = {{"separating", true}};
      if (t.genus_split) x["genus_split"] = *t.genus_split;
      twists.push_back(x);
    } else {
      twists.push_back({{"class", t.homology_class}});
    }
  }
  return {{"genus", spec.genus}, {"base_points", spec.base_points}, {"twists", twists}};
}

FibrationSpec fibration_from_json(const Json& j) {
  FibrationSpec spec;
  spec.genus = get<int>(j, "genus");
  spec.base_points = get_or<int>(j, "base_points", 0);
  const Json& twists = field(j, "twists");
  if (!twists.is_array()) throw InputError("'twists' must be an array");
  for (const auto& x : twists) {
    TwistDatum t;
    t.separating = get_or<bool>(x, "separating", false);
    if (t.separating) {
      if (x.contains("genus_split")) t.genus_split = get<int>(x, "genus_split");
      t.homology_class.assign(static_cast<std::size_t>(std::max(0, 2 * spec.genus)), 0);
    } else {
      t.homology_class = get<std::vector<long long>>(x, "class");
    }
    spec.twists.push_back(t);
  }
  spec.validate();
  return spec;
}

Json to_json(const BranchData& b) {
  Json ts = Json::array();
  for (const auto& t : b.transpositions) ts.push_back(t.to_string());
  return {{"sheets", b.sheets}, {"transpositions", ts}};
}

BranchData branch_from_json(const Json& j) {
  BranchData b;
  const auto n = get<long long>(j, "sheets");
  if (n < 1) throw InputError("sheets must be positive");
  b.sheets = static_cast<std::size_t>(n);
  for (const auto& s : get<std::vector<std::string>>(j, "transpositions")) b.transpositions.push_back(parse_permutation(s, b.sheets));
  b.validate();
  return b;
}

Json to_json(const BraidedCurveSpec& spec) {
  Json fs = Json::array();
  for (const auto& f : spec.factors)
    fs.push_back({{"conjugator", f.conjugator.to_string()}, {"base", f.base}, {"exponent", f.exponent}});
  return {{"degree", spec.degree}, {"factors", fs}};
}

BraidedCurveSpec curve_from_json(const Json& j) {
  BraidedCurveSpec spec;
  const auto d = get<long long>(j, "degree");
  if (d < 2) throw InputError("curve degree must be at least 2");
  spec.degree = static_cast<std::size_t>(d);
  const Json& fs = field(j, "factors");
  if (!fs.is_array()) throw InputError("'factors' must be an array");
  for (const auto& x : fs) {
    CurveFactor f;
    f.conjugator = parse_braid(get_or<std::string>(x, "conjugator", ""), spec.degree);
    const auto base = get<long long>(x, "base");
    if (base < 1) throw InputError("factor base is 1-based");
    f.base = static_cast<std::size_t>(base);
    f.exponent = get<int>(x, "exponent");
    spec.factors.push_back(f);
  }
  spec.validate();
  return spec;
}

Json to_json(const CurveArrangement& arr) {
  Json darts = Json::array();
  for (std::size_t d = 0; d < arr.darts.size(); ++d)
    darts.push_back({{"id", d}, {"next", arr.darts[d].next}, {"opposite", arr.darts[d].opposite}, {"curve", arr.darts[d].curve}});
  Json faces = Json::array();
  for (const auto& f : arr.faces) faces.push_back({{"cycles", f.cycles}, {"punctures", f.punctures}});
  Json labels = Json::array();
  for (const auto& [d, name] : arr.vertex_labels) labels.push_back({{"dart", d}, {"name", name}});
  return {{"darts", darts}, {"faces", faces}, {"curves", arr.curves}, {"vertex_labels", labels}};
}

CurveArrangement arrangement_from_json(const Json& j) {
  CurveArrangement arr;
  const Json& darts = field(j, "darts");
  if (!darts.is_array()) throw InputError("'darts' must be an array");
  arr.darts.resize(darts.size());
  std::vector<bool> seen(darts.size(), false);
  for (std::size_t k = 0; k < darts.size(); ++k) {
    const auto& x = darts[k];
    const auto id = get_or<long long>(x, "id", static_cast<long long>(k));
    if (id < 0 || static_cast<std::size_t>(id) >= darts.size() || seen[static_cast<std::size_t>(id)])
      throw InputError("dart ids must be a permutation of 0..n-1");
    seen[static_cast<std::size_t>(id)] = true;
    Dart& d = arr.darts[static_cast<std::size_t>(id)];
    d.next = get<int>(x, "next");
    d.opposite = get<int>(x, "opposite");
    d.curve = get<int>(x, "curve");
  }
  const Json& faces = field(j, "faces");
  if (!faces.is_array()) throw InputError("'faces' must be an array");
  for (const auto& x : faces) {
    Face f;
    f.cycles = get<std::vector<std::vector<int>>>(x, "cycles");
    f.punctures = get_or<long long>(x, "punctures", 0);
    arr.faces.push_back(f);
  }
  arr.curves = get<std::vector<std::vector<int>>>(j, "curves");
  if (j.contains("vertex_labels")) {
    const Json& labels = field(j, "vertex_labels");
    if (!labels.is_array()) throw InputError("'vertex_labels' must be an array");
    for (const auto& x : labels) arr.vertex_labels[get<int>(x, "dart")] = get<std::string>(x, "name");
  }
  return arr;
}

Json to_json(const FukayaData& data) {
  Json gens = Json::array();
  for (const auto& g : data.generators) gens.push_back({{"name", g.name}, {"source", g.source}, {"target", g.target}});
  Json homs = Json::array();
  for (int i = 1; i <= static_cast<int>(data.objects); ++i)
    for (int k = i + 1; k <= static_cast<int>(data.objects); ++k) {
      Json names = Json::array();
      for (auto g : data.hom(i, k)) names.push_back(data.generators[g].name);
      homs.push_back({{"source", i}, {"target", k}, {"rank", names.size()}, {"basis", names}});
    }
  Json mu = Json::array();
  for (const auto& [inputs, value] : data.mu) {
    Json in = Json::array();
    for (auto g : inputs) in.push_back(data.generators[g].name);
    Json out = Json::array();
    for (auto g : value) out.push_back(data.generators[g].name);
    mu.push_back({{"order", inputs.size()}, {"inputs", in}, {"value", out}});
  }
  return {{"objects", data.objects}, {"generators", gens}, {"homs", homs}, {"mu", mu}, {"max_order", data.max_order}};
}

}  // namespace lefschetz::io
