#include "lefschetz/fukaya.hpp"

#include "lefschetz/circle_arrangement.hpp"
#include "lefschetz/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numbers>
#include <tuple>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace lefschetz {

namespace {

std::size_t required_order(std::size_t objects) { return std::max<std::size_t>(objects, 3) - 1; }

std::vector<Generator> all_generators(const CurveArrangement& arr, const ArrangementTopology& top) {
  const int r = static_cast<int>(arr.curves.size());
  std::vector<Generator> gens;
  for (int i = 1; i <= r; ++i) gens.push_back({"id" + std::to_string(i), i, i, -1});
  for (std::size_t v = 0; v < top.vertex_darts.size(); ++v) {
    if (!top.crossing[v]) continue;
    gens.push_back({top.vertex_names[v], top.vertex_curves[v].first, top.vertex_curves[v].second, static_cast<int>(v)});
  }
  std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.source, a.target, a.name) < std::tie(b.source, b.target, b.name);
  });
  return gens;
}

void check_exact(const CurveArrangement& arr) {
  const auto rep = validate_arrangement(arr);
  if (!rep.valid) {
    std::string msg = "invalid arrangement:";
    for (std::size_t k = 0; k < rep.errors.size() && k < 5; ++k) msg += " " + rep.errors[k] + ";";
    throw InputError(msg);
  }
  if (!rep.exact) throw InputError("arrangement is not exact: some curve bounds a puncture-free disc");
}

}  // namespace

std::optional<std::size_t> FukayaData::find(const std::string& name) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].name == name) return k;
  return std::nullopt;
}

std::size_t FukayaData::index(const std::string& name) const {
  auto k = find(name);
  if (!k) throw InputError("unknown generator '" + name + "'");
  return *k;
}

std::vector<std::size_t> FukayaData::hom(int i, int j) const {
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > objects || static_cast<std::size_t>(j) > objects)
    throw InputError("hom: object index out of range");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].source == i && generators[k].target == j) out.push_back(k);
  return out;
}

Z2Vector FukayaData::value(const std::vector<std::size_t>& inputs) const {
  if (inputs.empty()) throw InputError("mu: empty input tuple");
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k] >= generators.size()) throw InputError("mu: generator index out of range");
    if (k > 0 && generators[inputs[k - 1]].target != generators[inputs[k]].source)
      throw InputError("mu: inputs are not composable at position " + std::to_string(k + 1));
  }
  const std::size_t n = inputs.size();
  if (n > max_order && n <= required_order(objects))
    throw std::out_of_range("mu^" + std::to_string(n) + " table was not computed");
  auto it = mu.find(inputs);
  return it == mu.end() ? Z2Vector{} : it->second;
}

std::string FukayaData::format(const Z2Vector& v) const {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " + " : "") + generators.at(v[k]).name;
  return s;
}

std::vector<Generator> hom_basis(const CurveArrangement& arr, int i, int j) {
  const auto top = analyze_arrangement(arr);
  const int r = static_cast<int>(arr.curves.size());
  if (i < 1 || j < 1 || i > r || j > r) throw InputError("hom_basis: object index out of range");
  std::vector<Generator> out;
  for (auto& g : all_generators(arr, top))
    if (g.source == i && g.target == j) out.push_back(g);
  return out;
}

BoundaryScan scan_polygon_boundaries(const CurveArrangement& arr, const std::vector<Generator>& gens,
                                     const PolygonOptions& options) {
  const auto top = analyze_arrangement(arr);
  const int r = static_cast<int>(arr.curves.size());
  const std::size_t nd = arr.darts.size();
  auto opp = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].opposite; };
  auto sigma = [&](int d) { return arr.darts[static_cast<std::size_t>(opp(d))].next; };
  auto curve = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].curve; };
  auto face = [&](int d) { return top.face_of[static_cast<std::size_t>(d)]; };
  auto vertex = [&](int d) { return top.vertex_of[static_cast<std::size_t>(d)]; };
  auto head = [&](int d) { return vertex(opp(d)); };
  auto straight = [&](int d) {
    const int back = opp(d);
    return top.crossing[static_cast<std::size_t>(vertex(back))] ? sigma(sigma(back)) : sigma(back);
  };

  std::vector<std::vector<std::vector<std::size_t>>> hom(static_cast<std::size_t>(r + 1),
                                                        std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(r + 1)));
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].identity())
      hom[static_cast<std::size_t>(gens[k].source)][static_cast<std::size_t>(gens[k].target)].push_back(k);

  BoundaryScan scan;
  std::size_t examined = 0;
  std::vector<int> t(nd);
  std::vector<long long> mult(arr.faces.size());
  std::vector<char> known(arr.faces.size());

  // arc along curve `label` from vertex `from` leaving by dart `start`, up to vertex `to`
  auto arc = [&](int start, int to, std::size_t extra, std::vector<int>& darts) {
    int d = start;
    for (std::size_t guard = 0; guard <= (extra + 1) * nd; ++guard) {
      darts.push_back(d);
      if (head(d) == to && extra-- == 0) return true;
      d = straight(d);
    }
    return false;
  };

  auto check_loop = [&](const std::vector<int>& labels, const std::vector<std::size_t>& corners,
                        const std::vector<std::size_t>& winding, int first) {
    // corners[0] = output at the start of arc 0, corners[k] = input between arcs k-1 and k
    const std::size_t nc = labels.size();
    std::vector<int> darts;
    int d = first;
    for (std::size_t k = 0; k < nc; ++k) {
      const int to = gens[corners[(k + 1) % nc]].vertex;
      if (!arc(d, to, winding[k], darts)) return;
      d = sigma(opp(darts.back()));  // left turn
      if (curve(d) != labels[(k + 1) % nc]) return;
    }
    if (d != first) return;
    std::fill(t.begin(), t.end(), 0);
    std::vector<int> visits(top.vertex_darts.size(), 0);
    bool simple = true;
    for (int x : darts) {
      t[static_cast<std::size_t>(x)] += 1;
      if (++visits[static_cast<std::size_t>(vertex(x))] > 1) simple = false;
    }
    // multiplicities: m(left of d) - m(right of d) = t(d) - t(opp d)
    std::fill(known.begin(), known.end(), 0);
    std::vector<int> stack{0};
    known[0] = 1;
    mult[0] = 0;
    while (!stack.empty()) {
      const auto f = static_cast<std::size_t>(stack.back());
      stack.pop_back();
      for (const auto& cyc : arr.faces[f].cycles)
        for (int x : cyc) {
          const auto g = static_cast<std::size_t>(face(opp(x)));
          const long long value = mult[f] - t[static_cast<std::size_t>(x)] + t[static_cast<std::size_t>(opp(x))];
          if (!known[g]) {
            known[g] = 1;
            mult[g] = value;
            stack.push_back(static_cast<int>(g));
          } else if (mult[g] != value) {
            return;
          }
        }
    }
    std::optional<long long> base;
    for (std::size_t f = 0; f < arr.faces.size(); ++f)
      if (arr.faces[f].punctures > 0) {
        if (base && *base != mult[f]) return;
        base = mult[f];
      }
    if (!base) return;
    long long top_mult = 0;
    for (std::size_t f = 0; f < arr.faces.size(); ++f) {
      const long long m = mult[f] - *base;
      if (m < 0) return;
      top_mult = std::max(top_mult, m);
    }
    if (top_mult == 0) return;
    const bool unwound = std::all_of(winding.begin(), winding.end(), [](std::size_t w) { return w == 0; });
    if (top_mult == 1 && simple && unwound) {
      Polygon poly;
      for (std::size_t f = 0; f < arr.faces.size(); ++f)
        if (mult[f] - *base == 1) poly.faces.push_back(static_cast<int>(f));
      poly.labels = labels;
      poly.inputs.assign(corners.begin() + 1, corners.end());
      poly.output = corners[0];
      scan.embedded.push_back(std::move(poly));
      return;
    }
    if (scan.immersed_candidates++ == 0) {
      std::string names;
      for (std::size_t k = 1; k < nc; ++k) names += (k > 1 ? ", " : "") + gens[corners[k]].name;
      scan.first_immersed = "(" + names + ") -> " + gens[corners[0]].name + " with multiplicity " +
                            std::to_string(top_mult) + (simple ? "" : ", self-touching boundary");
    }
  };

  // strictly increasing label sequences of length >= 2
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << r); ++set) {
    if (std::popcount(set) < 2) continue;
    std::vector<int> labels;
    for (int k = 0; k < r; ++k)
      if (set >> k & 1) labels.push_back(k + 1);
    const std::size_t nc = labels.size();
    std::vector<const std::vector<std::size_t>*> choices(nc);
    choices[0] = &hom[static_cast<std::size_t>(labels[0])][static_cast<std::size_t>(labels[nc - 1])];
    bool empty = choices[0]->empty();
    for (std::size_t k = 1; k < nc; ++k) {
      choices[k] = &hom[static_cast<std::size_t>(labels[k - 1])][static_cast<std::size_t>(labels[k])];
      empty = empty || choices[k]->empty();
    }
    if (empty) continue;
    std::vector<std::size_t> pick(nc, 0), corners(nc);
    while (true) {
      if (++examined > options.max_subsets)
        throw ResourceError("boundary scan exceeded " + std::to_string(options.max_subsets) + " corner tuples");
      for (std::size_t k = 0; k < nc; ++k) corners[k] = (*choices[k])[pick[k]];
      const int q = gens[corners[0]].vertex;
      std::vector<std::size_t> winding(nc, 0);
      while (true) {
        for (int x : top.vertex_darts[static_cast<std::size_t>(q)])
          if (curve(x) == labels[0]) check_loop(labels, corners, winding, x);
        std::size_t w = 0;
        while (w < nc && ++winding[w] > options.max_winding) winding[w++] = 0;
        if (w == nc) break;
      }
      std::size_t k = 0;
      while (k < nc && ++pick[k] == choices[k]->size()) pick[k++] = 0;
      if (k == nc) break;
    }
  }
  return scan;
}

std::vector<Polygon> enumerate_polygons(const CurveArrangement& arr, const std::vector<Generator>& gens,
                                        const PolygonOptions& options) {
  const auto top = analyze_arrangement(arr);
  const std::size_t nf = arr.faces.size();
  auto opp = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].opposite; };
  auto next = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].next; };
  auto sigma = [&](int d) { return next(opp(d)); };
  auto curve = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].curve; };
  auto face = [&](int d) { return top.face_of[static_cast<std::size_t>(d)]; };

  std::map<std::tuple<int, int, int>, std::size_t> gen_at;  // (vertex, source, target)
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].identity()) gen_at[{gens[k].vertex, gens[k].source, gens[k].target}] = k;

  std::vector<int> free_faces;
  std::vector<int> slot(nf, -1);
  for (std::size_t f = 0; f < nf; ++f)
    if (arr.faces[f].punctures == 0) {
      slot[f] = static_cast<int>(free_faces.size());
      free_faces.push_back(static_cast<int>(f));
    }
  if (free_faces.size() > 64)
    throw ResourceError("polygon search supports at most 64 puncture-free faces, found " + std::to_string(free_faces.size()));
  const std::size_t m = free_faces.size();
  std::vector<std::uint64_t> adj(m, 0);
  for (std::size_t d = 0; d < arr.darts.size(); ++d) {
    const int a = slot[static_cast<std::size_t>(face(static_cast<int>(d)))];
    const int b = slot[static_cast<std::size_t>(face(opp(static_cast<int>(d))))];
    if (a >= 0 && b >= 0 && a != b) adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  }

  std::vector<Polygon> result;
  std::vector<char> in_s(nf, 0);

  auto examine = [&](std::uint64_t mask) {
    std::fill(in_s.begin(), in_s.end(), 0);
    std::vector<int> faces;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) {
        in_s[static_cast<std::size_t>(free_faces[k])] = 1;
        faces.push_back(free_faces[k]);
      }
    // Euler characteristic of the closure
    std::set<int> verts, edges;
    long long cyc_term = 0;
    std::vector<int> boundary;
    for (int f : faces)
      for (const auto& cyc : arr.faces[static_cast<std::size_t>(f)].cycles) {
        cyc_term += 1;
        for (int d : cyc) {
          verts.insert(top.vertex_of[static_cast<std::size_t>(d)]);
          edges.insert(std::min(d, opp(d)));
          if (!in_s[static_cast<std::size_t>(face(opp(d)))]) boundary.push_back(d);
        }
      }
    const long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) +
                          2 * static_cast<long long>(faces.size()) - cyc_term;
    if (chi != 1 || boundary.empty()) return;
    std::sort(boundary.begin(), boundary.end());

    // walk the boundary with the region on the left
    std::vector<int> walk;
    std::set<int> visited;
    bool pinched = false;
    int d = boundary.front();
    struct Turn {
      int vertex;
      bool corner;
    };
    std::vector<Turn> turns;  // turn after walk[k]
    while (!visited.count(d)) {
      visited.insert(d);
      walk.push_back(d);
      int e = next(d);
      while (in_s[static_cast<std::size_t>(face(opp(e)))]) e = sigma(e);
      const int v = top.vertex_of[static_cast<std::size_t>(e)];
      const auto& ds = top.vertex_darts[static_cast<std::size_t>(v)];
      std::vector<std::size_t> pos;
      for (std::size_t k = 0; k < ds.size(); ++k)
        if (in_s[static_cast<std::size_t>(face(ds[k]))]) pos.push_back(k);
      bool corner = false;
      if (top.crossing[static_cast<std::size_t>(v)]) {
        if (pos.size() == 3) return;  // reflex corner
        if (pos.size() == 1) corner = true;
        if (pos.size() == 2 && (pos[1] - pos[0]) % 2 == 0) pinched = true;
      }
      turns.push_back({v, corner});
      d = e;
    }
    if (d != walk.front() || walk.size() != boundary.size()) return;

    std::vector<std::size_t> corner_at;
    for (std::size_t k = 0; k < walk.size(); ++k)
      if (turns[k].corner) corner_at.push_back(k);
    const std::size_t nc = corner_at.size();
    if (nc < 2) return;
    // arc k starts after corner k
    std::vector<int> labels(nc), corner_vertex(nc);
    for (std::size_t k = 0; k < nc; ++k) {
      labels[k] = curve(walk[(corner_at[k] + 1) % walk.size()]);
      corner_vertex[k] = turns[corner_at[k]].vertex;
    }
    const auto start = static_cast<std::size_t>(std::min_element(labels.begin(), labels.end()) - labels.begin());
    std::rotate(labels.begin(), labels.begin() + static_cast<long>(start), labels.end());
    std::rotate(corner_vertex.begin(), corner_vertex.begin() + static_cast<long>(start), corner_vertex.end());
    for (std::size_t k = 1; k < nc; ++k)
      if (labels[k] <= labels[k - 1]) return;
    if (pinched)
      throw CapabilityError("polygon candidate pinched at a vertex (faces " + std::to_string(faces.front()) +
                            "...): immersed polygon counts are not supported");
    Polygon poly;
    poly.faces = faces;
    poly.labels = labels;
    // corner_vertex[k] sits between arc k-1 and arc k
    for (std::size_t k = 1; k < nc; ++k) {
      auto it = gen_at.find({corner_vertex[k], labels[k - 1], labels[k]});
      if (it == gen_at.end()) throw InputError("polygon corner without a generator");
      poly.inputs.push_back(it->second);
    }
    auto it = gen_at.find({corner_vertex[0], labels[0], labels[nc - 1]});
    if (it == gen_at.end()) throw InputError("polygon corner without a generator");
    poly.output = it->second;
    result.push_back(std::move(poly));
  };

  std::size_t examined = 0;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, std::size_t)> extend =
      [&](std::uint64_t sub, std::uint64_t ext, std::uint64_t closed, std::size_t root) {
        if (++examined > options.max_subsets)
          throw ResourceError("polygon search exceeded " + std::to_string(options.max_subsets) + " face sets");
        examine(sub);
        while (ext) {
          const int w = std::countr_zero(ext);
          ext &= ext - 1;
          std::uint64_t fresh = adj[static_cast<std::size_t>(w)] & ~closed & ~sub;
          fresh &= ~((std::uint64_t{2} << root) - 1);  // only faces after root
          extend(sub | (std::uint64_t{1} << w), ext | fresh, closed | fresh | (std::uint64_t{1} << w), root);
        }
      };
  for (std::size_t v = 0; v < m; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t ext = adj[v] & ~((std::uint64_t{2} << v) - 1);
    extend(bit, ext, bit | adj[v], v);
  }
  const auto scan = scan_polygon_boundaries(arr, gens, options);
  if (scan.immersed_candidates > 0)
    throw CapabilityError("boundary " + scan.first_immersed + " may bound an immersed polygon; only embedded polygons are counted");
  return result;
}

FukayaData compute_category(const CurveArrangement& arr, std::size_t max_order, const PolygonOptions& options) {
  check_exact(arr);
  const auto top = analyze_arrangement(arr);
  FukayaData data;
  data.objects = arr.curves.size();
  data.generators = all_generators(arr, top);
  data.max_order = max_order == 0 ? required_order(data.objects) : max_order;

  std::map<std::vector<std::size_t>, std::set<std::size_t>> table;
  auto toggle = [&](const std::vector<std::size_t>& key, std::size_t out) {
    auto& s = table[key];
    if (!s.insert(out).second) s.erase(out);
  };
  for (const auto& poly : enumerate_polygons(arr, data.generators, options))
    if (poly.inputs.size() <= data.max_order) toggle(poly.inputs, poly.output);

  if (data.max_order >= 2) {
    std::vector<std::size_t> ids(data.objects + 1);
    for (std::size_t k = 0; k < data.generators.size(); ++k)
      if (data.generators[k].identity()) ids[static_cast<std::size_t>(data.generators[k].source)] = k;
    for (std::size_t k = 0; k < data.generators.size(); ++k) {
      const auto& g = data.generators[k];
      if (g.identity()) {
        toggle({k, k}, k);
        continue;
      }
      toggle({ids[static_cast<std::size_t>(g.source)], k}, k);
      toggle({k, ids[static_cast<std::size_t>(g.target)]}, k);
    }
  }
  for (auto& [key, outs] : table)
    if (!outs.empty()) data.mu[key] = Z2Vector(outs.begin(), outs.end());
  return data;
}

Z2Vector compute_mu(const CurveArrangement& arr, const std::vector<std::string>& inputs, const PolygonOptions& options) {
  if (inputs.empty()) throw InputError("mu: empty input tuple");
  const auto data = compute_category(arr, std::max<std::size_t>(inputs.size(), 1), options);
  std::vector<std::size_t> idx;
  for (const auto& name : inputs) idx.push_back(data.index(name));
  return data.value(idx);
}

AInfinityReport verify_a_infinity(const FukayaData& data, std::size_t up_to) {
  AInfinityReport rep;
  const std::size_t ng = data.generators.size();
  auto value = [&](const std::vector<std::size_t>& in) {
    try {
      return data.value(in);
    } catch (const std::out_of_range& e) {
      throw InputError(std::string("missing table: ") + e.what());
    }
  };
  std::vector<std::size_t> chain;
  std::function<void()> grow = [&]() {
    if (!rep.holds) return;
    if (!chain.empty()) {
      const std::size_t s = chain.size();
      std::map<std::size_t, int> sum;
      for (std::size_t k = 1; k <= s; ++k)
        for (std::size_t j = 0; j + k <= s; ++j) {
          const std::vector<std::size_t> inner(chain.begin() + static_cast<long>(j), chain.begin() + static_cast<long>(j + k));
          for (std::size_t y : value(inner)) {
            std::vector<std::size_t> outer(chain.begin(), chain.begin() + static_cast<long>(j));
            outer.push_back(y);
            outer.insert(outer.end(), chain.begin() + static_cast<long>(j + k), chain.end());
            for (std::size_t z : value(outer)) sum[z] ^= 1;
          }
        }
      ++rep.relations_checked;
      for (const auto& [z, c] : sum)
        if (c) {
          rep.holds = false;
          rep.failing_chain = chain;
          std::string names;
          for (std::size_t k = 0; k < chain.size(); ++k) names += (k ? ", " : "") + data.generators[chain[k]].name;
          rep.failure = "relation of order " + std::to_string(s) + " on (" + names + ") has coefficient 1 on " +
                        data.generators[z].name;
          return;
        }
    }
    if (chain.size() >= up_to) return;
    for (std::size_t g = 0; g < ng && rep.holds; ++g) {
      if (!chain.empty() && data.generators[chain.back()].target != data.generators[g].source) continue;
      chain.push_back(g);
      grow();
      chain.pop_back();
    }
  };
  grow();
  return rep;
}

CurveArrangement conic_pencil_example() {
  using V = std::array<double, 3>;
  auto dot = [](const V& a, const V& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  auto cross = [](const V& a, const V& b) {
    return V{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto unit = [&](V a) {
    const double n = std::sqrt(dot(a, a));
    return V{a[0] / n, a[1] / n, a[2] / n};
  };
  // projection from a generic pole, orientation preserving
  const V e3 = unit({1, 2, 3});
  const V e1 = unit(cross(e3, {0, 0, 1}));
  const V e2 = cross(e3, e1);
  auto project = [&](const V& v) {
    const double x = dot(v, e1), y = dot(v, e2), z = dot(v, e3);
    return std::pair<double, double>{x / (1 - z), -y / (1 - z)};
  };
  auto circle_of = [&](const V& u, const V& w) {
    std::array<std::pair<double, double>, 3> p;
    for (int k = 0; k < 3; ++k) {
      const double t = 2 * std::numbers::pi * k / 3;
      p[static_cast<std::size_t>(k)] = project({std::cos(t) * u[0] + std::sin(t) * w[0], std::cos(t) * u[1] + std::sin(t) * w[1],
                                                std::cos(t) * u[2] + std::sin(t) * w[2]});
    }
    const auto [ax, ay] = p[0];
    const auto [bx, by] = p[1];
    const auto [cx, cy] = p[2];
    const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d;
    const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d;
    return Circle{ux, uy, std::hypot(ax - ux, ay - uy)};
  };
  const V ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  // L1 = {x = 0}, L2 = {y = 0}, L3 = {z = 0}
  auto ca = build_circle_arrangement({circle_of(ey, ez), circle_of(ez, ex), circle_of(ex, ey)});
  const std::vector<std::pair<V, std::string>> names = {
      {ez, "a"}, {{0, 0, -1}, "a'"}, {ex, "b"}, {{-1, 0, 0}, "b'"}, {ey, "c"}, {{0, -1, 0}, "c'"}};
  for (const auto& [v, name] : names) {
    const auto [x, y] = project(v);
    name_vertex(ca, x, y, name);
  }
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        if (sx * sy * sz < 0) {
          const auto [x, y] = project(unit({double(sx), double(sy), double(sz)}));
          add_puncture(ca, x, y);
        }
  return ca.arrangement;
}

}  // namespace lefschetz
