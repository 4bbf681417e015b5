#include "lefschetz/arrangement.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lefschetz {

namespace {

struct Analysis {
  ArrangementReport report;
  ArrangementTopology topo;
};

Analysis analyze(const CurveArrangement& arr) {
  Analysis a;
  auto& rep = a.report;
  auto& top = a.topo;
  auto err = [&](std::string s) { rep.errors.push_back(std::move(s)); };
  const int n = static_cast<int>(arr.darts.size());
  auto in_range = [&](int d) { return d >= 0 && d < n; };
  const std::size_t curves = arr.curves.size();

  if (n == 0) err("arrangement has no darts");
  for (int d = 0; d < n; ++d) {
    const Dart& x = arr.darts[static_cast<std::size_t>(d)];
    if (!in_range(x.next)) err("dart " + std::to_string(d) + ": next out of range");
    if (!in_range(x.opposite)) err("dart " + std::to_string(d) + ": opposite out of range");
    if (x.curve < 1 || static_cast<std::size_t>(x.curve) > curves)
      err("dart " + std::to_string(d) + ": curve label out of range");
  }
  if (!rep.errors.empty()) return a;

  std::vector<int> prev(static_cast<std::size_t>(n), -1);
  for (int d = 0; d < n; ++d) {
    const Dart& x = arr.darts[static_cast<std::size_t>(d)];
    if (x.opposite == d || arr.darts[static_cast<std::size_t>(x.opposite)].opposite != d)
      err("dart " + std::to_string(d) + ": opposite is not an involution without fixed points");
    else if (arr.darts[static_cast<std::size_t>(x.opposite)].curve != x.curve)
      err("dart " + std::to_string(d) + ": opposite dart lies on another curve");
    if (prev[static_cast<std::size_t>(x.next)] != -1)
      err("dart " + std::to_string(x.next) + ": two darts have it as next (next is not a permutation)");
    prev[static_cast<std::size_t>(x.next)] = d;
  }
  if (!rep.errors.empty()) return a;
  auto next = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].next; };
  auto opp = [&](int d) { return arr.darts[static_cast<std::size_t>(d)].opposite; };
  auto sigma = [&](int d) { return next(opp(d)); };

  // faces: declared cycles must be the next-cycles
  top.face_of.assign(static_cast<std::size_t>(n), -1);
  std::size_t cycles_total = 0;
  for (std::size_t f = 0; f < arr.faces.size(); ++f) {
    const Face& face = arr.faces[f];
    if (face.cycles.empty()) err("face " + std::to_string(f) + ": no boundary cycle");
    if (face.punctures < 0) err("face " + std::to_string(f) + ": negative puncture count");
    for (const auto& cyc : face.cycles) {
      ++cycles_total;
      if (cyc.empty()) {
        err("face " + std::to_string(f) + ": empty boundary cycle");
        continue;
      }
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int d = cyc[k];
        if (!in_range(d)) {
          err("face " + std::to_string(f) + ": dart out of range");
          continue;
        }
        if (top.face_of[static_cast<std::size_t>(d)] != -1)
          err("dart " + std::to_string(d) + ": listed in two face cycles");
        top.face_of[static_cast<std::size_t>(d)] = static_cast<int>(f);
        if (next(d) != cyc[(k + 1) % cyc.size()])
          err("face " + std::to_string(f) + ": cycle does not follow next at dart " + std::to_string(d));
      }
    }
  }
  for (int d = 0; d < n; ++d)
    if (top.face_of[static_cast<std::size_t>(d)] == -1) err("dart " + std::to_string(d) + ": belongs to no face");
  if (!rep.errors.empty()) return a;

  // vertices: orbits of sigma
  top.vertex_of.assign(static_cast<std::size_t>(n), -1);
  for (int d = 0; d < n; ++d) {
    if (top.vertex_of[static_cast<std::size_t>(d)] != -1) continue;
    const int v = static_cast<int>(top.vertex_darts.size());
    std::vector<int> orbit;
    int cur = d;
    do {
      top.vertex_of[static_cast<std::size_t>(cur)] = v;
      orbit.push_back(cur);
      cur = sigma(cur);
    } while (cur != d && orbit.size() <= static_cast<std::size_t>(n));
    top.vertex_darts.push_back(orbit);
  }
  for (std::size_t v = 0; v < top.vertex_darts.size(); ++v) {
    const auto& ds = top.vertex_darts[v];
    std::vector<int> labels;
    for (int d : ds) labels.push_back(arr.darts[static_cast<std::size_t>(d)].curve);
    bool ok = false;
    bool cross = false;
    if (ds.size() == 4) {
      ok = labels[0] == labels[2] && labels[1] == labels[3] && labels[0] != labels[1];
      cross = true;
    } else if (ds.size() == 2) {
      ok = labels[0] == labels[1];
    }
    if (!ok)
      err("vertex at dart " + std::to_string(ds.front()) + ": valence " + std::to_string(ds.size()) +
          " is neither a crossing of two curves nor a marker");
    top.crossing.push_back(cross);
    top.vertex_curves.emplace_back(std::min(labels[0], labels[ds.size() > 1 ? 1 : 0]),
                                   std::max(labels[0], labels[ds.size() > 1 ? 1 : 0]));
  }
  if (!rep.errors.empty()) return a;

  // curves: straight continuation through every vertex, each edge once
  std::vector<int> covered(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < curves; ++c) {
    const auto& cyc = arr.curves[c];
    if (cyc.empty()) {
      err("curve " + std::to_string(c + 1) + ": empty");
      continue;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int d = cyc[k];
      if (!in_range(d)) {
        err("curve " + std::to_string(c + 1) + ": dart out of range");
        break;
      }
      if (arr.darts[static_cast<std::size_t>(d)].curve != static_cast<int>(c + 1))
        err("curve " + std::to_string(c + 1) + ": dart " + std::to_string(d) + " carries another label");
      covered[static_cast<std::size_t>(d)]++;
      covered[static_cast<std::size_t>(opp(d))]++;
      const int back = opp(d);
      const int v = top.vertex_of[static_cast<std::size_t>(back)];
      const int cont = top.crossing[static_cast<std::size_t>(v)] ? sigma(sigma(back)) : sigma(back);
      if (cont != cyc[(k + 1) % cyc.size()])
        err("curve " + std::to_string(c + 1) + ": not closed or not straight after dart " + std::to_string(d));
    }
  }
  for (int d = 0; d < n; ++d)
    if (covered[static_cast<std::size_t>(d)] != 1)
      err("dart " + std::to_string(d) + ": its edge is covered " + std::to_string(covered[static_cast<std::size_t>(d)]) +
          " times by the curve lists");
  if (!rep.errors.empty()) return a;

  top.edges = static_cast<std::size_t>(n) / 2;
  rep.vertices = top.vertex_darts.size();
  rep.edges = top.edges;
  rep.faces = arr.faces.size();
  rep.euler = static_cast<long long>(rep.vertices) - static_cast<long long>(rep.edges) +
              2 * static_cast<long long>(arr.faces.size()) - static_cast<long long>(cycles_total);
  rep.genus = (2 - rep.euler) / 2;
  if (rep.euler != 2) err("Euler count " + std::to_string(rep.euler) + " != 2: not a sphere");
  long long total = 0;
  for (const auto& f : arr.faces) {
    rep.punctures.push_back(f.punctures);
    total += f.punctures;
  }
  if (total < 1) err("no punctures: the surface must be a punctured sphere");

  // names
  top.vertex_names.resize(top.vertex_darts.size());
  for (std::size_t v = 0; v < top.vertex_darts.size(); ++v) top.vertex_names[v] = "v" + std::to_string(v + 1);
  std::set<std::string> names;
  for (const auto& [d, name] : arr.vertex_labels) {
    if (!in_range(d)) {
      err("vertex label on unknown dart " + std::to_string(d));
      continue;
    }
    top.vertex_names[static_cast<std::size_t>(top.vertex_of[static_cast<std::size_t>(d)])] = name;
  }
  for (const auto& s : top.vertex_names)
    if (!names.insert(s).second) err("vertex name '" + s + "' used twice");
  if (!rep.errors.empty()) return a;

  // exactness: both sides of every curve carry a puncture
  rep.exact = true;
  for (std::size_t c = 0; c < curves; ++c) {
    const int label = static_cast<int>(c + 1);
    std::vector<int> comp(arr.faces.size(), -1);
    int ncomp = 0;
    for (std::size_t f0 = 0; f0 < arr.faces.size(); ++f0) {
      if (comp[f0] != -1) continue;
      std::vector<std::size_t> stack{f0};
      comp[f0] = ncomp;
      while (!stack.empty()) {
        const std::size_t f = stack.back();
        stack.pop_back();
        for (const auto& cyc : arr.faces[f].cycles)
          for (int d : cyc) {
            if (arr.darts[static_cast<std::size_t>(d)].curve == label) continue;
            const auto g = static_cast<std::size_t>(top.face_of[static_cast<std::size_t>(opp(d))]);
            if (comp[g] == -1) {
              comp[g] = ncomp;
              stack.push_back(g);
            }
          }
      }
      ++ncomp;
    }
    const int d0 = arr.curves[c].front();
    const int left = comp[static_cast<std::size_t>(top.face_of[static_cast<std::size_t>(d0)])];
    const int right = comp[static_cast<std::size_t>(top.face_of[static_cast<std::size_t>(opp(d0))])];
    if (left == right) {
      err("curve " + std::to_string(label) + " does not separate the sphere");
      rep.exact = false;
      continue;
    }
    long long pl = 0, pr = 0;
    for (std::size_t f = 0; f < arr.faces.size(); ++f) {
      if (comp[f] == left) pl += arr.faces[f].punctures;
      if (comp[f] == right) pr += arr.faces[f].punctures;
    }
    if (pl == 0 || pr == 0) rep.exact = false;
  }
  rep.valid = rep.errors.empty();
  return a;
}

}  // namespace

ArrangementReport validate_arrangement(const CurveArrangement& arr) { return analyze(arr).report; }

ArrangementTopology analyze_arrangement(const CurveArrangement& arr) {
  Analysis a = analyze(arr);
  if (!a.report.valid) {
    std::string msg = "invalid arrangement:";
    for (std::size_t k = 0; k < a.report.errors.size() && k < 5; ++k) msg += " " + a.report.errors[k] + ";";
    throw InputError(msg);
  }
  return a.topo;
}

}  // namespace lefschetz
