#include "lefschetz/circle_arrangement.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace lefschetz {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a;
}

struct Point {
  double x, y;
};

bool inside(const Circle& c, double x, double y) { return std::hypot(x - c.cx, y - c.cy) < c.r; }

}  // namespace

CircleArrangement build_circle_arrangement(const std::vector<Circle>& circles, double tol) {
  const std::size_t r = circles.size();
  if (r == 0) throw InputError("circle arrangement: no circles");
  for (const auto& c : circles)
    if (!(c.r > tol) || !std::isfinite(c.cx) || !std::isfinite(c.cy) || !std::isfinite(c.r))
      throw InputError("circle arrangement: radius must be positive and finite");

  // vertices with their angles on each circle
  std::vector<Point> pts;
  std::vector<std::vector<std::pair<double, int>>> on(r);  // (angle, vertex)
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Circle& a = circles[i];
      const Circle& b = circles[j];
      const double dx = b.cx - a.cx, dy = b.cy - a.cy;
      const double d = std::hypot(dx, dy);
      if (d < tol && std::abs(a.r - b.r) < tol)
        throw InputError("circle arrangement: circles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      if (std::abs(d - (a.r + b.r)) < tol || std::abs(d - std::abs(a.r - b.r)) < tol)
        throw InputError("circle arrangement: circles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are tangent");
      if (d > a.r + b.r || d < std::abs(a.r - b.r)) continue;
      const double along = (d * d + a.r * a.r - b.r * b.r) / (2 * d);
      const double h = std::sqrt(std::max(0.0, a.r * a.r - along * along));
      const double mx = a.cx + along * dx / d, my = a.cy + along * dy / d;
      for (double s : {1.0, -1.0}) {
        const Point p{mx - s * h * dy / d, my + s * h * dx / d};
        for (const auto& q : pts)
          if (std::hypot(q.x - p.x, q.y - p.y) < std::sqrt(tol))
            throw InputError("circle arrangement: three circles through one point");
        const int v = static_cast<int>(pts.size());
        pts.push_back(p);
        on[i].emplace_back(norm_angle(std::atan2(p.y - a.cy, p.x - a.cx)), v);
        on[j].emplace_back(norm_angle(std::atan2(p.y - b.cy, p.x - b.cx)), v);
      }
    }
  for (std::size_t i = 0; i < r; ++i)
    if (on[i].empty()) {
      const int v = static_cast<int>(pts.size());
      pts.push_back({circles[i].cx + circles[i].r, circles[i].cy});
      on[i].emplace_back(0.0, v);
    }

  // edges: consecutive vertices along each circle, counterclockwise
  struct EdgeInfo {
    std::size_t circle;
    int from, to;
    double a0, a1;  // start angle, end angle (a1 > a0)
  };
  std::vector<EdgeInfo> edges;
  CircleArrangement ca;
  ca.circles = circles;
  CurveArrangement& arr = ca.arrangement;
  arr.curves.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto& list = on[i];
    std::sort(list.begin(), list.end());
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto& [a0, v0] = list[k];
      const auto& [a1raw, v1] = list[(k + 1) % list.size()];
      double a1 = a1raw;
      if (a1 <= a0) a1 += 2 * kPi;
      arr.curves[i].push_back(static_cast<int>(2 * edges.size()));
      edges.push_back({i, v0, v1, a0, a1});
    }
  }

  const std::size_t nd = 2 * edges.size();
  arr.darts.assign(nd, Dart{});
  std::vector<std::vector<std::pair<double, int>>> leaving(pts.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& E = edges[e];
    const int fwd = static_cast<int>(2 * e), bwd = fwd + 1;
    arr.darts[static_cast<std::size_t>(fwd)].opposite = bwd;
    arr.darts[static_cast<std::size_t>(bwd)].opposite = fwd;
    arr.darts[static_cast<std::size_t>(fwd)].curve = static_cast<int>(E.circle + 1);
    arr.darts[static_cast<std::size_t>(bwd)].curve = static_cast<int>(E.circle + 1);
    leaving[static_cast<std::size_t>(E.from)].emplace_back(norm_angle(E.a0 + kPi / 2), fwd);
    leaving[static_cast<std::size_t>(E.to)].emplace_back(norm_angle(E.a1 - kPi / 2), bwd);
  }

  // connectivity of the union
  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& E : edges) parent[static_cast<std::size_t>(find(E.from))] = find(E.to);
  for (std::size_t v = 0; v < pts.size(); ++v)
    if (find(static_cast<int>(v)) != find(0))
      throw InputError("circle arrangement: the union of the circles is disconnected");

  // next(e) = clockwise neighbour of opposite(e) at the head of e
  std::vector<int> cw(nd, -1);
  for (auto& ds : leaving) {
    std::sort(ds.begin(), ds.end());
    for (std::size_t k = 0; k < ds.size(); ++k)
      cw[static_cast<std::size_t>(ds[k].second)] = ds[(k + ds.size() - 1) % ds.size()].second;
  }
  for (std::size_t d = 0; d < nd; ++d) arr.darts[d].next = cw[static_cast<std::size_t>(arr.darts[d].opposite)];

  std::vector<bool> seen(nd, false);
  for (std::size_t d0 = 0; d0 < nd; ++d0) {
    if (seen[d0]) continue;
    Face f;
    std::vector<int> cyc;
    int d = static_cast<int>(d0);
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      cyc.push_back(d);
      d = arr.darts[static_cast<std::size_t>(d)].next;
    }
    f.cycles.push_back(cyc);
    arr.faces.push_back(f);
    // inside pattern from the midpoint of the first edge
    const auto& E = edges[d0 / 2];
    const Circle& c = circles[E.circle];
    const double mid = (E.a0 + E.a1) / 2;
    const double x = c.cx + c.r * std::cos(mid), y = c.cy + c.r * std::sin(mid);
    std::vector<bool> pattern(r);
    for (std::size_t k = 0; k < r; ++k) pattern[k] = k == E.circle ? d0 % 2 == 0 : inside(circles[k], x, y);
    ca.face_inside.push_back(pattern);
  }

  for (std::size_t v = 0; v < pts.size(); ++v) {
    ca.vertex_position.emplace_back(pts[v].x, pts[v].y);
    ca.vertex_dart.push_back(leaving[v].front().second);
  }
  return ca;
}

std::size_t locate_face(const CircleArrangement& ca, double x, double y) {
  std::vector<bool> pattern;
  for (const auto& c : ca.circles) {
    if (std::abs(std::hypot(x - c.cx, y - c.cy) - c.r) < 1e-12) throw InputError("locate_face: point lies on a circle");
    pattern.push_back(inside(c, x, y));
  }
  std::size_t found = ca.face_inside.size();
  for (std::size_t f = 0; f < ca.face_inside.size(); ++f)
    if (ca.face_inside[f] == pattern) {
      if (found != ca.face_inside.size()) throw InputError("locate_face: several faces share the inside pattern");
      found = f;
    }
  if (found == ca.face_inside.size()) throw InputError("locate_face: no face with this inside pattern");
  return found;
}

void add_puncture(CircleArrangement& ca, double x, double y, long long count) {
  ca.arrangement.faces[locate_face(ca, x, y)].punctures += count;
}

void name_vertex(CircleArrangement& ca, double x, double y, const std::string& name) {
  std::size_t best = 0;
  double dist = INFINITY;
  for (std::size_t v = 0; v < ca.vertex_position.size(); ++v) {
    const double dd = std::hypot(ca.vertex_position[v].first - x, ca.vertex_position[v].second - y);
    if (dd < dist) {
      dist = dd;
      best = v;
    }
  }
  if (ca.vertex_position.empty()) throw InputError("name_vertex: no vertices");
  ca.arrangement.vertex_labels[ca.vertex_dart[best]] = name;
}

}  // namespace lefschetz
