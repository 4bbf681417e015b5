#pragma once

#include "lefschetz/arrangement.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

struct Circle {
  double cx = 0;
  double cy = 0;
  double r = 1;
};

struct CircleArrangement {
  CurveArrangement arrangement;
  std::vector<Circle> circles;
  std::vector<std::vector<bool>> face_inside;  // face -> inside circle k
  std::vector<std::pair<double, double>> vertex_position;
  std::vector<int> vertex_dart;  // one dart leaving each positioned vertex
};

// Planar map of circles in general position, curve k+1 = circle k, each
// curve oriented counterclockwise.  Edge e has darts 2e (forward) and 2e+1.
// A circle meeting no other circle gets a marker at angle 0.  Tangencies,
// triple points, and disconnected unions throw InputError.  Faces start
// without punctures.
CircleArrangement build_circle_arrangement(const std::vector<Circle>& circles, double tolerance = 1e-9);

// Face containing the point, located by its inside/outside pattern.
// Throws InputError if the point lies on a circle or the pattern is shared.
std::size_t locate_face(const CircleArrangement& ca, double x, double y);

void add_puncture(CircleArrangement& ca, double x, double y, long long count = 1);

// Names the vertex closest to (x, y).
void name_vertex(CircleArrangement& ca, double x, double y, const std::string& name);

}  // namespace lefschetz
