#pragma once

#include <map>
#include <string>
#include <vector>

namespace lefschetz {

// Half-edge of the planar map.  The face of a dart lies on its left;
// `next` walks that face, and next(opposite(d)) is the following dart
// leaving the origin of d (clockwise).
struct Dart {
  int next = -1;
  int opposite = -1;
  int curve = 0;  // 1-based curve label
};

struct Face {
  std::vector<std::vector<int>> cycles;  // boundary dart cycles
  long long punctures = 0;
};

// Ordered simple closed curves L_1..L_r on a punctured sphere.  Vertices
// are 4-valent crossings of two curves or 2-valent markers on one curve.
struct CurveArrangement {
  std::vector<Dart> darts;
  std::vector<Face> faces;
  std::vector<std::vector<int>> curves;     // dart cycle of each curve
  std::map<int, std::string> vertex_labels;  // any dart leaving the vertex -> name
};

// Derived incidence data of a valid arrangement.
struct ArrangementTopology {
  std::vector<int> face_of;                  // dart -> face
  std::vector<int> vertex_of;                // dart -> origin vertex
  std::vector<std::vector<int>> vertex_darts;  // darts leaving each vertex, in rotation order
  std::vector<bool> crossing;                // 4-valent vertex
  std::vector<std::pair<int, int>> vertex_curves;  // (lower, higher) label; equal for markers
  std::vector<std::string> vertex_names;
  std::size_t edges = 0;
};

struct ArrangementReport {
  bool valid = false;
  bool exact = false;  // every curve has punctures on both sides
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long long euler = 0;  // V - E + sum over faces of (2 - boundary cycles)
  long long genus = -1;
  std::vector<long long> punctures;
  std::vector<std::string> errors;
};

ArrangementReport validate_arrangement(const CurveArrangement& arr);

// Throws InputError listing the first problems when the arrangement is invalid.
ArrangementTopology analyze_arrangement(const CurveArrangement& arr);

}  // namespace lefschetz
