#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bipermutation.hpp"
#include "numeric.hpp"

namespace patchcount {

// All geometry is exact rational; there is no floating point anywhere in the
// predicates.

struct Point {
  Rational x, y;
};

bool operator==(const Point& a, const Point& b);

// Line a*x + b*y = c with integer coprime coefficients and the leading
// nonzero of (a, b) positive: one canonical representative per line.
struct LineEq {
  BigCount a, b, c;

  static LineEq from_rationals(const Rational& a, const Rational& b, const Rational& c);
  // a*x + b*y - c at the point; zero iff the point lies on the line.
  Rational eval(const Point& p) const;
  std::string to_string() const;
};

bool operator==(const LineEq& a, const LineEq& b);

struct PolygonBoundary {
  std::vector<Point> vertices;  // counterclockwise, simple

  int edge_count() const { return static_cast<int>(vertices.size()); }
  Point edge_point(int edge, const Rational& t) const;
};

struct PatchSpec {
  std::vector<LineEq> lines;
  PolygonBoundary boundary;
};

struct SegmentEndpoint {
  int edge = 0;
  Rational t;  // parameter along the edge, strictly in (0,1)
  Point point;
};

struct SegmentRecord {
  int label = 0;       // 1-based, assigned along the boundary
  int line_index = 0;  // into PatchSpec::lines
  std::array<SegmentEndpoint, 2> endpoints;
};

// Shoelace sum (twice the signed area); positive for counterclockwise order.
Rational signed_area_twice(const std::vector<Point>& vertices);

// Exact area of a validated boundary; strictly positive.
Rational polygon_area(const PolygonBoundary& boundary);

// Strictly inside test; the point must not lie on the boundary.
bool point_in_polygon(const Point& p, const PolygonBoundary& boundary);
bool point_on_boundary(const Point& p, const PolygonBoundary& boundary);

// Validates and assembles a patch: simple CCW boundary, normalized distinct
// lines, no vertex on a line, every line crossing the region transversally,
// and no two lines crossing on the boundary.
PatchSpec make_patch(std::vector<LineEq> lines, PolygonBoundary boundary);

// Patch file format: '#' comment lines, `line a b c`, one `boundary x1 y1 ...`.
PatchSpec parse_patch(const std::string& text);
PatchSpec parse_patch_file(const std::string& path);
std::string render_patch(const PatchSpec& patch);

// Maximal interior components of every line, labeled in order of first
// endpoint appearance along the boundary starting at vertex 0.
std::vector<SegmentRecord> segments_of_patch(const PatchSpec& patch);

// Cyclic sequence of segment labels in boundary order.
Bipermutation bipermutation_of_patch(const PatchSpec& patch);

// crossing order d (>= 2) -> number of interior points where exactly d of
// the patch lines meet.
std::map<int, long long> multicrossing_census(const PatchSpec& patch);

}  // namespace patchcount
