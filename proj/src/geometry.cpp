#include "geometry.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "error.hpp"

namespace patchcount {

bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

LineEq LineEq::from_rationals(const Rational& ra, const Rational& rb, const Rational& rc) {
  if (ra == 0 && rb == 0) fail_validation("line with a = b = 0");
  mpz_class lcm = 1;
  for (const Rational* q : {&ra, &rb, &rc})
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q->get_den().get_mpz_t());
  mpz_class a = ra.get_num() * (lcm / ra.get_den());
  mpz_class b = rb.get_num() * (lcm / rb.get_den());
  mpz_class c = rc.get_num() * (lcm / rc.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return LineEq{a, b, c};
}

Rational LineEq::eval(const Point& p) const {
  return Rational(a) * p.x + Rational(b) * p.y - Rational(c);
}

std::string LineEq::to_string() const {
  return a.get_str() + " " + b.get_str() + " " + c.get_str();
}

bool operator==(const LineEq& a, const LineEq& b) {
  return a.a == b.a && a.b == b.b && a.c == b.c;
}

Point PolygonBoundary::edge_point(int edge, const Rational& t) const {
  const Point& p = vertices[edge];
  const Point& q = vertices[(edge + 1) % vertices.size()];
  return Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

Rational signed_area_twice(const std::vector<Point>& vertices) {
  Rational sum = 0;
  const size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

Rational polygon_area(const PolygonBoundary& boundary) {
  Rational twice = signed_area_twice(boundary.vertices);
  if (twice <= 0) fail_validation("boundary is not counterclockwise");
  return twice / 2;
}

namespace {

// orientation of c relative to the directed segment a -> b
int orient(const Point& a, const Point& b, const Point& c) {
  Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool closed_segments_intersect(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_closed_segment(c, a, b)) return true;
  if (o2 == 0 && on_closed_segment(d, a, b)) return true;
  if (o3 == 0 && on_closed_segment(a, c, d)) return true;
  if (o4 == 0 && on_closed_segment(b, c, d)) return true;
  return false;
}

std::optional<Point> line_intersection(const LineEq& l1, const LineEq& l2) {
  Rational den = Rational(l1.a) * Rational(l2.b) - Rational(l2.a) * Rational(l1.b);
  if (den == 0) return std::nullopt;
  Rational x = (Rational(l1.c) * Rational(l2.b) - Rational(l2.c) * Rational(l1.b)) / den;
  Rational y = (Rational(l1.a) * Rational(l2.c) - Rational(l2.a) * Rational(l1.c)) / den;
  return Point{x, y};
}

void validate_boundary(const PolygonBoundary& boundary) {
  const auto& v = boundary.vertices;
  const int n = static_cast<int>(v.size());
  if (n < 3) fail_validation("boundary needs at least 3 vertices");
  for (int i = 0; i < n; ++i)
    if (v[i] == v[(i + 1) % n]) fail_validation("zero-length boundary edge");
  if (signed_area_twice(v) <= 0)
    fail_validation("boundary is not counterclockwise");

  // simplicity: non-adjacent edges must not touch at all; adjacent edges may
  // share only their common vertex
  for (int i = 0; i < n; ++i) {
    const Point &a = v[i], &b = v[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const Point &c = v[j], &d = v[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        const Point& shared = (j == i + 1) ? b : a;
        const Point& c_far = (j == i + 1) ? d : c;
        const Point& a_far = (j == i + 1) ? a : b;
        // overlap (fold-back) shows as the far end of one edge on the other
        if (on_closed_segment(c_far, a, b) || on_closed_segment(a_far, c, d))
          fail_validation("boundary edges overlap at vertex " +
                          std::to_string((j == i + 1) ? j : i));
        (void)shared;
      } else if (closed_segments_intersect(a, b, c, d)) {
        fail_validation("boundary is not simple: edges " + std::to_string(i) +
                        " and " + std::to_string(j) + " intersect");
      }
    }
  }
}

// Boundary crossing of one line: edge index and exact parameter.
struct BoundaryHit {
  int edge;
  Rational t;
  Point point;
};

std::vector<BoundaryHit> boundary_hits(const LineEq& line, const PolygonBoundary& boundary) {
  std::vector<BoundaryHit> hits;
  const auto& v = boundary.vertices;
  const int n = static_cast<int>(v.size());
  for (int e = 0; e < n; ++e) {
    const Point& p = v[e];
    const Point& q = v[(e + 1) % n];
    Rational fp = line.eval(p);
    Rational fq = line.eval(q);
    if (fp == 0 || fq == 0) fail_internal("vertex on line slipped past validation");
    if ((fp > 0) == (fq > 0)) continue;
    Rational t = fp / (fp - fq);
    hits.push_back(BoundaryHit{e, t, boundary.edge_point(e, t)});
  }
  return hits;
}

}  // namespace

bool point_on_boundary(const Point& p, const PolygonBoundary& boundary) {
  const auto& v = boundary.vertices;
  const int n = static_cast<int>(v.size());
  for (int e = 0; e < n; ++e)
    if (on_closed_segment(p, v[e], v[(e + 1) % n])) return true;
  return false;
}

bool point_in_polygon(const Point& p, const PolygonBoundary& boundary) {
  if (point_on_boundary(p, boundary)) return false;
  const auto& v = boundary.vertices;
  const int n = static_cast<int>(v.size());
  bool inside = false;
  for (int e = 0; e < n; ++e) {
    const Point& a = v[e];
    const Point& b = v[(e + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x coordinate of the edge at height p.y
      Rational xin = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (xin > p.x) inside = !inside;
    }
  }
  return inside;
}

PatchSpec make_patch(std::vector<LineEq> lines, PolygonBoundary boundary) {
  validate_boundary(boundary);
  if (lines.empty()) fail_validation("patch needs at least one line");

  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        fail_validation("duplicate line " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1));

  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t vi = 0; vi < boundary.vertices.size(); ++vi)
      if (lines[i].eval(boundary.vertices[vi]) == 0)
        fail_validation("vertex " + std::to_string(vi) + " lies on line " +
                        std::to_string(i + 1));

  PatchSpec patch{std::move(lines), std::move(boundary)};

  for (size_t i = 0; i < patch.lines.size(); ++i) {
    auto hits = boundary_hits(patch.lines[i], patch.boundary);
    if (hits.empty())
      fail_validation("line " + std::to_string(i + 1) + " does not cross the patch");
    if (hits.size() % 2 != 0)
      fail_internal("odd boundary crossing count for line " + std::to_string(i + 1));
  }

  for (size_t i = 0; i < patch.lines.size(); ++i) {
    for (size_t j = i + 1; j < patch.lines.size(); ++j) {
      auto pt = line_intersection(patch.lines[i], patch.lines[j]);
      if (pt && point_on_boundary(*pt, patch.boundary))
        fail_validation("crossing on boundary between lines " + std::to_string(i + 1) +
                        " and " + std::to_string(j + 1));
    }
  }
  return patch;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int column_of_token(const std::string& line, size_t token_index) {
  std::istringstream in(line);
  std::string t;
  size_t pos = 0, i = 0;
  while (in >> t) {
    pos = line.find(t, pos);
    if (i == token_index) return static_cast<int>(pos) + 1;
    pos += t.size();
    ++i;
  }
  return 1;
}

Rational parse_rational_at(const std::string& raw_line, int line_no,
                           const std::vector<std::string>& toks, size_t idx) {
  if (idx >= toks.size())
    fail_parse(line_no, static_cast<int>(raw_line.size()) + 1, "missing number");
  try {
    return parse_rational(toks[idx]);
  } catch (const Error&) {
    fail_parse(line_no, column_of_token(raw_line, idx),
               "expected a rational, got '" + toks[idx] + "'");
  }
}

}  // namespace

PatchSpec parse_patch(const std::string& text) {
  std::vector<LineEq> lines;
  std::optional<PolygonBoundary> boundary;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokenize(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "line") {
      if (toks.size() != 4)
        fail_parse(line_no, 1, "line statement needs exactly 3 numbers");
      Rational a = parse_rational_at(raw, line_no, toks, 1);
      Rational b = parse_rational_at(raw, line_no, toks, 2);
      Rational c = parse_rational_at(raw, line_no, toks, 3);
      if (a == 0 && b == 0)
        fail_parse(line_no, column_of_token(raw, 1), "line with a = b = 0");
      lines.push_back(LineEq::from_rationals(a, b, c));
    } else if (toks[0] == "boundary") {
      if (boundary) fail_parse(line_no, 1, "second boundary statement");
      if (toks.size() < 7 || (toks.size() - 1) % 2 != 0)
        fail_parse(line_no, 1, "boundary needs at least 3 coordinate pairs");
      PolygonBoundary b;
      for (size_t i = 1; i + 1 < toks.size(); i += 2) {
        Point p;
        p.x = parse_rational_at(raw, line_no, toks, i);
        p.y = parse_rational_at(raw, line_no, toks, i + 1);
        b.vertices.push_back(std::move(p));
      }
      boundary = std::move(b);
    } else {
      fail_parse(line_no, column_of_token(raw, 0),
                 "unknown statement '" + toks[0] + "'");
    }
  }
  if (!boundary) fail_validation("missing boundary statement");
  if (lines.empty()) fail_validation("missing line statements");
  return make_patch(std::move(lines), std::move(*boundary));
}

PatchSpec parse_patch_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_patch(buf.str());
}

std::string render_patch(const PatchSpec& patch) {
  std::ostringstream out;
  for (const auto& line : patch.lines) out << "line " << line.to_string() << "\n";
  out << "boundary";
  for (const auto& v : patch.boundary.vertices)
    out << " " << rational_to_string(v.x) << " " << rational_to_string(v.y);
  out << "\n";
  return out.str();
}

std::vector<SegmentRecord> segments_of_patch(const PatchSpec& patch) {
  struct Pending {
    int line_index;
    SegmentEndpoint a, b;
  };
  std::vector<Pending> components;

  for (size_t li = 0; li < patch.lines.size(); ++li) {
    auto hits = boundary_hits(patch.lines[li], patch.boundary);
    // order along the line by the exact projection onto its direction (b, -a)
    std::sort(hits.begin(), hits.end(), [&](const BoundaryHit& h1, const BoundaryHit& h2) {
      Rational s1 = Rational(patch.lines[li].b) * h1.point.x -
                    Rational(patch.lines[li].a) * h1.point.y;
      Rational s2 = Rational(patch.lines[li].b) * h2.point.x -
                    Rational(patch.lines[li].a) * h2.point.y;
      return s1 < s2;
    });
    for (size_t k = 0; k + 1 < hits.size(); k += 2) {
      Pending c;
      c.line_index = static_cast<int>(li);
      c.a = SegmentEndpoint{hits[k].edge, hits[k].t, hits[k].point};
      c.b = SegmentEndpoint{hits[k + 1].edge, hits[k + 1].t, hits[k + 1].point};
      components.push_back(std::move(c));
    }
  }

  // boundary order of all endpoints decides the labels
  struct Event {
    int edge;
    Rational t;
    int component;
    int which;  // 0 or 1
  };
  std::vector<Event> events;
  for (size_t ci = 0; ci < components.size(); ++ci) {
    events.push_back(Event{components[ci].a.edge, components[ci].a.t,
                           static_cast<int>(ci), 0});
    events.push_back(Event{components[ci].b.edge, components[ci].b.t,
                           static_cast<int>(ci), 1});
  }
  std::sort(events.begin(), events.end(), [](const Event& e1, const Event& e2) {
    if (e1.edge != e2.edge) return e1.edge < e2.edge;
    return e1.t < e2.t;
  });
  for (size_t i = 1; i < events.size(); ++i)
    if (events[i - 1].edge == events[i].edge && events[i - 1].t == events[i].t)
      fail_internal("coincident segment endpoints on the boundary");

  std::vector<int> label_of(components.size(), 0);
  int next_label = 1;
  for (const auto& ev : events)
    if (label_of[ev.component] == 0) label_of[ev.component] = next_label++;

  std::vector<SegmentRecord> records(components.size());
  for (size_t ci = 0; ci < components.size(); ++ci) {
    SegmentRecord rec;
    rec.label = label_of[ci];
    rec.line_index = components[ci].line_index;
    rec.endpoints = {components[ci].a, components[ci].b};
    records[rec.label - 1] = std::move(rec);
  }
  return records;
}

Bipermutation bipermutation_of_patch(const PatchSpec& patch) {
  auto records = segments_of_patch(patch);
  struct Event {
    int edge;
    Rational t;
    int label;
  };
  std::vector<Event> events;
  for (const auto& rec : records)
    for (const auto& ep : rec.endpoints)
      events.push_back(Event{ep.edge, ep.t, rec.label});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.t < b.t;
  });
  std::vector<int> seq;
  seq.reserve(events.size());
  for (const auto& ev : events) seq.push_back(ev.label);
  return Bipermutation(std::move(seq));
}

std::map<int, long long> multicrossing_census(const PatchSpec& patch) {
  struct PointLess {
    bool operator()(const Point& a, const Point& b) const {
      if (a.x != b.x) return a.x < b.x;
      return a.y < b.y;
    }
  };
  std::map<Point, std::vector<size_t>, PointLess> through;

  for (size_t i = 0; i < patch.lines.size(); ++i) {
    for (size_t j = i + 1; j < patch.lines.size(); ++j) {
      auto pt = line_intersection(patch.lines[i], patch.lines[j]);
      if (!pt) continue;
      if (!point_in_polygon(*pt, patch.boundary)) continue;
      auto& ls = through[*pt];
      if (ls.empty()) {
        ls.push_back(i);
        ls.push_back(j);
      } else {
        if (std::find(ls.begin(), ls.end(), i) == ls.end()) ls.push_back(i);
        if (std::find(ls.begin(), ls.end(), j) == ls.end()) ls.push_back(j);
      }
    }
  }

  std::map<int, long long> census;
  for (const auto& [pt, ls] : through) ++census[static_cast<int>(ls.size())];
  return census;
}

}  // namespace patchcount
