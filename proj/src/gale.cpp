#include "mfaces/gale.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mfaces/homology.hpp"

namespace mfaces {

namespace {

int wrap(int a, int full) { return ((a % full) + full) % full; }

// Counter-clockwise distance from a to b, in [0, full).
int ccw_distance(int a, int b, int full) { return wrap(b - a, full); }

}  // namespace

GaleCircle::GaleCircle(int half_turn, std::vector<GalePoint> points)
    : half_turn_(half_turn), points_(std::move(points)) {
  if (half_turn_ < 1) throw std::invalid_argument("half turn must be positive");
  std::set<int> seen;
  for (auto& p : points_) {
    p.angle = wrap(p.angle, full_turn());
    if (p.label < 1 || p.label > kMaxLabel) throw std::invalid_argument("bad point label");
    if (!seen.insert(p.label).second) {
      throw std::invalid_argument("duplicate point label " + std::to_string(p.label));
    }
  }
  std::sort(points_.begin(), points_.end(), [](const GalePoint& a, const GalePoint& b) {
    return a.angle != b.angle ? a.angle < b.angle : a.label < b.label;
  });
}

std::vector<int> GaleCircle::slots() const {
  std::vector<int> s;
  for (const auto& p : points_) {
    if (s.empty() || s.back() != p.angle) s.push_back(p.angle);
  }
  return s;
}

std::vector<int> GaleCircle::multiplicities() const {
  std::vector<int> m;
  int last = -1;
  for (const auto& p : points_) {
    if (m.empty() || p.angle != last) {
      m.push_back(0);
      last = p.angle;
    }
    ++m.back();
  }
  return m;
}

std::vector<AntipodePosition> GaleCircle::antipode_positions() const {
  const auto s = slots();
  std::vector<AntipodePosition> out;
  for (int a : s) {
    const int anti = wrap(a + half_turn_, full_turn());
    AntipodePosition pos;
    const auto it = std::lower_bound(s.begin(), s.end(), anti);
    if (it != s.end() && *it == anti) {
      pos.on_slot = true;
      pos.index = static_cast<int>(it - s.begin());
    } else {
      // strictly between the slot before `anti` and the one after it
      const int after = static_cast<int>(it - s.begin());
      pos.index = wrap(after - 1, static_cast<int>(s.size()));
    }
    out.push_back(pos);
  }
  return out;
}

VertexSet GaleCircle::labels() const {
  VertexSet s;
  for (const auto& p : points_) s.insert(p.label);
  return s;
}

int GaleCircle::angle_of(int label) const {
  for (const auto& p : points_) {
    if (p.label == label) return p.angle;
  }
  throw std::invalid_argument("no diagram point labelled " + std::to_string(label));
}

bool GaleCircle::is_simplicial() const {
  const auto pos = antipode_positions();
  return std::none_of(pos.begin(), pos.end(), [](const AntipodePosition& p) { return p.on_slot; });
}

std::string GaleCircle::to_string() const {
  std::string s = "half_turn=" + std::to_string(half_turn_);
  for (const auto& p : points_) {
    s += " " + std::to_string(p.label) + "@" + std::to_string(p.angle);
  }
  return s;
}

bool origin_in_relint(int half_turn, const std::vector<int>& angles) {
  if (angles.empty()) throw std::invalid_argument("origin_in_relint needs points");
  const int full = 2 * half_turn;
  std::vector<int> a;
  for (int x : angles) a.push_back(wrap(x, full));
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  // everything on one line through the origin
  const int base = a.front();
  const bool collinear = std::all_of(a.begin(), a.end(), [&](int x) {
    return x == base || x == wrap(base + half_turn, full);
  });
  if (collinear) return a.size() == 2;

  // otherwise: no closed half-plane may contain every point
  for (int q : a) {
    const bool covered = std::all_of(a.begin(), a.end(), [&](int x) {
      return ccw_distance(q, x, full) <= half_turn;
    });
    if (covered) return false;
  }
  return true;
}

SimplicialComplex faces_from_diagram(const GaleCircle& g) {
  if (!g.is_simplicial()) throw std::invalid_argument("invalid diagram: not simplicial");
  const auto& pts = g.points();
  const int m = g.num_points();
  if (m < 4) throw std::invalid_argument("invalid diagram: fewer than 4 points");
  const VertexSet all = g.labels();
  std::vector<VertexSet> facets;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        if (origin_in_relint(g.half_turn(), {pts[a].angle, pts[b].angle, pts[c].angle})) {
          facets.push_back(all - VertexSet{pts[a].label, pts[b].label, pts[c].label});
        }
      }
    }
  }
  if (facets.empty()) throw std::invalid_argument("invalid diagram: no facets");
  SimplicialComplex k = SimplicialComplex::from_facets(std::move(facets));
  const SphereCheck check = verify_sphere(k, SphereLevel::Quick);
  if (!check) throw std::invalid_argument("invalid diagram: " + check.reason);
  return k;
}

int min_open_semicircle_count(const GaleCircle& g) {
  // at double resolution every combinatorially distinct start is an integer
  const GaleCircle fine = refine(g, 2);
  const int full = fine.full_turn();
  const int half = fine.half_turn();
  int best = fine.num_points();
  for (int t = 0; t < full; ++t) {
    int count = 0;
    for (const auto& p : fine.points()) {
      const int dist = ccw_distance(t, p.angle, full);
      if (dist > 0 && dist < half) ++count;
    }
    best = std::min(best, count);
  }
  return best;
}

int diagram_neighborliness(const GaleCircle& g) {
  return std::max(0, min_open_semicircle_count(g) - 1);
}

GaleCircle refine(const GaleCircle& g, int factor) {
  if (factor < 1) throw std::invalid_argument("refine factor must be positive");
  std::vector<GalePoint> pts = g.points();
  for (auto& p : pts) p.angle *= factor;
  return GaleCircle(g.half_turn() * factor, std::move(pts));
}

GaleCircle rotate_slot(const GaleCircle& g, int from, int to, bool ccw) {
  const int full = g.full_turn();
  const int half = g.half_turn();
  from = wrap(from, full);
  to = wrap(to, full);
  bool present = false;
  for (const auto& p : g.points()) present = present || p.angle == from;
  if (!present) throw std::invalid_argument("no points at angle " + std::to_string(from));
  if (from == to) return g;

  const int span = ccw ? ccw_distance(from, to, full) : ccw_distance(to, from, full);
  // position of x along the path, in (0, span] when swept
  auto swept = [&](int x) {
    const int dist = ccw ? ccw_distance(from, x, full) : ccw_distance(x, from, full);
    return dist > 0 && dist <= span;
  };
  for (const auto& p : g.points()) {
    if (p.angle == from) continue;
    if (swept(p.angle)) {
      throw std::invalid_argument("move crosses point " + std::to_string(p.label));
    }
    // also covers the moving antipode sweeping over p
    if (swept(wrap(p.angle + half, full))) {
      throw std::invalid_argument("move crosses the diameter through point " +
                                  std::to_string(p.label));
    }
  }
  std::vector<GalePoint> pts = g.points();
  for (auto& p : pts) {
    if (p.angle == from) p.angle = to;
  }
  return GaleCircle(half, std::move(pts));
}

GaleCircle merge_slots(const GaleCircle& g, int from, int to) {
  const int full = g.full_turn();
  const int half = g.half_turn();
  from = wrap(from, full);
  to = wrap(to, full);
  const auto s = g.slots();
  if (!std::binary_search(s.begin(), s.end(), from) || !std::binary_search(s.begin(), s.end(), to)) {
    throw std::invalid_argument("merge needs two occupied slots");
  }
  // travel along the shorter arc
  const bool ccw = ccw_distance(from, to, full) <= ccw_distance(to, from, full);
  const int span = ccw ? ccw_distance(from, to, full) : ccw_distance(to, from, full);
  auto strictly_between = [&](int x) {
    const int dist = ccw ? ccw_distance(from, x, full) : ccw_distance(x, from, full);
    return dist > 0 && dist < span;
  };
  for (const auto& p : g.points()) {
    if (strictly_between(p.angle)) {
      throw std::invalid_argument("slots are not adjacent: point " + std::to_string(p.label) +
                                  " lies between them");
    }
    if (strictly_between(wrap(p.angle + half, full))) {
      throw std::invalid_argument("slots separated by the diameter through point " +
                                  std::to_string(p.label));
    }
  }
  std::vector<GalePoint> pts = g.points();
  for (auto& p : pts) {
    if (p.angle == from) p.angle = to;
  }
  return GaleCircle(half, std::move(pts));
}

GaleCircle remove_points(const GaleCircle& g, const VertexSet& labels) {
  std::vector<GalePoint> pts;
  for (const auto& p : g.points()) {
    if (!labels.contains(p.label)) pts.push_back(p);
  }
  return GaleCircle(g.half_turn(), std::move(pts));
}

// ---------------------------------------------------------------------------

namespace {

// position of l in the sequence 0, 1, -1, 2, -2, ...
int qk_index(int l) { return l > 0 ? 2 * l - 1 : -2 * l; }

}  // namespace

int qk_x_label(int l) { return 2 * qk_index(l) + 1; }
int qk_y_label(int l) { return 2 * qk_index(l) + 2; }

GaleCircle qk_diagram(int k) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("Q_k needs odd k >= 1");
  const int i = (k + 1) / 2;
  const int half = 2 * i + 1;
  std::vector<GalePoint> pts;
  for (int l = -i; l <= i; ++l) {
    const int angle = wrap(2 * l, 2 * half);
    pts.push_back({angle, qk_x_label(l)});
    pts.push_back({angle, qk_y_label(l)});
  }
  return GaleCircle(half, std::move(pts));
}

QkConstruction build_qk(int k) {
  QkConstruction q{k, qk_diagram(k), {}, {}};
  q.sphere = faces_from_diagram(q.diagram);
  const int i = (k + 1) / 2;
  auto x = [](int l) { return qk_x_label(l); };
  auto y = [](int l) { return qk_y_label(l); };
  std::vector<VertexSet> e;
  e.push_back({x(0), x(i)});
  e.push_back({y(0), x(-i)});
  for (int j = 1; static_cast<int>(e.size()) < k + 4; ++j) {
    e.push_back({x(-j), y(i - j + 1)});
    e.push_back({x(j), y(-(i - j + 1))});
    e.push_back({y(-j), x(i - j)});
    e.push_back({y(j), x(-(i - j))});
  }
  e.resize(k);
  q.edges = std::move(e);
  return q;
}

}  // namespace mfaces
