#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfaces/canonical.hpp"
#include "mfaces/gale.hpp"
#include "mfaces/generators.hpp"
#include "mfaces/vectors.hpp"

using namespace mfaces;
using boost::multiprecision::cpp_rational;

namespace {

struct Pt {
  cpp_rational x, y;
};

// Order- and antipode-preserving rational point for angle a on a circle of
// 2h units: a in [0, h) goes to the upper half circle via t = a / (h - a).
Pt rational_point(int a, int h) {
  const bool lower = a >= h;
  const int b = lower ? a - h : a;
  const cpp_rational t(b, h - b);
  Pt p{(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)};
  if (lower) {
    p.x = -p.x;
    p.y = -p.y;
  }
  return p;
}

int orient(const Pt& p, const Pt& q) {
  const cpp_rational c = p.x * q.y - p.y * q.x;
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

// Facets: complements of triples whose triangle strictly contains the origin.
SimplicialComplex oracle_faces(const GaleCircle& g) {
  const auto& pts = g.points();
  std::vector<Pt> xy;
  for (const auto& p : pts) xy.push_back(rational_point(p.angle, g.half_turn()));
  const VertexSet all = g.labels();
  std::vector<VertexSet> facets;
  const int m = static_cast<int>(pts.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        const int s1 = orient(xy[a], xy[b]), s2 = orient(xy[b], xy[c]), s3 = orient(xy[c], xy[a]);
        if (s1 != 0 && s1 == s2 && s2 == s3) {
          facets.push_back(all - VertexSet{pts[a].label, pts[b].label, pts[c].label});
        }
      }
    }
  }
  return SimplicialComplex::from_facets(facets);
}

GaleCircle small_diagram() {
  return GaleCircle(12, {{0, 1}, {1, 2}, {8, 3}, {8, 4}, {16, 5}, {16, 6}});
}

}  // namespace

TEST_CASE("rational oracle keeps antipodes") {
  for (int a = 0; a < 10; ++a) {
    const Pt p = rational_point(a, 5), q = rational_point((a + 5) % 10, 5);
    CHECK(p.x == -q.x);
    CHECK(p.y == -q.y);
    CHECK(p.x * p.x + p.y * p.y == 1);
  }
}

TEST_CASE("origin in relative interior") {
  CHECK(origin_in_relint(3, {0, 3}));
  CHECK(!origin_in_relint(3, {0}));
  CHECK(!origin_in_relint(3, {0, 1}));
  CHECK(origin_in_relint(3, {0, 2, 4}));
  CHECK(!origin_in_relint(3, {0, 1, 2}));
  CHECK(!origin_in_relint(3, {0, 1, 3}));
  CHECK_THROWS(origin_in_relint(3, {}));
}

TEST_CASE("diagram faces match the rational oracle") {
  for (int k : {1, 3, 5}) {
    const GaleCircle g = qk_diagram(k);
    CAPTURE(k);
    CHECK(g.num_points() == 2 * k + 4);
    CHECK(g.is_simplicial());
    CHECK(faces_from_diagram(g) == oracle_faces(g));
    // one missing face per run of (k+1)/2 consecutive double points
    const auto missing = missing_faces(oracle_faces(g));
    CHECK(missing.size() == static_cast<std::size_t>(k + 2));
    for (const auto& f : missing) CHECK(f.size() == k + 1);
  }
  CHECK(faces_from_diagram(small_diagram()) == oracle_faces(small_diagram()));
  CHECK_THROWS_WITH(faces_from_diagram(GaleCircle(3, {{0, 1}, {3, 2}, {1, 3}, {4, 4}})),
                    doctest::Contains("not simplicial"));
}

TEST_CASE("semicircle counts give neighborliness") {
  CHECK(min_open_semicircle_count(qk_diagram(3)) == 4);
  CHECK(min_open_semicircle_count(qk_diagram(1)) == 2);
  for (int k : {1, 3, 5}) {
    const GaleCircle g = qk_diagram(k);
    const auto s = faces_from_diagram(g);
    CHECK(diagram_neighborliness(g) == neighborliness(f_vector(s), s.num_vertices()));
    CHECK(diagram_neighborliness(g) == k);
  }
}

TEST_CASE("removing points gives the link") {
  const QkConstruction q = build_qk(3);
  REQUIRE(q.edges.size() == 3);
  const VertexSet face = q.edges[0] | q.edges[1];
  const auto lk = link(q.sphere, face);
  CHECK(faces_from_diagram(remove_points(q.diagram, face)) == lk);
  CHECK(is_isomorphic(lk, octahedron()));
}

TEST_CASE("moves preserve faces or fail loudly") {
  const GaleCircle g = small_diagram();
  const GaleCircle merged = merge_slots(g, 1, 0);
  CHECK(merged.slots().size() == 3);
  CHECK(is_isomorphic(faces_from_diagram(merged), octahedron()));
  CHECK(faces_from_diagram(merged) == faces_from_diagram(g));
  const GaleCircle fine = refine(g, 3);
  CHECK(fine.half_turn() == 36);
  CHECK(faces_from_diagram(fine) == faces_from_diagram(g));
  CHECK(faces_from_diagram(rotate_slot(g, 8, 9, true)) == faces_from_diagram(g));
  CHECK_THROWS_WITH(rotate_slot(g, 8, 14, true), doctest::Contains("diameter"));
  CHECK_THROWS_WITH(merge_slots(g, 8, 16), doctest::Contains("diameter"));
  CHECK_THROWS(merge_slots(g, 2, 0));
  CHECK_THROWS(rotate_slot(g, 3, 4, true));
  CHECK_THROWS(GaleCircle(5, {{0, 1}, {1, 1}}));
}
