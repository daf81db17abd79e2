#include <doctest.h>

#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/vectors.hpp"

using namespace mfaces;

namespace {

// 7-vertex torus.
SimplicialComplex torus7() {
  std::vector<VertexSet> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    f.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return SimplicialComplex::from_facets(f);
}

// 6-vertex projective plane.
SimplicialComplex rp2() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

// Staircase triangulation of boundary(simplex on 1..4) x 4-cycle: S^2 x S^1.
SimplicialComplex s2_times_s1() {
  const std::vector<std::vector<int>> cyc{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  std::vector<VertexSet> out;
  const std::vector<std::vector<int>> sph{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  auto lab2 = [](int a, int b) { return (a - 1) * 4 + b; };
  for (const auto& x : sph) {
    for (const auto& y : cyc) {
      // paths through the 3x2 grid
      for (int turn = 0; turn < 3; ++turn) {
        VertexSet s;
        for (int p = 0; p <= turn; ++p) s.insert(lab2(x[p], y[0]));
        for (int p = turn; p < 3; ++p) s.insert(lab2(x[p], y[1]));
        out.push_back(s);
      }
    }
  }
  return SimplicialComplex::from_facets(out);
}

}  // namespace

TEST_CASE("Betti numbers of surfaces and spheres") {
  CHECK(betti(torus7()) == std::vector<std::int64_t>{0, 2, 1});
  CHECK(betti(torus7(), Field::Rational) == std::vector<std::int64_t>{0, 2, 1});
  CHECK(betti(rp2(), Field::GF2) == std::vector<std::int64_t>{0, 1, 1});
  CHECK(betti(rp2(), Field::Rational) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(betti(octahedron()) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(betti(cyclic_boundary(5, 9)) == std::vector<std::int64_t>{0, 0, 0, 0, 1});
  const auto two_points = SimplicialComplex::from_facets({{1}, {2}});
  CHECK(betti(two_points) == std::vector<std::int64_t>{1});
}

TEST_CASE("sphere recognition") {
  CHECK(verify_sphere(gs8(), SphereLevel::Full));
  CHECK(verify_sphere(p042(), SphereLevel::Full));
  CHECK(!verify_sphere(torus7(), SphereLevel::Quick));
  const auto disk = SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}});
  CHECK(!verify_sphere(disk).reason.empty());
  const auto p = s2_times_s1();
  CHECK(p.num_vertices() == 16);
  CHECK(p.num_facets() == 48);
  CHECK(betti(p) == std::vector<std::int64_t>{0, 1, 1, 1});
  CHECK(verify_sphere(p, SphereLevel::Quick));
  CHECK(!verify_sphere(p, SphereLevel::Full));
}

TEST_CASE("certificates") {
  const Certificate g = nonpolytopality_certificate(gs8());
  CHECK(g.verdict == Verdict::NotPolytopal);
  CHECK(g.rule == "neighborly_link_mk");
  CHECK(g.witness_vertex == 4);
  CHECK(g.observed == 1);
  CHECK(g.expected == 3);
  CHECK(render(g).find("NOT_POLYTOPAL") != std::string::npos);

  CHECK(nonpolytopality_certificate(cyclic_boundary(4, 9)).verdict == Verdict::Inconclusive);
  CHECK(nonpolytopality_certificate(p042()).verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(nonpolytopality_certificate(torus7()), std::invalid_argument);
}

TEST_CASE("single missing face rule is self-consistent") {
  for (int n = 7; n <= 9; ++n) {
    const auto c = cyclic_boundary(4, n);
    for (const auto& e : subsets_of_size(c.vertices(), 2)) {
      const FlipMove move = flip_move(c, e);
      if (move.b.size() != 3) continue;
      const auto k = bistellar_flip(c, move);
      int missing_edges = 0;
      for (const auto& m : missing_faces(k)) missing_edges += m.size() == 2 ? 1 : 0;
      REQUIRE(missing_edges == 1);
      const Certificate cert = nonpolytopality_certificate(k);
      if (cert.verdict == Verdict::NotPolytopal) {
        CHECK(cert.rule == "single_missing_face_link_mk");
        CHECK(e.contains(cert.witness_vertex));
        CHECK(cert.observed != cert.expected);
        CHECK(cert.expected == binom(n - 5, 1) - 1);
      }
    }
  }
}

TEST_CASE("vertex link check") {
  const LinkReport c = vertex_link_check(cyclic_boundary(4, 9));
  CHECK(c.d == 4);
  CHECK(c.links.size() == 9);
  CHECK(c.all_pass());
  const LinkReport g = vertex_link_check(gs8());
  CHECK(!g.all_pass());
  const LinkReport o = vertex_link_check(cyclic_boundary(5, 9));
  CHECK(o.target_neighborliness == 1);
  CHECK(o.target_stackedness == 2);
}
