#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfaces/canonical.hpp"
#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/vectors.hpp"

using namespace mfaces;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational det(std::vector<std::vector<cpp_rational>> a) {
  const int n = static_cast<int>(a.size());
  cpp_rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      const cpp_rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

// Facets of the convex hull of (t, t^2, .., t^d), t = 1..n, by orientation tests.
SimplicialComplex moment_hull(int d, int n) {
  auto row = [&](int t) {
    std::vector<cpp_rational> r{1};
    cpp_rational p = 1;
    for (int e = 1; e <= d; ++e) {
      p *= t;
      r.push_back(p);
    }
    return r;
  };
  std::vector<VertexSet> facets;
  for (const auto& s : subsets_of_size(VertexSet::range(1, n), d)) {
    std::vector<std::vector<cpp_rational>> base;
    s.for_each([&](int v) { base.push_back(row(v)); });
    int sign = 0;
    bool ok = true;
    for (int q = 1; q <= n && ok; ++q) {
      if (s.contains(q)) continue;
      auto m = base;
      m.push_back(row(q));
      const cpp_rational v = det(m);
      const int sq = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (sq == 0 || (sign != 0 && sq != sign)) ok = false;
      sign = sq;
    }
    if (ok) facets.push_back(s);
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST_CASE("cyclic boundary matches the moment-curve hull") {
  CHECK(cyclic_boundary(3, 5).num_facets() == 6);
  CHECK(cyclic_boundary(3, 5) == moment_hull(3, 5));
  CHECK(cyclic_boundary(4, 7) == moment_hull(4, 7));
  CHECK(f_vector(cyclic_boundary(4, 7)) == Counts{1, 7, 21, 28, 14});
  CHECK(cyclic_boundary(5, 9) == moment_hull(5, 9));
  CHECK(cyclic_boundary(5, 9).num_facets() == 30);
}

TEST_CASE("ball B and the cyclic boundary") {
  CHECK(ball_B(4, 2, 6).facets() == std::vector<VertexSet>{{2, 3, 4, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}});
  for (int n = 8; n <= 11; ++n) {
    const auto ball = join(SimplicialComplex::simplex({1, n}), ball_B(4, 2, n - 1));
    CHECK(ball_decomposition(ball).boundary == cyclic_boundary(5, n));
  }
}

TEST_CASE("squeezed ball C") {
  CHECK(squeezed_ball_C(1, 3).is_void());
  CHECK(squeezed_ball_C(3, 3).facets() == std::vector<VertexSet>{{3, 4, 5, 6}, {3, 4, 6, 7}});
  CHECK(squeezed_ball_C(3, 4).facets() == std::vector<VertexSet>{{3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 8, 9}});
  CHECK(ball_is_i_stacked(ball_decomposition(squeezed_ball_C(4, 3)), 1));
}

TEST_CASE("bistellar flips") {
  const auto c = cyclic_boundary(4, 8);
  int flips = 0;
  for (const auto& e : subsets_of_size(c.vertices(), 2)) {
    const FlipMove move = flip_move(c, e);
    if (move.b.size() != 3) continue;
    const auto k = bistellar_flip(c, move);
    CHECK(verify_sphere(k, SphereLevel::Full));
    CHECK(bistellar_flip(k, FlipMove{move.b, move.a}) == c);
    ++flips;
  }
  CHECK(flips > 0);
  // removing a stacked vertex reverses the stacking
  const auto s = stacked_sphere(4, 6);
  CHECK(bistellar_flip(s, flip_move(s, {6})) == SimplicialComplex::simplex_boundary(VertexSet::range(1, 5)));
  CHECK_THROWS(bistellar_flip(c, FlipMove{{1, 2}, {3, 4}}));
}

TEST_CASE("delta sequence") {
  const auto seq9 = delta_sequence(9);
  REQUIRE(seq9.size() == 3);
  std::vector<std::int64_t> m3;
  for (const auto& k : seq9) {
    m3.push_back(m_vector(k)[2]);
    CHECK(f_vector(k)[2] == f_vector(seq9.front())[2]);
  }
  CHECK(m3 == std::vector<std::int64_t>{6, 3, 1});
  m3.clear();
  for (const auto& k : delta_sequence(10)) m3.push_back(m_vector(k)[2]);
  CHECK(m3 == std::vector<std::int64_t>{10, 6, 3, 1});

  // lost faces are missing before the flip and no longer missing after
  const auto seq10 = delta_sequence(10);
  for (int i = 2; i <= 4; ++i) {
    const auto before = missing_faces(seq10[i - 2]);
    const auto after = missing_faces(seq10[i - 1]);
    for (const auto& f : delta_lost_faces(10, i)) {
      CHECK(std::find(before.begin(), before.end(), f) != before.end());
      CHECK(std::find(after.begin(), after.end(), f) == after.end());
    }
  }

  const int n = 10;
  const auto extra = delta_sequence(n, true);
  CHECK(extra.size() == 6);
  std::vector<VertexSet> three_faces;
  for (const auto& f : missing_faces(extra[4])) {
    if (f.size() == 4) three_faces.push_back(f);
  }
  CHECK(three_faces == std::vector<VertexSet>{{2, n - 3, n - 2, n - 1}});
  CHECK(neighborliness(f_vector(extra[4]), n) == 2);
  CHECK(neighborliness(f_vector(extra[5]), n) < 2);
}

TEST_CASE("2k-dimensional delta sequence") {
  const int k = 3, n = 12;
  const auto seq = delta_sequence_2k(k, n);
  REQUIRE(seq.size() >= 2);
  // m_4 of the first two members
  CHECK(m_vector(seq[0])[3] == 20);
  CHECK(m_vector(seq[1])[3] == 16);
  CHECK(binom(n - k - 3, k) == 20);
  CHECK(ball_decomposition(ball_D(k, n, 2)).boundary == seq[1]);
}

TEST_CASE("shelling restriction faces") {
  const int n = 10, k = 4;
  const auto r = verify_shelling(ball_Bk_order(n, k));
  std::vector<VertexSet> want{{}};
  for (int v = 6; v <= n - 1; ++v) want.push_back({v});
  want.push_back({n});
  for (int v = 6; v <= k + 3; ++v) want.push_back({v, n});
  CHECK(r.restriction_faces == want);
  CHECK(verify_shelling({{1, 2, 3}}).restriction_faces == std::vector<VertexSet>{{}});
  CHECK_THROWS_WITH(verify_shelling({{1, 2, 3}, {4, 5, 6}}), doctest::Contains("no ridge"));
}

TEST_CASE("sewing and complements") {
  const auto oct = octahedron();
  const VertexSet facet = oct.facets().front();
  const auto stacked = sew(oct, SimplicialComplex::simplex(facet), 7);
  CHECK(stacked.num_facets() == 10);
  CHECK(link(stacked, {7}) == SimplicialComplex::simplex_boundary(facet));

  const auto g = gs8();
  const auto st = star(g, {1});
  const auto sewn = sew(g, st, 9);
  CHECK(link(sewn, {9}) == ball_decomposition(st).boundary);
  CHECK(verify_sphere(sewn, SphereLevel::Full));
  CHECK_THROWS(sew(g, st, 3));

  CHECK(complement_ball(oct, SimplicialComplex::simplex(facet)).num_facets() == 7);
  CHECK_THROWS(complement_ball(oct, oct));
}

TEST_CASE("2-spheres with prescribed missing triangles") {
  const auto s = realize_2sphere(9, 0);
  CHECK(m_vector(s)[0] == 15);
  CHECK(m_vector(s)[1] == 0);
  CHECK(m_vector(realize_2sphere(9, 5))[1] == 5);
  CHECK_THROWS_AS(realize_2sphere(9, 4), std::invalid_argument);
}
