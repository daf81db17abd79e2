#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/vectors.hpp"

using namespace mfaces;

namespace {

// k-subsets of [1, top] in colex order.
std::vector<std::vector<int>> colex_subsets(int k, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= top; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// Members of the first m colex k-subsets that contain 1.
std::int64_t oracle_lower(std::int64_t m, int k) {
  const auto sets = colex_subsets(k, k == 1 ? 64 : 14);
  std::int64_t c = 0;
  for (std::int64_t i = 0; i < m; ++i) c += sets[i][0] == 1 ? 1 : 0;
  return c;
}

// (k+1)-subsets T of {0, 1, ...} whose elements above min T form one of the
// first m colex k-subsets.
std::int64_t oracle_upper(std::int64_t m, int k) {
  const auto sets = colex_subsets(k, k == 1 ? 64 : 14);
  std::int64_t c = 0;
  for (std::int64_t i = 0; i < m; ++i) c += sets[i][0];  // choices of min in [0, first-1]
  return c;
}

Counts f_of(const SimplicialComplex& k) { return f_vector(k); }

}  // namespace

TEST_CASE("binomials") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(-1, 2) == 0);
  CHECK(binom(40, 20) == 137846528820LL);
}

TEST_CASE("pseudopowers agree with the colex oracle") {
  CHECK(pseudopower_upper(5, 2) == 7);
  CHECK(pseudopower_lower(5, 2) == 3);
  CHECK(pseudopower_upper(0, 3) == 0);
  CHECK(pseudopower_lower(0, 3) == 0);
  for (int k = 1; k <= 4; ++k) {
    for (std::int64_t m = 1; m <= 60; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      CHECK(pseudopower_upper(m, k) == oracle_upper(m, k));
      CHECK(pseudopower_lower(m, k) == oracle_lower(m, k));
    }
  }
}

TEST_CASE("h and f vectors are inverse transforms") {
  for (const auto& k : {gs8(), p042(), octahedron(), cyclic_boundary(6, 10)}) {
    const int d = k.dim() + 1;
    const Counts f = f_of(k);
    const Counts h = h_from_f(f, d);
    CHECK(f_from_h(h, d) == f);
  }
  // octahedron: h = (1, 3, 3, 1)
  CHECK(h_from_f(f_of(octahedron()), 3) == Counts{1, 3, 3, 1});
}

TEST_CASE("face profile of the octahedron") {
  const FaceProfile p = face_profile(octahedron());
  CHECK(p.n == 6);
  CHECK(p.d == 3);
  CHECK(p.f == Counts{1, 6, 12, 8});
  CHECK(p.m == Counts{3, 0, 0});
  CHECK(p.is_flag);
  CHECK(p.is_eulerian);
  CHECK(p.neighborliness == 1);
  CHECK(dehn_sommerville_check(p));
  CHECK(p.g_at(1) == 2);
  CHECK(p.g_at(7) == 0);
}

TEST_CASE("Eulerian test") {
  CHECK(is_eulerian(gs8()));
  CHECK(is_eulerian(cyclic_boundary(5, 9)));
  // a disk is not Eulerian
  CHECK(!is_eulerian(SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}})));
}

TEST_CASE("cyclic vectors") {
  for (int n = 6; n <= 11; ++n) {
    CHECK(cyclic_f_vector(4, n) == f_of(cyclic_boundary(4, n)));
    CHECK(cyclic_f_vector(5, n) == f_of(cyclic_boundary(5, n)));
    CHECK(cyclic_h_vector(5, n) == h_from_f(f_of(cyclic_boundary(5, n)), 5));
  }
}

TEST_CASE("stacked degree") {
  CHECK(sphere_stacked_degree(face_profile(stacked_sphere(4, 9))) == 1);
  CHECK(sphere_stacked_degree(face_profile(stacked_sphere(5, 9))) == 1);
  CHECK(sphere_stacked_degree(face_profile(SimplicialComplex::simplex_boundary(VertexSet::range(1, 6)))) == 0);
  CHECK(!sphere_stacked_degree(face_profile(cyclic_boundary(4, 8))).has_value());
  CHECK(!sphere_stacked_degree(face_profile(cyclic_boundary(5, 9))).has_value());
  // boundary of the cyclic 5-polytope is 2-stacked: the odd middle equality holds
  for (int n = 8; n <= 11; ++n) CHECK(odd_middle_stacked_consistent(face_profile(cyclic_boundary(5, n))));
  CHECK(!odd_middle_stacked_consistent(face_profile(p042())));
}

TEST_CASE("ball stackedness") {
  for (int n = 8; n <= 11; ++n) {
    const auto ball = join(SimplicialComplex::simplex({1, n}), ball_B(4, 2, n - 1));
    const auto bd = ball_decomposition(ball);
    CHECK(ball_is_i_stacked(bd, 2));
    CHECK(!ball_is_i_stacked(bd, 1));
    CHECK(ball_exactly_i_stacked(bd, 2));
  }
  const auto simplex = ball_decomposition(SimplicialComplex::simplex({1, 2, 3, 4}));
  CHECK(ball_is_i_stacked(simplex, 0));
  CHECK(ball_exactly_i_stacked(simplex, 0));
}

TEST_CASE("upper bounds hold and are tight on cyclic polytopes") {
  for (int n = 7; n <= 11; ++n) {
    const FaceProfile p = face_profile(cyclic_boundary(5, n));
    for (const auto& b : all_bounds(p)) {
      CAPTURE(b.name);
      CHECK(b.satisfied);
    }
  }
  // stacked spheres attain m_1 = g_1^<1> and m_{d-1} = g_1
  const FaceProfile s = face_profile(stacked_sphere(5, 10));
  for (const auto& b : m_upper_bounds(s.g, s.d, s.m)) {
    if (b.name == "m1_upper" || b.name == "m4_upper") CHECK(b.slack == 0);
  }
  CHECK_THROWS(m_upper_bounds({1, -1}, 4, {0, 0, 0, 0}));
}

TEST_CASE("Goodman bound") {
  // T_3(6) is the octahedron's graph
  const FaceProfile p = face_profile(octahedron());
  CHECK(goodman_bound(6, 12) == 8);
  CHECK(Rational(p.f_at(2) + p.m_at(2)) == goodman_bound(6, 12));
  CHECK(generalized_mk_bound(2, 6, 12, 8) == Rational(0));
}

TEST_CASE("nearly neighborly bound reduces to the dimension 3 and 4 forms") {
  for (std::int64_t n = 6; n <= 14; ++n) {
    for (std::int64_t f1 = n; f1 <= n * (n - 1) / 2; ++f1) {
      CHECK(nearly_neighborly_bound(2, 4, n, f1) == goodman_bound(n, f1) - Rational(2 * (f1 - n)));
      CHECK(nearly_neighborly_bound(2, 5, n, f1) == goodman_bound(n, f1) - Rational(4 * f1 - 10 * n + 20));
    }
  }
  CHECK_THROWS(nearly_neighborly_bound(2, 6, 10, 20));
}

TEST_CASE("Fano complex attains the generalized bound") {
  const std::vector<VertexSet> lines{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  auto is_face = [&](const VertexSet& s) {
    for (const auto& l : lines) {
      if (l.subset_of(s) || (VertexSet::range(1, 7) - l).subset_of(s)) return false;
    }
    return true;
  };
  // brute-force counts
  std::int64_t f2 = 0, f3 = 0, m3 = 0;
  for (const auto& s : subsets_of_size(VertexSet::range(1, 7), 3)) f2 += is_face(s) ? 1 : 0;
  for (const auto& s : subsets_of_size(VertexSet::range(1, 7), 4)) {
    if (is_face(s)) {
      ++f3;
      continue;
    }
    bool all = true;
    s.for_each([&](int v) { all = all && is_face(s.without(v)); });
    m3 += all ? 1 : 0;
  }
  CHECK(f2 == 28);
  CHECK(f3 == 0);
  CHECK(m3 == 7);
  CHECK(generalized_mk_bound(3, 7, f2, f3) == Rational(m3));

  std::vector<VertexSet> missing = lines;
  for (const auto& l : lines) missing.push_back(VertexSet::range(1, 7) - l);
  const auto k = from_missing_faces(VertexSet::range(1, 7), missing);
  CHECK(m_vector(k)[2] == m3);
}

TEST_CASE("flag edge cap") {
  CHECK(flag_edge_cap(4, 8) == Rational(28));
  CHECK(flag_edge_cap(5, 8) == Rational(40));
  CHECK_THROWS(flag_edge_cap(6, 8));
  const FaceProfile p = face_profile(join(octahedron(), SimplicialComplex::simplex_boundary({7, 8})));
  bool saw = false;
  for (const auto& b : all_bounds(p)) {
    if (b.name == "f1_flag_cap") {
      saw = true;
      CHECK(b.satisfied);
    }
  }
  CHECK(saw);
}

TEST_CASE("2-sphere admissibility matches enumeration at n = 5 and 6") {
  for (int n : {5, 6}) {
    std::set<std::int64_t> seen;
    const auto triangles = subsets_of_size(VertexSet::range(1, n), 3);
    const int t = static_cast<int>(triangles.size());
    const int want = 2 * n - 4;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(pick.size()) == want) {
        std::vector<VertexSet> facets;
        for (int i : pick) facets.push_back(triangles[i]);
        const auto k = SimplicialComplex::from_facets(facets);
        if (k.num_vertices() == n && verify_sphere(k, SphereLevel::Full)) seen.insert(m_vector(k)[1]);
        return;
      }
      for (int i = from; i < t; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    std::set<std::int64_t> admissible;
    for (int m = 0; m <= n; ++m) {
      if (two_sphere_m_admissible(n, m)) admissible.insert(m);
    }
    CAPTURE(n);
    CHECK(seen == admissible);
  }
}
