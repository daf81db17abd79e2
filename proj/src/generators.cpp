#include "mfaces/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "mfaces/homology.hpp"
#include "mfaces/vectors.hpp"

namespace mfaces {

namespace {

[[noreturn]] void check_failed(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

void require_sphere(const SimplicialComplex& k, const std::string& where) {
  const SphereCheck c = verify_sphere(k, SphereLevel::Quick);
  if (!c) check_failed(where, "not a sphere (" + c.reason + ")");
}

std::vector<VertexSet> missing_of_size(const SimplicialComplex& k, int s) {
  std::vector<VertexSet> out;
  for (const auto& m : missing_faces(k)) {
    if (m.size() == s) out.push_back(m);
  }
  return out;
}

SimplicialComplex stack_onto(const SimplicialComplex& k, const VertexSet& facet, int v) {
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    if (!(f == facet)) out.push_back(f);
  }
  facet.for_each([&](int x) { out.push_back(facet.without(x).with(v)); });
  return SimplicialComplex::from_facets(std::move(out));
}

VertexSet first_facet_containing(const SimplicialComplex& k, int v) {
  for (const auto& f : k.facets()) {
    if (f.contains(v)) return f;
  }
  throw std::logic_error("vertex not in complex");
}

}  // namespace

SimplicialComplex cyclic_boundary(int d, int n) {
  if (d < 2 || n <= d) throw std::invalid_argument("cyclic_boundary needs n > d >= 2");
  std::vector<VertexSet> facets;
  for (const auto& s : subsets_of_size(VertexSet::range(1, n), d)) {
    bool even = true;
    for (int a = 1; a <= n && even; ++a) {
      if (s.contains(a)) continue;
      for (int b = a + 1; b <= n; ++b) {
        if (s.contains(b)) continue;
        int between = 0;
        for (int c = a + 1; c < b; ++c) between += s.contains(c) ? 1 : 0;
        if (between % 2 != 0) even = false;
        break;  // the next non-member decides; later pairs follow by additivity
      }
    }
    if (even) facets.push_back(s);
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex ball_B(int two_k, int a, int b) {
  if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("ball_B needs an even dimension");
  const int k = two_k / 2;
  std::vector<VertexSet> facets;
  std::vector<int> starts;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(starts.size()) == k) {
      VertexSet f;
      for (int s : starts) f = f.with(s).with(s + 1);
      facets.push_back(f);
      return;
    }
    for (int s = from; s + 1 <= b; ++s) {
      starts.push_back(s);
      grow(s + 2);
      starts.pop_back();
    }
  };
  grow(a);
  if (facets.empty()) throw std::invalid_argument("ball_B: empty facet family");
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex squeezed_ball_C(int i, int k) {
  if (i < 1 || k < 2) throw std::invalid_argument("squeezed_ball_C needs i >= 1, k >= 2");
  if (i == 1) return SimplicialComplex::void_complex();
  std::vector<VertexSet> facets;
  for (int j = 2; j <= i; ++j) {
    VertexSet f = VertexSet::range(3, 2 * k - 2);
    f = f.with(2 * k - 3 + j).with(2 * k - 2 + j);
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex ball_D(int k, int n, const SimplicialComplex& t) {
  const SimplicialComplex base =
      join(SimplicialComplex::simplex(VertexSet{1, n}), ball_B(2 * k, 2, n - 1));
  if (t.is_void()) return base;
  const SimplicialComplex cap = join(SimplicialComplex::simplex(VertexSet{1, 2, n - 1, n}), t);
  std::vector<VertexSet> facets = base.facets();
  facets.insert(facets.end(), cap.facets().begin(), cap.facets().end());
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex ball_D(int k, int n, int i) { return ball_D(k, n, squeezed_ball_C(i, k)); }

// ---------------------------------------------------------------------------

FlipMove flip_move(const SimplicialComplex& k, const VertexSet& a) {
  return FlipMove{a, link(k, a).vertices()};
}

SimplicialComplex bistellar_flip(const SimplicialComplex& k, const FlipMove& move) {
  const int d = k.dim() + 1;
  if (move.a.empty() || move.b.empty()) throw std::invalid_argument("flip: A and B must be nonempty");
  if (move.a.size() + move.b.size() != d + 1) {
    throw std::invalid_argument("flip: |A| + |B| = " + std::to_string(move.a.size() + move.b.size()) +
                                ", expected " + std::to_string(d + 1));
  }
  if (move.a.intersects(move.b)) throw std::invalid_argument("flip: A and B overlap");
  const SimplicialComplex expected =
      join(SimplicialComplex::simplex(move.a), SimplicialComplex::simplex_boundary(move.b));
  if (!(induced(k, move.a | move.b) == expected)) {
    throw std::invalid_argument("flip: subcomplex on " + (move.a | move.b).to_string() +
                                " is not " + move.a.to_string() + " * boundary " +
                                move.b.to_string());
  }
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    if (!move.a.subset_of(f)) out.push_back(f);
  }
  move.a.for_each([&](int x) { out.push_back(move.a.without(x) | move.b); });
  return SimplicialComplex::from_facets(std::move(out));
}

std::vector<VertexSet> delta_lost_faces(int n, int i) {
  std::vector<VertexSet> out;
  for (int j = i + 3; j <= n - 2; ++j) out.push_back(VertexSet{1, i + 1, j, n});
  return out;
}

std::vector<SimplicialComplex> delta_sequence(int n, bool extra) {
  if (n < 8) throw std::invalid_argument("delta_sequence needs n >= 8");
  std::vector<SimplicialComplex> seq{cyclic_boundary(5, n)};
  auto check = [&](int i) {
    const std::string where = "delta_sequence n=" + std::to_string(n) + " i=" + std::to_string(i);
    const SimplicialComplex& cur = seq.back();
    require_sphere(cur, where);
    if (neighborliness(f_vector(cur), n) < 2) check_failed(where, "not neighborly");
    const auto m3 = missing_of_size(cur, 4);
    if (static_cast<std::int64_t>(m3.size()) != binom(n - 4 - i, 2)) {
      check_failed(where, "m3 = " + std::to_string(m3.size()) + ", expected " +
                              std::to_string(binom(n - 4 - i, 2)));
    }
    if (i >= 2) {
      std::set<VertexSet> want;
      for (const auto& m : missing_of_size(seq[seq.size() - 2], 4)) want.insert(m);
      for (const auto& s : delta_lost_faces(n, i)) want.erase(s);
      const std::set<VertexSet> got(m3.begin(), m3.end());
      if (got != want) check_failed(where, "missing 3-faces differ from the previous set minus the lost faces");
    }
  };
  check(1);
  for (int i = 2; i <= n - 6; ++i) {
    const VertexSet a{1, i + 1, n};
    const FlipMove move = flip_move(seq.back(), a);
    if (!(move.b == VertexSet{2, i + 2, n - 1})) {
      check_failed("delta_sequence n=" + std::to_string(n) + " i=" + std::to_string(i),
                   "link of " + a.to_string() + " has vertices " + move.b.to_string());
    }
    seq.push_back(bistellar_flip(seq.back(), move));
    check(i);
  }
  if (extra) {
    seq.push_back(bistellar_flip(seq.back(), flip_move(seq.back(), VertexSet{1, n - 4, n})));
    require_sphere(seq.back(), "delta_sequence extra flip on {1,n-4,n}");
    seq.push_back(bistellar_flip(seq.back(), flip_move(seq.back(), VertexSet{1, n})));
    require_sphere(seq.back(), "delta_sequence extra flip on {1,n}");
  }
  return seq;
}

std::vector<SimplicialComplex> delta_sequence_2k(int k, int n) {
  if (k < 2) throw std::invalid_argument("delta_sequence_2k needs k >= 2");
  if (n < 2 * k + 3) throw std::invalid_argument("delta_sequence_2k needs n >= 2k+3");
  std::vector<SimplicialComplex> seq{cyclic_boundary(2 * k + 1, n)};
  std::int64_t m_expected = binom(n - k - 3, k);
  for (int i = 1; i <= n - 2 * k - 2; ++i) {
    const std::string where = "delta_sequence_2k k=" + std::to_string(k) + " n=" +
                              std::to_string(n) + " i=" + std::to_string(i);
    if (i >= 2) {
      VertexSet a{2 * k - 3 + i, n};
      for (int x = 1; x <= 2 * k - 3; x += 2) a.insert(x);
      seq.push_back(bistellar_flip(seq.back(), flip_move(seq.back(), a)));
      m_expected -= n - 2 * k - 1 - (i - 1);
    }
    const SimplicialComplex& cur = seq.back();
    require_sphere(cur, where);
    if (neighborliness(f_vector(cur), n) < k) check_failed(where, "not neighborly");
    const auto m = missing_of_size(cur, k + 2);
    if (static_cast<std::int64_t>(m.size()) != m_expected) {
      check_failed(where, "m_" + std::to_string(k + 1) + " = " + std::to_string(m.size()) +
                              ", expected " + std::to_string(m_expected));
    }
    const BallDecomposition bd = ball_decomposition(ball_D(k, n, i));
    if (!(bd.boundary == cur)) check_failed(where, "boundary of the ball D differs");
  }
  return seq;
}

// ---------------------------------------------------------------------------

ShellingRecord verify_shelling(const std::vector<VertexSet>& order) {
  if (order.empty()) throw std::invalid_argument("shelling: no facets");
  const int size = order.front().size();
  ShellingRecord r;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexSet& f = order[i];
    if (f.size() != size) throw std::invalid_argument("shelling: input is not pure");
    VertexSet restriction;
    f.for_each([&](int v) {
      const VertexSet ridge = f.without(v);
      for (std::size_t j = 0; j < i; ++j) {
        if (ridge.subset_of(order[j])) {
          restriction.insert(v);
          break;
        }
      }
    });
    if (i > 0) {
      if (restriction.empty()) {
        throw std::invalid_argument("shelling: facet " + std::to_string(i + 1) + " " +
                                    f.to_string() + " meets its predecessors in no ridge");
      }
      // every earlier intersection must avoid some restriction vertex
      for (std::size_t j = 0; j < i; ++j) {
        if (restriction.subset_of(order[j])) {
          throw std::invalid_argument("shelling: facet " + std::to_string(i + 1) + " " +
                                      f.to_string() + " meets " + order[j].to_string() +
                                      " outside the codimension-one part");
        }
      }
    }
    r.facets.push_back(f);
    r.restriction_faces.push_back(restriction);
  }
  return r;
}

SimplicialComplex sew(const SimplicialComplex& k, const SimplicialComplex& b, int new_vertex) {
  if (k.vertices().contains(new_vertex)) {
    throw std::invalid_argument("sew: vertex " + std::to_string(new_vertex) + " already used");
  }
  if (b.is_void() || b.dim() != k.dim() || !b.is_pure()) {
    throw std::invalid_argument("sew: ball must be pure of the sphere's dimension");
  }
  for (const auto& f : b.facets()) {
    if (!k.has_facet(f)) throw std::invalid_argument("sew: " + f.to_string() + " is not a facet of the sphere");
  }
  const BallDecomposition bd = ball_decomposition(b);
  if (bd.boundary.is_void()) throw std::invalid_argument("sew: ball has no boundary");
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    if (!b.has_facet(f)) out.push_back(f);
  }
  for (const auto& r : bd.boundary.facets()) out.push_back(r.with(new_vertex));
  SimplicialComplex result = SimplicialComplex::from_facets(std::move(out));
  require_sphere(result, "sew");

  const int t = (k.dim() + 1) / 2;
  const bool low_interior = std::none_of(bd.interior_faces.begin(), bd.interior_faces.end(),
                                         [&](const VertexSet& f) { return f.size() <= t; });
  if (low_interior && t >= 1 &&
      bd.boundary.faces_of_size(t - 1).size() ==
          static_cast<std::size_t>(binom(k.num_vertices(), t - 1)) &&
      neighborliness(f_vector(k), k.num_vertices()) >= t) {
    if (neighborliness(f_vector(result), result.num_vertices()) < t) {
      check_failed("sew", "result lost neighborliness");
    }
  }
  return result;
}

SimplicialComplex complement_ball(const SimplicialComplex& g, const SimplicialComplex& d) {
  for (const auto& f : d.facets()) {
    if (!g.has_facet(f)) throw std::invalid_argument("complement_ball: " + f.to_string() + " is not a facet");
  }
  std::vector<VertexSet> out;
  for (const auto& f : g.facets()) {
    if (!d.has_facet(f)) out.push_back(f);
  }
  if (out.empty()) throw std::invalid_argument("complement_ball: complement is empty");
  return SimplicialComplex::from_facets(std::move(out));
}

std::vector<VertexSet> ball_Bk_order(int n, int k) {
  if (n < 8 || k < 2 || k > n - 4) throw std::invalid_argument("ball_Bk needs n >= 8, 2 <= k <= n-4");
  std::vector<VertexSet> order;
  for (int j = 2; j <= n - 4; ++j) order.push_back(VertexSet::range(j, j + 3).with(1));
  for (int j = 2; j <= k; ++j) order.push_back(VertexSet::range(j, j + 3).with(n));
  return order;
}

SimplicialComplex ball_Bk(int n, int k) { return SimplicialComplex::from_facets(ball_Bk_order(n, k)); }

SimplicialComplex gamma_from(const SimplicialComplex& delta_i, int n, int k) {
  return sew(delta_i, ball_Bk(n, k), n + 1);
}

SimplicialComplex gamma(int n, int i, int k) {
  if (i < 1 || i > n - 6) throw std::invalid_argument("gamma needs 1 <= i <= n-6");
  return gamma_from(delta_sequence(n)[i - 1], n, k);
}

// ---------------------------------------------------------------------------

namespace {

SimplicialComplex from_lists(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<VertexSet> facets;
  for (const auto& l : lists) facets.emplace_back(l);
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace

SimplicialComplex gs8() {
  return from_lists({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 6}, {1, 3, 5, 6},
                     {1, 4, 5, 7}, {1, 4, 6, 7}, {1, 5, 6, 8}, {1, 5, 7, 8}, {1, 6, 7, 8},
                     {2, 3, 4, 8}, {2, 3, 5, 6}, {2, 3, 6, 7}, {2, 3, 7, 8}, {2, 4, 5, 8},
                     {2, 5, 6, 8}, {2, 6, 7, 8}, {3, 4, 6, 7}, {3, 4, 7, 8}, {4, 5, 7, 8}});
}

SimplicialComplex p042() {
  return from_lists({{1, 3, 6, 8, 9}, {1, 3, 4, 8, 9}, {3, 4, 6, 8, 9}, {2, 4, 6, 8, 9},
                     {1, 3, 5, 6, 8}, {1, 2, 3, 5, 6}, {2, 3, 5, 6, 8}, {1, 3, 4, 5, 8},
                     {2, 3, 6, 7, 8}, {2, 4, 6, 7, 8}, {3, 4, 6, 7, 8}, {1, 2, 3, 6, 7},
                     {1, 5, 6, 8, 9}, {2, 3, 5, 7, 8}, {3, 4, 6, 7, 9}, {1, 2, 4, 5, 9},
                     {1, 2, 4, 5, 7}, {1, 2, 4, 7, 9}, {2, 5, 6, 8, 9}, {2, 4, 5, 8, 9},
                     {2, 4, 5, 7, 8}, {2, 4, 6, 7, 9}, {1, 3, 6, 7, 9}, {1, 2, 6, 7, 9},
                     {1, 2, 5, 6, 9}, {1, 2, 3, 5, 7}, {3, 4, 5, 7, 8}, {1, 3, 4, 7, 9},
                     {1, 3, 4, 5, 7}, {1, 4, 5, 8, 9}});
}

SimplicialComplex octahedron() {
  return join(join(SimplicialComplex::simplex_boundary({1, 2}),
                   SimplicialComplex::simplex_boundary({3, 4})),
              SimplicialComplex::simplex_boundary({5, 6}));
}

SimplicialComplex stacked_sphere(int d, int n) {
  if (d < 1 || n < d + 1) throw std::invalid_argument("stacked_sphere needs n >= d+1");
  SimplicialComplex k = SimplicialComplex::simplex_boundary(VertexSet::range(1, d + 1));
  for (int v = d + 2; v <= n; ++v) {
    const VertexSet f = v == d + 2 ? k.facets().front() : first_facet_containing(k, v - 1);
    k = stack_onto(k, f, v);
  }
  return k;
}

SimplicialComplex realize_2sphere(int n, int m2) {
  if (n < 4 || !two_sphere_m_admissible(n, m2)) {
    throw std::invalid_argument("no 2-sphere with " + std::to_string(n) + " vertices has " +
                                std::to_string(m2) +
                                " missing triangles: need 0 <= m2 <= n-6 or m2 = n-4");
  }
  SimplicialComplex k;
  if (m2 == n - 4) {
    k = stacked_sphere(3, n);
  } else {
    const int p = n - m2 - 2;
    std::vector<VertexSet> facets;
    for (int i = 1; i <= p; ++i) {
      const int j = i % p + 1;
      facets.push_back(VertexSet{i, j, p + 1});
      facets.push_back(VertexSet{i, j, p + 2});
    }
    k = SimplicialComplex::from_facets(std::move(facets));
    for (int v = p + 3; v <= n; ++v) {
      const VertexSet f = v == p + 3 ? VertexSet{1, 2, p + 1} : first_facet_containing(k, v - 1);
      k = stack_onto(k, f, v);
    }
  }
  const FaceProfile prof = face_profile(k, false);
  if (prof.m_at(2) != m2 || prof.m_at(3) != (n == 4 ? 1 : 0) ||
      prof.m_at(1) != pseudopower_upper(prof.g_at(1), 1)) {
    check_failed("realize_2sphere", "constructed complex has the wrong m-vector");
  }
  require_sphere(k, "realize_2sphere");
  return k;
}

}  // namespace mfaces
