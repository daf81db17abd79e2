#include "mfaces/family.hpp"

#include <stdexcept>

#include "mfaces/gale.hpp"
#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/vectors.hpp"

namespace mfaces {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error("family: " + what); }

std::string jname(const char* what, int j) { return std::string(what) + "_" + std::to_string(j); }

bool all_missing_of_size(const SimplicialComplex& k, int size) {
  for (const auto& m : missing_faces(k)) {
    if (m.size() != size) return false;
  }
  return true;
}

VertexSet prefix(const FamilyState& s, int j) {
  VertexSet f;
  for (int t = 0; t < j; ++t) f = f | s.edges[t];
  return f;
}

void check_ball(const SimplicialComplex& ball, const std::string& name) {
  const BallDecomposition bd = ball_decomposition(ball);
  if (bd.boundary.is_void()) fail(name + " has no boundary");
  const SphereCheck c = verify_sphere(bd.boundary, SphereLevel::Quick);
  if (!c) fail("boundary of " + name + " is not a sphere (" + c.reason + ")");
}

}  // namespace

void check_family_state(const FamilyState& s, bool full) {
  const int k = s.k;
  if (k < 1) fail("k must be positive");
  if (static_cast<int>(s.edges.size()) != k) fail("need exactly k edges");
  if (s.sigma.dim() != 2 * k) fail("sigma is not 2k-dimensional");
  if (!(s.sigma.vertices() == VertexSet::range(1, s.n))) fail("sigma is not on [n]");
  for (int j = 0; j < k; ++j) {
    if (s.edges[j].size() != 2) fail(jname("e", j + 1) + " is not an edge");
    if (prefix(s, j).intersects(s.edges[j])) fail("edges are not pairwise disjoint");
  }
  const SphereCheck top = verify_sphere(s.sigma, full ? SphereLevel::Full : SphereLevel::Quick);
  if (!top) fail("sigma is not a sphere (" + top.reason + ")");
  for (int j = 0; j <= k; ++j) {
    const VertexSet f = prefix(s, j);
    if (!s.sigma.is_face(f)) fail(jname("F", j) + " is not a face");
    if (j == k) break;
    const SimplicialComplex g = link(s.sigma, f);
    const int t = k - j;
    if (j <= k - 2) {
      const SphereCheck c = verify_sphere(g, SphereLevel::Quick);
      if (!c) fail(jname("Gamma", t) + " is not a sphere (" + c.reason + ")");
      if (!is_neighborly_on(g, t, VertexSet::range(1, s.n) - f)) {
        fail(jname("Gamma", t) + " is not " + std::to_string(t) + "-neighborly on the remaining vertices");
      }
    }
    if (t % 2 == 1 && !all_missing_of_size(g, t + 1)) {
      fail(jname("Gamma", t) + " has a missing face of dimension other than " + std::to_string(t));
    }
  }
  if (!all_missing_of_size(s.sigma, k + 1)) {
    fail("sigma has a missing face of dimension other than " + std::to_string(k));
  }
}

FamilyBalls family_balls(const FamilyState& s) {
  const int k = s.k;
  FamilyBalls r;
  for (int j = 0; j <= k; ++j) r.gamma.push_back(link(s.sigma, prefix(s, k - j)));
  r.d.resize(k + 1);
  r.b.resize(k + 1);
  for (int j = 1; j <= k; ++j) {
    const SimplicialComplex edge = SimplicialComplex::simplex(s.edges[k - j]);
    r.d[j] = join(edge, j == 1 ? r.gamma[0] : r.b[j - 1]);
    const SimplicialComplex& g = r.gamma[j];
    const SimplicialComplex& d = r.d[j];
    for (const auto& f : d.facets()) {
      if (!g.has_facet(f)) fail(jname("D", j) + " is not contained in " + jname("Gamma", j));
    }
    check_ball(d, jname("D", j));
    const BallDecomposition dd = ball_decomposition(d);
    if (j > 1 && !is_neighborly_on(d, j - 1, g.vertices())) {
      fail(jname("D", j) + " is not " + std::to_string(j - 1) + "-neighborly on V(Gamma)");
    }
    if (!ball_exactly_i_stacked(dd, j)) fail(jname("D", j) + " is not exactly " + std::to_string(j) + "-stacked");
    if (!induced_on_skeleton(d, j - 1, g)) {
      fail(jname("D", j) + " is not induced on its " + std::to_string(j - 1) + "-skeleton");
    }

    r.b[j] = complement_ball(g, d);
    const SimplicialComplex& b = r.b[j];
    check_ball(b, jname("B", j));
    const BallDecomposition bb = ball_decomposition(b);
    if (!is_neighborly_on(b, j, g.vertices())) {
      fail(jname("B", j) + " is not " + std::to_string(j) + "-neighborly on V(Gamma)");
    }
    if (!ball_exactly_i_stacked(bb, j + 1)) {
      fail(jname("B", j) + " is not exactly " + std::to_string(j + 1) + "-stacked");
    }
    if (!induced_on_skeleton(b, j, g)) {
      fail(jname("B", j) + " is not induced on its " + std::to_string(j) + "-skeleton");
    }
  }
  return r;
}

FamilyState family_step(const FamilyState& s, bool full_sphere_check) {
  check_family_state(s, full_sphere_check);
  const int k = s.k;
  const int n = s.n;

  std::vector<std::pair<int, int>> perm;
  VertexSet on_edges;
  for (int j = 1; j <= k; ++j) {
    const VertexSet& e = s.edges[j - 1];
    perm.emplace_back(e.min(), n + 1 - 2 * j);
    perm.emplace_back(e.max(), n + 2 - 2 * j);
    on_edges = on_edges | e;
  }
  int next = 1;
  for (int v : (VertexSet::range(1, n) - on_edges).labels()) perm.emplace_back(v, next++);

  FamilyState cur = s;
  cur.sigma = relabel(s.sigma, perm);
  for (int j = 1; j <= k; ++j) cur.edges[j - 1] = VertexSet{n + 1 - 2 * j, n + 2 - 2 * j};
  std::string log_line = "n=" + std::to_string(n) + " relabel";
  bool identity = true;
  for (const auto& [from, to] : perm) {
    if (from != to) {
      identity = false;
      log_line += " " + std::to_string(from) + "->" + std::to_string(to);
    }
  }
  if (identity) log_line += " identity";

  const FamilyBalls balls = family_balls(cur);
  FamilyState out;
  out.k = k;
  out.n = n + 1;
  out.sigma = sew(cur.sigma, balls.d[k], n + 1);
  for (int j = 1; j <= k; ++j) out.edges.push_back(VertexSet{n + 2 - 2 * j, n + 3 - 2 * j});
  out.log = s.log;
  out.log.push_back(log_line + "; sewed " + std::to_string(n + 1) + " onto D_" + std::to_string(k) +
                    " (" + std::to_string(balls.d[k].num_facets()) + " facets)");
  check_family_state(out, full_sphere_check);
  return out;
}

FamilyState family_seed_qk(int k) {
  QkConstruction q = build_qk(k);
  FamilyState s;
  s.sigma = q.sphere;
  s.edges = q.edges;
  s.k = k;
  s.n = q.sphere.num_vertices();
  s.log.push_back("seed Q_" + std::to_string(k));
  check_family_state(s);
  return s;
}

FamilyState family_seed_p042() {
  FamilyState s;
  s.sigma = p042();
  s.edges = {VertexSet{1, 9}, VertexSet{3, 6}};
  s.k = 2;
  s.n = 9;
  s.log.push_back("seed P042");
  check_family_state(s);
  return s;
}

}  // namespace mfaces
