#include "mfaces/repro.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mfaces/canonical.hpp"
#include "mfaces/family.hpp"
#include "mfaces/gale.hpp"
#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/io.hpp"
#include "mfaces/vectors.hpp"

namespace mfaces {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::vector<VertexSet> missing_of_size(const SimplicialComplex& k, int s) {
  std::vector<VertexSet> out;
  for (const auto& m : missing_faces(k)) {
    if (m.size() == s) out.push_back(m);
  }
  return out;
}

bool all_missing_of_size(const SimplicialComplex& k, int s) {
  for (const auto& m : missing_faces(k)) {
    if (m.size() != s) return false;
  }
  return true;
}

void expect_sphere(const SimplicialComplex& k, SphereLevel level, const std::string& what) {
  const SphereCheck c = verify_sphere(k, level);
  expect(c.ok, what + " is not a sphere: " + c.reason);
}

// Spheres produced by the criteria, re-examined by the bound suite.
std::vector<std::pair<std::string, SimplicialComplex>>& sphere_pool() {
  static std::vector<std::pair<std::string, SimplicialComplex>> pool;
  return pool;
}

void pool(const std::string& name, const SimplicialComplex& k) { sphere_pool().emplace_back(name, k); }

// ---------------------------------------------------------------------------

std::string cyclic_m_vectors() {
  for (int n = 8; n <= 12; ++n) {
    const SimplicialComplex c = cyclic_boundary(5, n);
    pool("cyclic(5," + str(n) + ")", c);
    const Counts m = m_vector(c);
    for (int i = 1; i <= 5; ++i) {
      const std::int64_t got = i <= static_cast<int>(m.size()) ? m[i - 1] : 0;
      std::int64_t want = 0;
      if (i == 2) want = binom(n - 4, 3);
      if (i == 3) want = binom(n - 5, 2);
      expect(got == want, "n=" + str(n) + " m" + str(i) + "=" + str(got) + ", expected " + str(want));
    }
  }
  return "n=8..12 exact";
}

std::string flip_sequence() {
  int members = 0;
  for (int n = 9; n <= 12; ++n) {
    const auto seq = delta_sequence(n);
    expect(static_cast<int>(seq.size()) == n - 6, "n=" + str(n) + ": wrong sequence length");
    std::set<VertexSet> prev;
    for (int i = 1; i <= n - 6; ++i) {
      const SimplicialComplex& d = seq[i - 1];
      pool("delta(" + str(n) + ")_" + str(i), d);
      const auto m3 = missing_of_size(d, 4);
      expect(static_cast<std::int64_t>(m3.size()) == binom(n - 4 - i, 2),
             "n=" + str(n) + " i=" + str(i) + ": m3=" + str(m3.size()));
      const std::set<VertexSet> cur(m3.begin(), m3.end());
      if (i == 1) {
        std::set<VertexSet> m1;
        for (int a = 3; a <= n - 2; ++a) {
          for (int b = a + 2; b <= n - 2; ++b) m1.insert(VertexSet{1, a, b, n});
        }
        expect(cur == m1, "n=" + str(n) + ": missing 3-faces of the cyclic polytope differ");
      } else {
        std::set<VertexSet> want = prev;
        for (int j = i + 3; j <= n - 2; ++j) want.erase(VertexSet{1, i + 1, j, n});
        expect(cur == want, "n=" + str(n) + " i=" + str(i) + ": missing 3-face set mismatch");
      }
      prev = cur;
      ++members;
    }
  }
  return str(members) + " members, n=9..12";
}

std::string sewn_values() {
  std::string detail;
  for (int n = 9; n <= 11; ++n) {
    const auto seq = delta_sequence(n);
    std::set<std::int64_t> realized;
    for (int i = 1; i <= n - 6; ++i) {
      for (int k = 2; k <= n - 4; ++k) {
        const SimplicialComplex g = gamma_from(seq[i - 1], n, k);
        if (k == 2 || k == n - 4) pool("gamma(" + str(n) + "," + str(i) + "," + str(k) + ")", g);
        const std::int64_t m3 = static_cast<std::int64_t>(missing_of_size(g, 4).size());
        const std::int64_t formula = binom(n - 4 - i, 2) + (k >= 3 ? n - k - 4 : n - 5);
        expect(m3 == formula, "n=" + str(n) + " i=" + str(i) + " k=" + str(k) + ": m3=" + str(m3) +
                                  ", formula " + str(formula));
        expect(neighborliness(f_vector(g), n + 1) >= 2, "sewn sphere is not neighborly");
        realized.insert(m3);
      }
    }
    std::set<std::int64_t> by_parts;
    for (int m = 2; m <= n - 5; ++m) {
      for (int s = 0; s <= n - 7; ++s) by_parts.insert(binom(m, 2) + s);
      by_parts.insert(binom(m, 2) + n - 5);
    }
    std::set<std::int64_t> by_range;
    for (std::int64_t v = 1; v <= binom(n - 4, 2) - 2; ++v) by_range.insert(v);
    by_range.insert(binom(n - 4, 2));
    expect(realized == by_parts, "n=" + str(n) + ": realized set differs from the parametrized set");
    expect(realized == by_range, "n=" + str(n) + ": realized set differs from the interval form");
    detail += (detail.empty() ? "" : ", ") + ("n=" + str(n) + ": " + str(realized.size()) + " values");
  }
  return detail;
}

std::string gs8_certificate() {
  const SimplicialComplex k = gs8();
  pool("gs8", k);
  expect(k.num_facets() == 20, "gs8 does not have 20 facets");
  expect_sphere(k, SphereLevel::Full, "gs8");
  expect(neighborliness(f_vector(k), 8) == 2, "gs8 is not neighborly");
  const Certificate c = nonpolytopality_certificate(k);
  expect(c.verdict == Verdict::NotPolytopal, "certificate is inconclusive");
  expect(c.witness_vertex == 4 && c.observed == 1 && c.expected == 3,
         "witness " + str(c.witness_vertex) + " with " + str(c.observed) + " vs " + str(c.expected));
  expect(is_isomorphic(link(k, {4}), link(k, {6})), "links of 4 and 6 are not isomorphic");
  return "witness 4: m2(lk)=1 != 3";
}

std::string p042_check() {
  const SimplicialComplex k = p042();
  pool("p042", k);
  expect(k.num_facets() == 30, "p042 does not have 30 facets");
  expect_sphere(k, SphereLevel::Full, "p042");
  expect(neighborliness(f_vector(k), 9) == 2, "p042 is not 2-neighborly");
  const std::set<VertexSet> published{{2, 3, 9}, {2, 3, 4}, {5, 7, 9}, {5, 6, 7}, {1, 7, 8},
                                      {1, 2, 8}, {3, 5, 9}, {4, 5, 6}, {7, 8, 9}, {1, 4, 6}};
  const auto m2 = missing_of_size(k, 3);
  expect(std::set<VertexSet>(m2.begin(), m2.end()) == published, "missing 2-faces differ from the published list");
  expect(missing_of_size(k, 4).empty(), "p042 has missing 3-faces");
  expect(all_missing_of_size(k, 3), "p042 has missing faces of other dimensions");
  return "10 missing 2-faces, m3=0";
}

std::string qk_check() {
  for (int k : {1, 3, 5}) {
    const QkConstruction q = build_qk(k);
    const std::string name = "Q" + str(k);
    pool(name, q.sphere);
    expect_sphere(q.sphere, SphereLevel::Full, name);
    expect(q.sphere.num_vertices() == 2 * k + 4, name + " has the wrong vertex count");
    expect(q.sphere.dim() == 2 * k, name + " has the wrong dimension");
    expect(neighborliness(f_vector(q.sphere), 2 * k + 4) >= k, name + " is not k-neighborly");
    expect(all_missing_of_size(q.sphere, k + 1), name + " has a missing face of dimension other than k");
    if (k == 1) expect(is_isomorphic(q.sphere, octahedron()), "Q1 is not the octahedron");
    VertexSet f;
    for (int j = 1; j < k; ++j) {
      f = f | q.edges[j - 1];
      const SimplicialComplex l = link(q.sphere, f);
      expect(is_neighborly_on(l, k - j, q.sphere.vertices() - f),
             name + ": link of F_" + str(j) + " is not " + str(k - j) + "-neighborly on the rest");
      if (j % 2 == 0) {
        expect(is_isomorphic(l, build_qk(k - j).sphere), name + ": link of F_" + str(j) + " is not Q" + str(k - j));
      }
    }
    if (k > 1) expect(is_isomorphic(link(q.sphere, f), octahedron()), name + ": last link is not the octahedron");
  }
  return "k=1,3,5";
}

std::string family_check() {
  std::string detail;
  for (int which = 0; which < 2; ++which) {
    FamilyState s = which == 0 ? family_seed_qk(3) : family_seed_p042();
    for (int step = 1; step <= 5; ++step) {
      s = family_step(s, true);
      pool("family k=" + str(s.k) + " n=" + str(s.n), s.sigma);
      expect(neighborliness(f_vector(s.sigma), s.n) >= s.k, "family member is not neighborly");
      expect(all_missing_of_size(s.sigma, s.k + 1), "family member has a missing face of dimension other than k");
    }
    detail += (detail.empty() ? "" : ", ") + ("k=" + str(s.k) + " reached n=" + str(s.n));
  }
  return detail;
}

// Eulerian complexes of dimension 3 and 4 from fixed-seed parameter draws.
std::vector<std::pair<std::string, SimplicialComplex>> eulerian_samples() {
  std::mt19937 rng(20240607u);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  while (out.size() < 20) {
    const int kind = pick(0, 5);
    std::string name;
    SimplicialComplex k;
    switch (kind) {
      case 0: {
        const int n = pick(5, 10);
        name = "cyclic(4," + str(n) + ")";
        k = cyclic_boundary(4, n);
        break;
      }
      case 1: {
        const int n = pick(6, 10);
        name = "cyclic(5," + str(n) + ")";
        k = cyclic_boundary(5, n);
        break;
      }
      case 2: {
        const int d = pick(4, 5);
        const int n = pick(d + 1, d + 6);
        name = "stacked(" + str(d) + "," + str(n) + ")";
        k = stacked_sphere(d, n);
        break;
      }
      case 3: {
        const int n = pick(8, 10);
        const int i = pick(1, n - 6);
        name = "delta(" + str(n) + ")_" + str(i);
        k = delta_sequence(n)[i - 1];
        break;
      }
      case 4: {
        const int n = pick(8, 9);
        const int i = pick(1, n - 6);
        const int kk = pick(2, n - 4);
        name = "gamma(" + str(n) + "," + str(i) + "," + str(kk) + ")";
        k = gamma(n, i, kk);
        break;
      }
      default: {
        const int p = pick(3, 7);
        const int q = pick(3, 7);
        std::vector<VertexSet> a;
        std::vector<VertexSet> b;
        for (int t = 1; t <= p; ++t) a.push_back(VertexSet{t, t % p + 1});
        for (int t = 1; t <= q; ++t) b.push_back(VertexSet{p + t, p + t % q + 1});
        name = "polygon" + str(p) + "*polygon" + str(q);
        k = join(SimplicialComplex::from_facets(a), SimplicialComplex::from_facets(b));
        break;
      }
    }
    out.emplace_back(name, k);
  }
  return out;
}

std::string goodman_check() {
  const SimplicialComplex oct = octahedron();
  pool("octahedron", oct);
  const Counts f = f_vector(oct);
  const Counts m = m_vector(oct);
  const Rational lhs = Rational(f[3] + m[1]);
  const Rational bound = goodman_bound(6, f[2]);
  expect(lhs == 8 && bound == 8, "octahedron: f2+m2=" + to_string(lhs) + ", bound " + to_string(bound));

  Rational min_slack;
  bool first = true;
  for (const auto& [name, k] : eulerian_samples()) {
    expect(is_eulerian(k), name + " is not Eulerian");
    const int d = k.dim() + 1;
    expect(d == 4 || d == 5, name + " has the wrong dimension");
    pool(name, k);
    const Counts kf = f_vector(k);
    const Counts km = m_vector(k);
    const std::int64_t n = kf[1];
    const std::int64_t f1 = kf[2];
    const Rational correction = d == 4 ? Rational(2 * (f1 - n)) : Rational(4 * f1 - 10 * n + 20);
    const Rational value = goodman_bound(n, f1) - correction;
    expect(value == nearly_neighborly_bound(2, d, n, f1), name + ": bound forms disagree");
    const Rational slack = Rational(km[1]) - value;
    expect(slack >= 0, name + ": m2=" + str(km[1]) + " below " + to_string(value));
    if (first || slack < min_slack) min_slack = slack;
    first = false;
  }
  return "octahedron 8=8; 20 samples, min slack " + to_string(min_slack);
}

std::string fano_check() {
  const std::vector<VertexSet> lines{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<VertexSet> missing = lines;
  for (const auto& l : lines) missing.push_back(VertexSet::range(1, 7) - l);
  const SimplicialComplex k = from_missing_faces(VertexSet::range(1, 7), missing);
  const Counts f = f_vector(k);
  auto f_at = [&](int i) -> std::int64_t { return i + 1 < static_cast<int>(f.size()) ? f[i + 1] : 0; };
  const Counts m = m_vector(k);
  const std::int64_t m3 = m.size() >= 3 ? m[2] : 0;
  expect(m3 == 7, "m3=" + str(m3));
  expect(neighborliness(f, 7) >= 2, "complex is not 2-neighborly");
  const BoundReport b = make_bound("m3_lower_clique", false, generalized_mk_bound(3, 7, f_at(2), f_at(3)), m3);
  expect(b.satisfied && b.slack == 0, "bound " + to_string(b.value) + " vs m3=" + str(m3));
  return "m3=7, bound 7, slack 0";
}

std::string two_sphere_check() {
  int built = 0;
  for (int n = 5; n <= 12; ++n) {
    for (int m2 = 0; m2 <= n; ++m2) {
      const bool ok = two_sphere_m_admissible(n, m2);
      bool threw = false;
      try {
        const SimplicialComplex k = realize_2sphere(n, m2);
        const FaceProfile p = face_profile(k);
        expect(p.n == n && p.m_at(2) == m2 && p.m_at(3) == 0 && p.m_at(1) == pseudopower_upper(p.g_at(1), 1),
               "(" + str(n) + "," + str(m2) + "): wrong m-vector");
        pool("sphere2(" + str(n) + "," + str(m2) + ")", k);
        ++built;
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      expect(ok != threw, "(" + str(n) + "," + str(m2) + "): admissible=" + (ok ? "yes" : "no") +
                              " but construction " + (threw ? "failed" : "succeeded"));
    }
    bool rejected = false;
    try {
      realize_2sphere(n, n - 5);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "m2=n-5 accepted at n=" + str(n));
  }
  return str(built) + " spheres, n=5..12";
}

std::string bound_suite() {
  // make sure every producer has run at least once
  if (sphere_pool().empty()) {
    for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 10, 12}) run_criterion(id);
  }
  int checked = 0;
  std::set<std::string> seen;
  for (const auto& [name, k] : sphere_pool()) {
    if (!seen.insert(name).second) continue;
    const FaceProfile p = face_profile(k);
    expect(p.is_eulerian, name + " is not Eulerian");
    expect(dehn_sommerville_check(p), name + " violates Dehn-Sommerville");
    for (const auto& b : all_bounds(p)) {
      expect(b.satisfied, name + ": " + b.name + " bound " + to_string(b.value) + " vs " + to_string(b.observed));
    }
    ++checked;
  }
  return str(checked) + " spheres";
}

std::string ball_boundary_check() {
  const int k = 3;
  const int n = 12;
  const auto seq = delta_sequence_2k(k, n);
  for (int i = 1; i <= 3; ++i) {
    const SimplicialComplex& d = seq[i - 1];
    pool("delta2k(3,12)_" + str(i), d);
    const SimplicialComplex bd = ball_decomposition(ball_D(k, n, i)).boundary;
    expect(bd.facets() == d.facets(), "i=" + str(i) + ": boundary of D differs");
    std::int64_t want = binom(n - k - 3, k);
    for (int l = 1; l <= i - 1; ++l) want -= n - 2 * k - 1 - l;
    const std::int64_t got = static_cast<std::int64_t>(missing_of_size(d, k + 2).size());
    expect(got == want, "i=" + str(i) + ": m4=" + str(got) + ", expected " + str(want));
  }
  return "i=1..3 facet-for-facet";
}

std::map<std::string, NamedComplex> scan_data_dir(const std::string& dir) {
  std::map<std::string, NamedComplex> found;
  if (!std::filesystem::is_directory(dir)) throw Failure("data directory " + dir + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::vector<NamedComplex> entries;
    try {
      entries = load_complexes(path.string());
    } catch (const std::exception&) {
      continue;
    }
    for (auto& e : entries) {
      std::string name = e.name.empty() ? path.stem().string() : e.name;
      if (name.rfind("manifold_", 0) == 0) name = name.substr(9);
      found.emplace(name, NamedComplex{name, e.complex});
    }
  }
  return found;
}

CriterionResult lutz_rows(const ReproOptions& opt) {
  CriterionResult r{13, "vertex-link table", Status::Skipped, "no --data-dir given"};
  if (!opt.data_dir) return r;
  const auto found = scan_data_dir(*opt.data_dir);
  int ran = 0;
  std::string skipped;
  std::string failures;
  for (const auto& row : lutz_table()) {
    const auto it = found.find(row.name);
    if (it == found.end()) {
      skipped += std::string(skipped.empty() ? "" : " ") + row.name;
      continue;
    }
    ++ran;
    try {
      const Certificate c = nonpolytopality_certificate(it->second.complex);
      if (c.verdict != Verdict::NotPolytopal || c.k != row.k || c.observed != row.value) {
        failures += std::string(row.name) + " (verdict " + to_string(c.verdict) + ", m" + str(c.k) +
                    "(lk " + str(c.witness_vertex) + ")=" + str(c.observed) + ", table " + str(row.value) + ") ";
      }
    } catch (const std::exception& e) {
      failures += std::string(row.name) + " (" + e.what() + ") ";
    }
  }
  if (ran == 0) {
    r.detail = "none of the table complexes found in " + *opt.data_dir;
    return r;
  }
  r.status = failures.empty() ? Status::Pass : Status::Fail;
  r.detail = str(ran) + " rows checked";
  if (!failures.empty()) r.detail += "; failed: " + failures;
  if (!skipped.empty()) r.detail += "; skipped: " + skipped;
  return r;
}

struct Entry {
  const char* name;
  std::function<std::string()> run;
};

const std::map<int, Entry>& entries() {
  static const std::map<int, Entry> e{
      {1, {"cyclic m-vectors", cyclic_m_vectors}},
      {2, {"flip sequence", flip_sequence}},
      {3, {"sewn m3 values", sewn_values}},
      {4, {"GS8 certificate", gs8_certificate}},
      {5, {"P042 missing faces", p042_check}},
      {6, {"Q_k spheres", qk_check}},
      {7, {"family engine", family_check}},
      {8, {"Goodman-type bounds", goodman_check}},
      {9, {"Fano equality", fano_check}},
      {10, {"2-sphere m-vectors", two_sphere_check}},
      {11, {"upper-bound suite", bound_suite}},
      {12, {"ball boundary cross-check", ball_boundary_check}},
  };
  return e;
}

}  // namespace

const std::vector<LutzRow>& lutz_table() {
  static const std::vector<LutzRow> rows{
      {"3_10_1_1", 2, 3},  {"3_11_1_1", 2, 3},  {"3_13_1_3", 2, 2},  {"3_13_1_5", 2, 3},
      {"3_14_1_7", 2, 5},  {"3_14_1_8", 2, 7},  {"3_14_1_11", 2, 4}, {"3_14_1_14", 2, 7},
      {"3_14_1_17", 2, 6}, {"3_14_1_18", 2, 7}, {"3_14_1_26", 2, 7}, {"3_14_1_27", 2, 5},
      {"3_15_1_3", 2, 6},  {"3_15_1_13", 2, 5}, {"5_11_1_1", 3, 8},  {"5_13_2_6", 3, 15},
      {"5_13_1_8", 3, 11}, {"5_15_2_7", 3, 24},
  };
  return rows;
}

CriterionResult run_criterion(int id, const ReproOptions& opt) {
  if (id == 13) {
    try {
      return lutz_rows(opt);
    } catch (const std::exception& e) {
      return {13, "vertex-link table", Status::Fail, e.what()};
    }
  }
  const auto it = entries().find(id);
  if (it == entries().end()) throw std::invalid_argument("no criterion " + std::to_string(id));
  CriterionResult r{id, it->second.name, Status::Fail, ""};
  try {
    r.detail = it->second.run();
    r.status = Status::Pass;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const ReproOptions& opt) {
  sphere_pool().clear();
  std::vector<CriterionResult> out;
  // the bound suite examines what the other criteria produced
  for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 11, 13}) out.push_back(run_criterion(id, opt));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string render_line(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " " + to_string(r.status) + " " + r.name + ": " + r.detail;
}

}  // namespace mfaces
