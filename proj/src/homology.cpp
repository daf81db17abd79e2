#include "mfaces/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfaces/vectors.hpp"

namespace mfaces {

namespace {

using boost::multiprecision::cpp_int;
using Index = std::unordered_map<VertexSet, int, VertexSetHash>;

Index index_of(const std::vector<VertexSet>& faces) {
  Index idx;
  idx.reserve(faces.size() * 2);
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) idx.emplace(faces[i], i);
  return idx;
}

// Column reduction keyed by the largest column index of each row.
std::int64_t rank_gf2(const std::vector<VertexSet>& rows_faces, const Index& cols) {
  std::unordered_map<int, std::vector<int>> pivots;
  std::int64_t rank = 0;
  std::vector<int> scratch;
  for (const auto& face : rows_faces) {
    std::vector<int> row;
    face.for_each([&](int v) { row.push_back(cols.at(face.without(v))); });
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
      const auto it = pivots.find(row.back());
      if (it == pivots.end()) break;
      scratch.clear();
      std::set_symmetric_difference(row.begin(), row.end(), it->second.begin(),
                                    it->second.end(), std::back_inserter(scratch));
      row.swap(scratch);
    }
    if (!row.empty()) {
      const int low = row.back();
      pivots.emplace(low, std::move(row));
      ++rank;
    }
  }
  return rank;
}

using QRow = std::vector<std::pair<int, cpp_int>>;  // sorted by column

void reduce_content(QRow& row) {
  cpp_int g = 0;
  for (const auto& [c, x] : row) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& entry : row) entry.second /= g;
  }
}

std::int64_t rank_rational(const std::vector<VertexSet>& rows_faces, const Index& cols) {
  std::unordered_map<int, QRow> pivots;
  std::int64_t rank = 0;
  for (const auto& face : rows_faces) {
    QRow row;
    int pos = 0;
    face.for_each([&](int v) {
      row.emplace_back(cols.at(face.without(v)), pos % 2 == 0 ? 1 : -1);
      ++pos;
    });
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
      const auto it = pivots.find(row.back().first);
      if (it == pivots.end()) break;
      const cpp_int a = it->second.back().second;  // pivot coefficient
      const cpp_int b = row.back().second;
      // row <- a*row - b*pivot, which cancels the last entry
      QRow merged;
      std::size_t i = 0;
      std::size_t j = 0;
      const QRow& p = it->second;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          merged.emplace_back(row[i].first, a * row[i].second);
          ++i;
        } else if (i == row.size() || p[j].first < row[i].first) {
          merged.emplace_back(p[j].first, -b * p[j].second);
          ++j;
        } else {
          cpp_int x = a * row[i].second - b * p[j].second;
          if (x != 0) merged.emplace_back(row[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      reduce_content(merged);
      row.swap(merged);
    }
    if (!row.empty()) {
      const int low = row.back().first;
      pivots.emplace(low, std::move(row));
      ++rank;
    }
  }
  return rank;
}

std::int64_t rank_between(const std::vector<std::vector<VertexSet>>& by_size, int s, Field field) {
  if (s < 1 || s >= static_cast<int>(by_size.size())) return 0;
  const Index cols = index_of(by_size[s - 1]);
  return field == Field::GF2 ? rank_gf2(by_size[s], cols) : rank_rational(by_size[s], cols);
}

std::vector<std::int64_t> betti_from_faces(const std::vector<std::vector<VertexSet>>& by_size,
                                           Field field) {
  const int top = static_cast<int>(by_size.size()) - 1;  // largest face size
  std::vector<std::int64_t> ranks(top + 2, 0);
  for (int s = 1; s <= top; ++s) ranks[s] = rank_between(by_size, s, field);
  std::vector<std::int64_t> b;
  for (int j = 0; j + 1 <= top; ++j) {
    const int s = j + 1;
    b.push_back(static_cast<std::int64_t>(by_size[s].size()) - ranks[s] - ranks[s + 1]);
  }
  return b;
}

bool is_sphere_betti(const std::vector<std::int64_t>& b, int dim) {
  if (static_cast<int>(b.size()) != dim + 1) return false;
  for (int i = 0; i < dim; ++i) {
    if (b[i] != 0) return false;
  }
  return b[dim] == 1;
}

}  // namespace

std::vector<std::int64_t> betti(const SimplicialComplex& k, Field field) {
  if (k.is_void()) return {};
  return betti_from_faces(k.faces_by_size(), field);
}

std::int64_t boundary_rank(const SimplicialComplex& k, int s, Field field) {
  if (k.is_void()) return 0;
  return rank_between(k.faces_by_size(), s, field);
}

SphereCheck verify_sphere(const SimplicialComplex& k, SphereLevel level) {
  auto fail = [](std::string reason) { return SphereCheck{false, std::move(reason)}; };
  if (k.is_void()) return fail("void complex");
  if (k.dim() == -1) return SphereCheck{true, ""};
  if (!k.is_pure()) return fail("not pure");

  const auto& facets = k.facets();
  std::unordered_map<VertexSet, std::vector<int>, VertexSetHash> ridges;
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    facets[i].for_each([&](int v) { ridges[facets[i].without(v)].push_back(i); });
  }
  std::vector<int> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [r, owners] : ridges) {
    if (owners.size() != 2) {
      return fail("ridge " + r.to_string() + " lies in " + std::to_string(owners.size()) +
                  " facets");
    }
    parent[find(owners[0])] = find(owners[1]);
  }
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    if (find(i) != find(0)) return fail("not strongly connected");
  }

  const auto by_size = k.faces_by_size();
  std::int64_t chi = 0;
  for (int s = 0; s < static_cast<int>(by_size.size()); ++s) {
    const std::int64_t fs = static_cast<std::int64_t>(by_size[s].size());
    chi += (s % 2 == 1) ? fs : -fs;  // dimension s-1
  }
  const std::int64_t expected = (k.dim() % 2 == 0) ? 1 : -1;
  if (chi != expected) {
    return fail("reduced Euler characteristic " + std::to_string(chi) + ", expected " +
                std::to_string(expected));
  }
  if (level == SphereLevel::Quick) return SphereCheck{true, ""};

  if (!is_sphere_betti(betti_from_faces(by_size, Field::GF2), k.dim())) {
    return fail("homology is not that of a sphere");
  }
  const int d = k.dim() + 1;
  for (int s = 1; s <= d - 2; ++s) {
    for (const auto& face : by_size[s]) {
      const SimplicialComplex lk = link(k, face);
      const int want = d - 1 - s;
      if (lk.dim() != want || !is_sphere_betti(betti(lk, Field::GF2), want)) {
        return fail("link of " + face.to_string() + " is not a homology sphere");
      }
    }
  }
  return SphereCheck{true, ""};
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t link_mk(const SimplicialComplex& k, int v, int idx) {
  const Counts m = m_vector(link(k, VertexSet{v}));
  return (idx >= 1 && idx - 1 < static_cast<int>(m.size())) ? m[idx - 1] : 0;
}

}  // namespace

Certificate nonpolytopality_certificate(const SimplicialComplex& k) {
  const SphereCheck check = verify_sphere(k, SphereLevel::Quick);
  if (!check) throw std::invalid_argument("not a sphere: " + check.reason);

  Certificate c;
  c.d = k.dim() + 1;
  c.n = k.num_vertices();
  c.k = c.d / 2;
  const int kk = c.k;
  const int n = c.n;
  const Counts f = f_vector(k);
  const int nb = neighborliness(f, n);
  const auto vertices = k.vertices().labels();

  if (c.d % 2 == 0 && kk >= 2 && n >= 2 * kk + 2) {
    const std::int64_t expected = binom(n - kk - 3, kk - 1);
    if (nb >= kk) {
      for (int v : vertices) {
        const std::int64_t observed = link_mk(k, v, kk);
        if (observed != expected) {
          c.verdict = Verdict::NotPolytopal;
          c.rule = "neighborly_link_mk";
          c.witness_vertex = v;
          c.observed = observed;
          c.expected = expected;
          c.reason = "neighborly; m_" + std::to_string(kk) + "(lk " + std::to_string(v) +
                     ") = " + std::to_string(observed) + " != C(" +
                     std::to_string(n - kk - 3) + "," + std::to_string(kk - 1) + ") = " +
                     std::to_string(expected);
          return c;
        }
      }
    } else if (nb >= kk - 1 && f[kk] == binom(n, kk) - 1) {
      VertexSet missing;
      for (const auto& m : missing_faces(k)) {
        if (m.size() == kk) missing = m;
      }
      for (int v : missing.labels()) {
        const std::int64_t observed = link_mk(k, v, kk);
        if (observed != expected - 1) {
          c.verdict = Verdict::NotPolytopal;
          c.rule = "single_missing_face_link_mk";
          c.witness_vertex = v;
          c.observed = observed;
          c.expected = expected - 1;
          c.reason = "only missing face of size " + std::to_string(kk) + " is " +
                     missing.to_string() + "; m_" + std::to_string(kk) + "(lk " +
                     std::to_string(v) + ") = " + std::to_string(observed) + " != " +
                     std::to_string(expected - 1);
          return c;
        }
      }
    }
  }

  if (kk >= 2 && nb >= kk) {
    for (int v : vertices) {
      const auto mf = missing_faces(link(k, VertexSet{v}));
      const bool all_low = !mf.empty() && std::all_of(mf.begin(), mf.end(), [&](const VertexSet& m) {
        return m.size() == kk;
      });
      if (all_low) {
        c.verdict = Verdict::NotPolytopal;
        c.rule = "link_missing_faces_low";
        c.witness_vertex = v;
        c.observed = kk - 1;
        c.expected = kk;
        c.reason = "neighborly; every missing face of lk " + std::to_string(v) +
                   " has dimension " + std::to_string(kk - 1) + ", a missing face of dimension >= " +
                   std::to_string(kk) + " is required";
        return c;
      }
    }
  }

  c.reason = "no rule fired (neighborliness " + std::to_string(nb) + ", d " +
             std::to_string(c.d) + ", n " + std::to_string(n) + ")";
  return c;
}

std::string to_string(Verdict v) {
  return v == Verdict::NotPolytopal ? "NOT_POLYTOPAL" : "INCONCLUSIVE";
}

std::string render(const Certificate& c) {
  std::ostringstream os;
  os << "verdict=" << to_string(c.verdict) << "\n";
  os << "rule=" << (c.rule.empty() ? "none" : c.rule) << "\n";
  os << "witness_vertex=" << c.witness_vertex << "\n";
  os << "observed=" << c.observed << "\n";
  os << "expected=" << c.expected << "\n";
  os << "k=" << c.k << "\n";
  os << "n=" << c.n << "\n";
  os << "d=" << c.d << "\n";
  os << "reason=" << c.reason << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

bool LinkReport::all_pass() const {
  return std::all_of(links.begin(), links.end(), [](const LinkCheck& l) {
    return l.neighborly_ok && l.stacked != StackCheck::Violated;
  });
}

LinkReport vertex_link_check(const SimplicialComplex& k) {
  LinkReport r;
  r.d = k.dim() + 1;
  r.target_neighborliness = r.d / 2 - 1;
  r.target_stackedness = (r.d + 1) / 2 - 1;
  const VertexSet all = k.vertices();
  for (int v : all.labels()) {
    LinkCheck lc;
    lc.vertex = v;
    const SimplicialComplex lk = link(k, VertexSet{v});
    const FaceProfile p = face_profile(lk, false);
    lc.neighborly_ok = lk.vertices() == all.without(v) &&
                       p.neighborliness >= r.target_neighborliness;
    std::optional<int> degree;
    bool inconsistent = false;
    try {
      degree = sphere_stacked_degree(p);
    } catch (const std::runtime_error&) {
      inconsistent = true;
    }
    if (degree) lc.stacked_degree = *degree;
    const int t = r.target_stackedness;
    if (inconsistent) {
      lc.stacked = StackCheck::Violated;
    } else if (degree && *degree <= t) {
      lc.stacked = StackCheck::Consistent;
    } else if (p.d % 2 == 1 && t == (p.d - 1) / 2) {
      lc.observed = p.m_at(t + 1);
      lc.expected = p.g_at(t);
      lc.stacked = lc.observed == lc.expected ? StackCheck::Consistent : StackCheck::Violated;
    } else if (t <= p.d / 2 - 1) {
      lc.stacked = StackCheck::Violated;
    } else {
      lc.stacked = StackCheck::Unchecked;
    }
    r.links.push_back(lc);
  }
  return r;
}

std::string to_string(StackCheck s) {
  switch (s) {
    case StackCheck::Consistent:
      return "consistent";
    case StackCheck::Violated:
      return "violated";
    case StackCheck::Unchecked:
      return "unchecked";
  }
  return "unchecked";
}

}  // namespace mfaces
