#include "mfaces/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mfaces {

namespace {

void check_label(int label) {
  if (label < 1 || label > kMaxLabel) {
    throw std::invalid_argument("vertex label " + std::to_string(label) +
                                " outside [1, " + std::to_string(kMaxLabel) + "]");
  }
}

using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> labels) {
  for (int v : labels) insert(v);
}

VertexSet VertexSet::from_labels(std::span<const int> labels) {
  VertexSet s;
  for (int v : labels) s.insert(v);
  return s;
}

VertexSet VertexSet::range(int first, int last) {
  VertexSet s;
  for (int v = first; v <= last; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int label) {
  check_label(label);
  words_[(label - 1) / 64] |= std::uint64_t{1} << ((label - 1) % 64);
}

void VertexSet::erase(int label) {
  if (label < 1 || label > kMaxLabel) return;
  words_[(label - 1) / 64] &= ~(std::uint64_t{1} << ((label - 1) % 64));
}

bool VertexSet::contains(int label) const {
  if (label < 1 || label > kMaxLabel) return false;
  return (words_[(label - 1) / 64] >> ((label - 1) % 64)) & 1U;
}

int VertexSet::min() const {
  if (words_[0] != 0) return std::countr_zero(words_[0]) + 1;
  if (words_[1] != 0) return 64 + std::countr_zero(words_[1]) + 1;
  return 0;
}

int VertexSet::max() const {
  if (words_[1] != 0) return 128 - std::countl_zero(words_[1]);
  if (words_[0] != 0) return 64 - std::countl_zero(words_[0]);
  return 0;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::vector<VertexSet> subsets_of_size(const VertexSet& s, int k) {
  std::vector<VertexSet> out;
  const auto labels = s.labels();
  const int n = static_cast<int>(labels.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet sub;
    for (int i : idx) sub.insert(labels[i]);
    out.push_back(sub);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

SimplicialComplex SimplicialComplex::build(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  std::vector<VertexSet> kept;
  kept.reserve(facets.size());
  FaceSet seen;
  for (const auto& f : facets) {
    if (seen.contains(f)) continue;
    bool dominated = false;
    for (const auto& g : kept) {
      if (g.size() > f.size() && f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(f);
      seen.insert(f);
    }
  }
  std::sort(kept.begin(), kept.end(), lex_less);

  SimplicialComplex k;
  k.facets_ = std::move(kept);
  int max_size = -1;
  for (const auto& f : k.facets_) {
    k.vertices_ = k.vertices_ | f;
    max_size = std::max(max_size, f.size());
  }
  k.dim_ = k.facets_.empty() ? -2 : max_size - 1;
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets) {
  if (facets.empty()) throw std::invalid_argument("empty complex not supported");
  for (const auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("facets must be nonempty");
  }
  return build(std::move(facets));
}

SimplicialComplex SimplicialComplex::empty_face() { return build({VertexSet{}}); }

SimplicialComplex SimplicialComplex::simplex(const VertexSet& vertices) {
  return build({vertices});
}

SimplicialComplex SimplicialComplex::simplex_boundary(const VertexSet& vertices) {
  if (vertices.empty()) return void_complex();
  return build(subsets_of_size(vertices, vertices.size() - 1));
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return f.size() == dim_ + 1; });
}

bool SimplicialComplex::is_face(const VertexSet& f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& g) { return f.subset_of(g); });
}

bool SimplicialComplex::has_facet(const VertexSet& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f, lex_less);
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
  if (is_void()) return {};
  std::vector<FaceSet> sets(dim_ + 2);
  for (const auto& f : facets_) {
    const auto labels = f.labels();
    const int s = static_cast<int>(labels.size());
    for (std::uint32_t mask = 0; mask < (1U << s); ++mask) {
      VertexSet sub;
      for (int i = 0; i < s; ++i) {
        if ((mask >> i) & 1U) sub.insert(labels[i]);
      }
      sets[sub.size()].insert(sub);
    }
  }
  std::vector<std::vector<VertexSet>> out(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    out[s].assign(sets[s].begin(), sets[s].end());
    std::sort(out[s].begin(), out[s].end(), lex_less);
  }
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int s) const {
  if (is_void() || s < 0 || s > dim_ + 1) return {};
  FaceSet set;
  for (const auto& f : facets_) {
    for (const auto& sub : subsets_of_size(f, s)) set.insert(sub);
  }
  std::vector<VertexSet> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// ---------------------------------------------------------------------------

SimplicialComplex link(const SimplicialComplex& k, const VertexSet& face) {
  if (face.empty()) return k;
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    if (face.subset_of(f)) out.push_back(f - face);
  }
  if (out.empty()) throw std::invalid_argument("link: " + face.to_string() + " is not a face");
  if (out.size() == 1 && out.front().empty()) return SimplicialComplex::empty_face();
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex star(const SimplicialComplex& k, const VertexSet& face) {
  if (face.empty()) return k;
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    if (face.subset_of(f)) out.push_back(f);
  }
  if (out.empty()) throw std::invalid_argument("star: " + face.to_string() + " is not a face");
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices().intersects(b.vertices())) {
    throw std::invalid_argument("join: vertex sets overlap");
  }
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
  std::vector<VertexSet> out;
  out.reserve(a.facets().size() * b.facets().size());
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) out.push_back(f | g);
  }
  if (out.size() == 1 && out.front().empty()) return SimplicialComplex::empty_face();
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& k, int apex) {
  return join(k, SimplicialComplex::simplex(VertexSet{apex}));
}

SimplicialComplex induced(const SimplicialComplex& k, const VertexSet& w) {
  if (k.is_void()) return k;
  std::vector<VertexSet> out;
  bool any_nonempty = false;
  for (const auto& f : k.facets()) {
    const VertexSet g = f & w;
    if (!g.empty()) {
      out.push_back(g);
      any_nonempty = true;
    }
  }
  if (!any_nonempty) return SimplicialComplex::empty_face();
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
  if (k.is_void()) return k;
  if (dim < 0) return SimplicialComplex::empty_face();
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    if (f.size() <= dim + 1) {
      out.push_back(f);
    } else {
      auto subs = subsets_of_size(f, dim + 1);
      out.insert(out.end(), subs.begin(), subs.end());
    }
  }
  return SimplicialComplex::from_facets(std::move(out));
}

std::vector<VertexSet> missing_faces(const SimplicialComplex& k) {
  std::vector<VertexSet> out;
  if (k.is_void()) return out;
  const auto by_size = k.faces_by_size();
  std::vector<FaceSet> sets;
  for (const auto& group : by_size) sets.emplace_back(group.begin(), group.end());
  const auto vertices = k.vertices().labels();
  const int top = k.dim() + 2;  // largest possible missing face size
  for (int s = 2; s <= top; ++s) {
    std::vector<VertexSet> found;
    for (const auto& g : by_size[s - 1]) {
      const int gmax = g.max();
      for (int v : vertices) {
        if (v <= gmax) continue;
        const VertexSet f = g.with(v);
        if (s < static_cast<int>(sets.size()) && sets[s].contains(f)) continue;
        bool all_faces = true;
        f.for_each([&](int u) {
          if (all_faces && u != v && !sets[s - 1].contains(f.without(u))) all_faces = false;
        });
        if (all_faces) found.push_back(f);
      }
    }
    std::sort(found.begin(), found.end(), lex_less);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

SimplicialComplex from_missing_faces(const VertexSet& vertices,
                                     const std::vector<VertexSet>& missing) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex set");
  const auto labels = vertices.labels();
  std::map<int, std::vector<VertexSet>> by_vertex;
  for (const auto& m : missing) {
    if (!m.subset_of(vertices)) throw std::invalid_argument("missing face outside vertex set");
    m.for_each([&](int v) { by_vertex[v].push_back(m); });
  }
  auto blocked = [&](const VertexSet& s, int v) {
    const auto it = by_vertex.find(v);
    if (it == by_vertex.end()) return false;
    const VertexSet sv = s.with(v);
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const VertexSet& m) { return m.subset_of(sv); });
  };

  std::vector<VertexSet> facets;
  // depth-first over faces in increasing label order; a face is kept when no
  // vertex at all can be added to it
  std::function<void(const VertexSet&, std::size_t)> visit = [&](const VertexSet& s,
                                                                 std::size_t next) {
    bool maximal = true;
    for (int v : labels) {
      if (!s.contains(v) && !blocked(s, v)) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets.push_back(s);
    for (std::size_t i = next; i < labels.size(); ++i) {
      if (!blocked(s, labels[i])) visit(s.with(labels[i]), i + 1);
    }
  };
  visit(VertexSet{}, 0);
  return SimplicialComplex::from_facets(std::move(facets));
}

bool is_neighborly_on(const SimplicialComplex& k, int order, const VertexSet& ground) {
  if (!(k.vertices() == ground)) return false;
  if (order <= 1) return true;
  const auto faces = k.faces_of_size(order);
  const int n = ground.size();
  // C(n, order) without overflow concerns at desk scale
  long double c = 1;
  for (int i = 0; i < order; ++i) c = c * (n - i) / (i + 1);
  return static_cast<long double>(faces.size()) == c;
}

bool induced_on_skeleton(const SimplicialComplex& b, int dim, const SimplicialComplex& s) {
  for (const auto& m : missing_faces(b)) {
    if (m.size() < dim + 2) continue;
    if (s.is_face(m)) return false;
    bool all_faces = true;
    m.for_each([&](int v) {
      if (all_faces && !s.is_face(m.without(v))) all_faces = false;
    });
    if (!all_faces) return false;
  }
  return true;
}

BallDecomposition ball_decomposition(const SimplicialComplex& b) {
  if (b.is_void() || !b.is_pure()) {
    throw std::invalid_argument("not a pseudomanifold with boundary: input is not pure");
  }
  std::unordered_map<VertexSet, int, VertexSetHash> ridge_count;
  for (const auto& f : b.facets()) {
    f.for_each([&](int v) { ++ridge_count[f.without(v)]; });
  }
  std::vector<VertexSet> free_ridges;
  for (const auto& [r, c] : ridge_count) {
    if (c > 2) {
      throw std::invalid_argument("not a pseudomanifold with boundary: ridge " + r.to_string() +
                                  " lies in " + std::to_string(c) + " facets");
    }
    if (c == 1) free_ridges.push_back(r);
  }

  BallDecomposition out;
  out.ball = b;
  if (!free_ridges.empty()) {
    if (free_ridges.size() == 1 && free_ridges.front().empty()) {
      out.boundary = SimplicialComplex::empty_face();
    } else {
      out.boundary = SimplicialComplex::from_facets(std::move(free_ridges));
    }
  }
  for (const auto& group : b.faces_by_size()) {
    for (const auto& f : group) {
      if (!out.boundary.is_face(f)) out.interior_faces.push_back(f);
    }
  }
  for (const auto& f : out.interior_faces) {
    bool minimal = true;
    f.for_each([&](int v) {
      if (minimal && !out.boundary.is_face(f.without(v))) minimal = false;
    });
    if (minimal) out.minimal_interior_faces.push_back(f);
  }
  return out;
}

SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::vector<std::pair<int, int>>& map) {
  if (k.is_void()) return k;
  std::unordered_map<int, int> m(map.begin(), map.end());
  std::vector<VertexSet> out;
  for (const auto& f : k.facets()) {
    VertexSet g;
    f.for_each([&](int v) {
      const auto it = m.find(v);
      g.insert(it == m.end() ? v : it->second);
    });
    out.push_back(g);
  }
  if (out.size() == 1 && out.front().empty()) return SimplicialComplex::empty_face();
  auto r = SimplicialComplex::from_facets(std::move(out));
  if (r.num_facets() != k.num_facets()) throw std::invalid_argument("relabel: map is not injective");
  return r;
}

std::string to_string(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    if (i) os << ",";
    os << k.facets()[i].to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace mfaces
