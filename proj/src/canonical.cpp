#include "mfaces/canonical.hpp"

#include <algorithm>
#include <map>

namespace mfaces {

namespace {

using Colouring = std::vector<int>;
using FacetList = std::vector<std::vector<int>>;

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> facets;      // vertex indices
  std::vector<std::vector<int>> incidences;  // facet indices per vertex
};

int num_cells(const Colouring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Equitable refinement. Colours stay a dense range 0..cells-1 and new
// colours are ranked by (old colour, signature), so the result depends only
// on the isomorphism class of (complex, colouring).
Colouring refine(const Graph& g, Colouring c) {
  int cells = num_cells(c);
  while (true) {
    std::vector<std::pair<int, std::vector<std::vector<int>>>> keys(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::vector<int>> sig;
      sig.reserve(g.incidences[v].size());
      for (int f : g.incidences[v]) {
        std::vector<int> cols;
        cols.reserve(g.facets[f].size());
        for (int u : g.facets[f]) cols.push_back(c[u]);
        std::sort(cols.begin(), cols.end());
        sig.push_back(std::move(cols));
      }
      std::sort(sig.begin(), sig.end());
      keys[v] = {c[v], std::move(sig)};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colouring next(g.n);
    for (int v = 0; v < g.n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                 sorted.begin());
    }
    const int next_cells = static_cast<int>(sorted.size());
    c = std::move(next);
    if (next_cells == cells) return c;
    cells = next_cells;
  }
}

FacetList relabelled(const Graph& g, const Colouring& c) {
  FacetList out;
  out.reserve(g.facets.size());
  for (const auto& f : g.facets) {
    std::vector<int> r;
    r.reserve(f.size());
    for (int u : f) r.push_back(c[u] + 1);
    std::sort(r.begin(), r.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void search(const Graph& g, const Colouring& c, FacetList& best, bool& have_best) {
  const int cells = num_cells(c);
  if (cells == g.n) {
    FacetList cand = relabelled(g, c);
    if (!have_best || cand < best) {
      best = std::move(cand);
      have_best = true;
    }
    return;
  }
  std::vector<int> cell_size(cells, 0);
  for (int col : c) ++cell_size[col];
  int target = -1;
  for (int col = 0; col < cells; ++col) {
    if (cell_size[col] > 1 && (target < 0 || cell_size[col] < cell_size[target])) target = col;
  }
  for (int v = 0; v < g.n; ++v) {
    if (c[v] != target) continue;
    Colouring ind = c;
    for (int u = 0; u < g.n; ++u) {
      if (u != v && c[u] >= target) ++ind[u];
    }
    search(g, refine(g, ind), best, have_best);
  }
}

}  // namespace

std::vector<std::vector<int>> canonical_form(const SimplicialComplex& k) {
  Graph g;
  const auto labels = k.vertices().labels();
  g.n = static_cast<int>(labels.size());
  std::map<int, int> index;
  for (int i = 0; i < g.n; ++i) index[labels[i]] = i;
  g.incidences.resize(g.n);
  for (const auto& f : k.facets()) {
    std::vector<int> idx;
    f.for_each([&](int v) { idx.push_back(index[v]); });
    for (int u : idx) g.incidences[u].push_back(static_cast<int>(g.facets.size()));
    g.facets.push_back(std::move(idx));
  }
  if (g.n == 0) return k.is_void() ? FacetList{} : FacetList{{}};
  FacetList best;
  bool have_best = false;
  search(g, refine(g, Colouring(g.n, 0)), best, have_best);
  return best;
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets() ||
      a.dim() != b.dim()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mfaces
