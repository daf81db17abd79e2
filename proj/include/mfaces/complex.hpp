// Abstract simplicial complexes stored by their facets.
//
// Vertex labels are positive integers in [1, kMaxLabel]. A VertexSet is a
// fixed-width bitmask over those labels, so subset tests and unions are a
// couple of word operations. Complexes are immutable values: every
// operation returns a new complex and labels are never renumbered.

#ifndef MFACES_COMPLEX_HPP
#define MFACES_COMPLEX_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mfaces {

inline constexpr int kMaxLabel = 128;

class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> labels);

  static VertexSet from_labels(std::span<const int> labels);
  /// All labels first..last inclusive (empty if last < first).
  static VertexSet range(int first, int last);

  void insert(int label);
  void erase(int label);
  bool contains(int label) const;

  int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  bool empty() const { return (words_[0] | words_[1]) == 0; }

  bool subset_of(const VertexSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 &&
           (words_[1] & ~other.words_[1]) == 0;
  }
  bool intersects(const VertexSet& other) const {
    return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
  }

  VertexSet operator|(const VertexSet& o) const {
    return VertexSet(words_[0] | o.words_[0], words_[1] | o.words_[1]);
  }
  VertexSet operator&(const VertexSet& o) const {
    return VertexSet(words_[0] & o.words_[0], words_[1] & o.words_[1]);
  }
  VertexSet operator-(const VertexSet& o) const {
    return VertexSet(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]);
  }
  VertexSet with(int label) const {
    VertexSet r = *this;
    r.insert(label);
    return r;
  }
  VertexSet without(int label) const {
    VertexSet r = *this;
    r.erase(label);
    return r;
  }

  /// Smallest / largest label; 0 for the empty set.
  int min() const;
  int max() const;

  std::vector<int> labels() const;

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * 64 + b + 1);
        bits &= bits - 1;
      }
    }
  }

  /// "{1,2,5}"
  std::string to_string() const;

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9e3779b97f4a7c15ULL ^ words_[1]);
  }

  // Word order, used for associative containers only. Use lex_less for
  // human-facing ordering.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  VertexSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
  std::array<std::uint64_t, 2> words_{0, 0};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Lexicographic order on the sorted label sequences ({1,2} < {1,2,3} < {1,3}).
bool lex_less(const VertexSet& a, const VertexSet& b);

/// Size first, then lexicographic.
bool size_lex_less(const VertexSet& a, const VertexSet& b);

/// Every k-element subset of `s`.
std::vector<VertexSet> subsets_of_size(const VertexSet& s, int k);

class SimplicialComplex {
 public:
  /// The void complex (no faces at all, not even the empty face).
  SimplicialComplex() = default;

  /// Generated by `facets`; dominated and duplicate sets are dropped.
  /// Throws std::invalid_argument on an empty list or an empty facet.
  static SimplicialComplex from_facets(std::vector<VertexSet> facets);

  static SimplicialComplex void_complex() { return {}; }
  /// {∅}: the (-1)-sphere, e.g. the link of a facet.
  static SimplicialComplex empty_face();
  static SimplicialComplex simplex(const VertexSet& vertices);
  static SimplicialComplex simplex_boundary(const VertexSet& vertices);

  const std::vector<VertexSet>& facets() const { return facets_; }
  const VertexSet& vertices() const { return vertices_; }
  int num_vertices() const { return vertices_.size(); }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  /// -1 for {∅}; -2 for the void complex.
  int dim() const { return dim_; }
  bool is_void() const { return facets_.empty(); }
  bool is_pure() const;

  bool is_face(const VertexSet& f) const;
  bool has_facet(const VertexSet& f) const;

  /// Faces grouped by cardinality: result[s] holds the faces with s
  /// vertices (s = 0 .. dim+1), each group sorted lexicographically.
  std::vector<std::vector<VertexSet>> faces_by_size() const;
  std::vector<VertexSet> faces_of_size(int s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  static SimplicialComplex build(std::vector<VertexSet> facets);

  std::vector<VertexSet> facets_;
  VertexSet vertices_;
  int dim_ = -2;
};

/// Link of a face; link(K, ∅) = K. Throws if `face` is not a face of K.
SimplicialComplex link(const SimplicialComplex& k, const VertexSet& face);
/// Closed star of a face.
SimplicialComplex star(const SimplicialComplex& k, const VertexSet& face);
/// Throws std::invalid_argument on overlapping vertex sets.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k, int apex);
SimplicialComplex induced(const SimplicialComplex& k, const VertexSet& w);
SimplicialComplex skeleton(const SimplicialComplex& k, int dim);

/// Missing faces sorted by size, then lexicographically.
std::vector<VertexSet> missing_faces(const SimplicialComplex& k);

/// The complex on `vertices` whose minimal non-faces are `missing`.
SimplicialComplex from_missing_faces(const VertexSet& vertices,
                                     const std::vector<VertexSet>& missing);

/// True if every k-subset of `ground` is a face and V(K) = ground.
bool is_neighborly_on(const SimplicialComplex& k, int order, const VertexSet& ground);

/// Every missing face of `b` of dimension >= dim+1 is a missing face of `s`.
bool induced_on_skeleton(const SimplicialComplex& b, int dim, const SimplicialComplex& s);

/// A pure complex split into boundary and interior faces. The boundary is
/// generated by the ridges lying in exactly one facet.
struct BallDecomposition {
  SimplicialComplex ball;
  SimplicialComplex boundary;  // void when the ball has no free ridges
  std::vector<VertexSet> interior_faces;
  std::vector<VertexSet> minimal_interior_faces;
};

/// Throws std::invalid_argument ("not a pseudomanifold with boundary") if a
/// ridge lies in three or more facets, or if the input is not pure.
BallDecomposition ball_decomposition(const SimplicialComplex& b);

/// Renames vertices through `map` (old label -> new label); labels absent
/// from the map are kept.
SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::vector<std::pair<int, int>>& map);

std::string to_string(const SimplicialComplex& k);

}  // namespace mfaces

#endif  // MFACES_COMPLEX_HPP
