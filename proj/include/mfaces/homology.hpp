// Reduced homology, sphere recognition and non-polytopality certificates.

#ifndef MFACES_HOMOLOGY_HPP
#define MFACES_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfaces/complex.hpp"

namespace mfaces {

enum class Field { GF2, Rational };

/// Reduced Betti numbers b_0 .. b_{dim}. Empty for the void complex; {1}
/// at index -1 is not stored, so {∅} yields an empty vector as well.
std::vector<std::int64_t> betti(const SimplicialComplex& k, Field field = Field::GF2);

/// Rank of the boundary map from faces of size s to faces of size s-1.
std::int64_t boundary_rank(const SimplicialComplex& k, int s, Field field);

enum class SphereLevel { Quick, Full };

struct SphereCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Quick: pure, every ridge in exactly two facets, facet-ridge connected,
/// sphere Euler characteristic. Full: additionally GF(2) homology of K and
/// of the link of every face is that of a sphere of the right dimension.
SphereCheck verify_sphere(const SimplicialComplex& k, SphereLevel level = SphereLevel::Quick);

enum class Verdict { NotPolytopal, Inconclusive };

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string rule;  // empty when inconclusive
  int witness_vertex = 0;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
  int k = 0;
  int n = 0;
  int d = 0;
  std::string reason;
};

/// Rules, tried in order:
///   neighborly_link_mk          d = 2k, neighborly, n >= 2k+2, some vertex
///                               link has m_k != C(n-k-3, k-1)
///   single_missing_face_link_mk d = 2k, exactly one missing (k-1)-face F,
///                               some v in F has m_k(lk v) != C(n-k-3, k-1) - 1
///   link_missing_faces_low      d in {2k, 2k+1}, neighborly, some vertex link
///                               has all missing faces of dimension k-1
/// The witness is the smallest vertex violating the rule. Throws
/// std::invalid_argument if K fails the quick sphere check.
Certificate nonpolytopality_certificate(const SimplicialComplex& k);

std::string to_string(Verdict v);
std::string render(const Certificate& c);

enum class StackCheck { Consistent, Violated, Unchecked };

struct LinkCheck {
  int vertex = 0;
  bool neighborly_ok = false;
  StackCheck stacked = StackCheck::Unchecked;
  int stacked_degree = -1;  // -1 when none below the middle
  std::int64_t observed = 0;  // m_{t+1}(lk v) in the odd middle case
  std::int64_t expected = 0;  // g_t(lk v)
};

struct LinkReport {
  int d = 0;
  int target_neighborliness = 0;  // floor(d/2) - 1
  int target_stackedness = 0;     // ceil(d/2) - 1
  std::vector<LinkCheck> links;
  bool all_pass() const;
};

/// Per-vertex test of the neighborliness and stackedness every vertex link
/// of a neighborly polytope has.
LinkReport vertex_link_check(const SimplicialComplex& k);

std::string to_string(StackCheck s);

}  // namespace mfaces

#endif  // MFACES_HOMOLOGY_HPP
