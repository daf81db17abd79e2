// Face numbers, missing-face numbers and the inequalities relating them.
//
// Indexing follows the usual conventions shifted to zero-based storage:
//   f[i] = f_{i-1}   (i = 0..d, f[0] = 1)
//   h[j] = h_j       (j = 0..d)
//   g[j] = g_j       (j = 0..floor(d/2))
//   m[i] = m_{i+1}   (i = 0..d-1)
// where d = dim + 1.

#ifndef MFACES_VECTORS_HPP
#define MFACES_VECTORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfaces/complex.hpp"

namespace mfaces {

using Rational = boost::multiprecision::cpp_rational;
using Counts = std::vector<std::int64_t>;

/// C(n, k); zero when k < 0 or k > n.
std::int64_t binom(std::int64_t n, std::int64_t k);

struct FaceProfile {
  int d = 0;
  int n = 0;
  Counts f;
  Counts h;
  Counts g;
  Counts m;
  int neighborliness = 0;
  bool is_flag = false;
  bool is_eulerian = false;

  std::int64_t f_at(int i) const;  // f_i for i >= -1
  std::int64_t h_at(int j) const;
  std::int64_t g_at(int j) const;  // 0 beyond the stored range
  std::int64_t m_at(int i) const;  // m_i for i >= 1; 0 beyond d
};

Counts f_vector(const SimplicialComplex& k);
Counts m_vector(const SimplicialComplex& k);
Counts h_from_f(const Counts& f, int d);
Counts f_from_h(const Counts& h, int d);
Counts g_from_h(const Counts& h, int d);

/// Largest i with f_{i-1} = C(n, i).
int neighborliness(const Counts& f, int n);

bool is_eulerian(const SimplicialComplex& k);

FaceProfile face_profile(const SimplicialComplex& k, bool check_eulerian = true);

/// m^<k> and m_<k> from the k-th Macaulay representation of m.
std::int64_t pseudopower_upper(std::int64_t m, int k);
std::int64_t pseudopower_lower(std::int64_t m, int k);

/// h is palindromic.
bool dehn_sommerville_check(const FaceProfile& p);

/// Least i <= floor(d/2) - 1 with g_{i+1} = 0, for a sphere profile. Throws
/// std::runtime_error if m_{d-i} = g_i fails for that i.
std::optional<int> sphere_stacked_degree(const FaceProfile& p);

/// For odd d and i = (d-1)/2: whether m_{i+1} = g_i, which every
/// i-stacked (d-1)-sphere satisfies.
bool odd_middle_stacked_consistent(const FaceProfile& p);

bool ball_is_i_stacked(const BallDecomposition& b, int i);
bool ball_exactly_i_stacked(const BallDecomposition& b, int i);

struct BoundReport {
  std::string name;
  bool upper = true;  // bound >= observed when true, bound <= observed otherwise
  Rational value;
  Rational observed;
  Rational slack;
  bool satisfied = false;
};

BoundReport make_bound(std::string name, bool upper, Rational value, Rational observed);

/// Upper bounds on m_k and m_{d-k} in terms of the g-vector. `m` is the
/// observed m-vector (same storage as FaceProfile::m).
std::vector<BoundReport> m_upper_bounds(const Counts& g, int d, const Counts& m);

/// f1 (4 f1 - n^2) / (3n): lower bound on f2 + m2 of a graph's clique complex.
Rational goodman_bound(std::int64_t n, std::int64_t f1);

/// Lower bound on m_k from n, f_{k-1} and f_k.
Rational generalized_mk_bound(int k, std::int64_t n, std::int64_t f_km1, std::int64_t f_k);

Counts cyclic_h_vector(int d, int n);
Counts cyclic_f_vector(int d, int n);

/// Lower bound on m_k for nearly neighborly Eulerian (d-1)-complexes,
/// d in {2k, 2k+1}.
Rational nearly_neighborly_bound(int k, int d, std::int64_t n, std::int64_t f_km1);

/// Strict upper bound on f1 of a flag Eulerian (d-1)-complex, d in {4, 5}.
Rational flag_edge_cap(int d, std::int64_t n);

/// Whether m2 occurs as the number of missing triangles of a 2-sphere with
/// n vertices.
bool two_sphere_m_admissible(std::int64_t n, std::int64_t m2);

/// All bound reports applicable to a profile.
std::vector<BoundReport> all_bounds(const FaceProfile& p);

std::string to_string(const Rational& r);

}  // namespace mfaces

#endif  // MFACES_VECTORS_HPP
