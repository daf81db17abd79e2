// Constructions of spheres and balls, and the moves that transform them.

#ifndef MFACES_GENERATORS_HPP
#define MFACES_GENERATORS_HPP

#include <vector>

#include "mfaces/complex.hpp"

namespace mfaces {

/// Boundary of the cyclic d-polytope on [n], via Gale evenness.
SimplicialComplex cyclic_boundary(int d, int n);

/// Facets {i1, i1+1, ..., ik, ik+1} of the cyclic 2k-polytope with
/// a <= i1, ik+1 <= b and i_{j+1} >= i_j + 2.
SimplicialComplex ball_B(int two_k, int a, int b);

/// Facets {3, 4, ..., 2k-2, 2k-3+j, 2k-2+j} for 2 <= j <= i. Void for i = 1.
SimplicialComplex squeezed_ball_C(int i, int k);

/// (1n * B(2k, [2, n-1])) union ({1, 2, n-1, n} * t).
SimplicialComplex ball_D(int k, int n, const SimplicialComplex& t);
SimplicialComplex ball_D(int k, int n, int i);

struct FlipMove {
  VertexSet a;  // face whose star is replaced
  VertexSet b;  // vertex set of its link
};

/// The move on the star of `a`, with b = V(lk a).
FlipMove flip_move(const SimplicialComplex& k, const VertexSet& a);

/// Replaces a * boundary(b) by boundary(a) * b. Throws std::invalid_argument
/// when |a| + |b| != d + 1 or the subcomplex on a ∪ b is not a * boundary(b).
SimplicialComplex bistellar_flip(const SimplicialComplex& k, const FlipMove& move);

/// Delta_1 = boundary C(5, n), and Delta_i from Delta_{i-1} by the flip on
/// the star of {1, i+1, n}, for i <= n-6. Each member is checked. With
/// `extra`, appends the flip on {1, n-4, n} and then the flip on {1, n};
/// these two are only checked to be spheres.
std::vector<SimplicialComplex> delta_sequence(int n, bool extra = false);

/// Missing 3-faces {1, i+1, j, n}, i+3 <= j <= n-2, lost from Delta_{i-1} to Delta_i.
std::vector<VertexSet> delta_lost_faces(int n, int i);

/// The 2k-dimensional analogue: flips on the stars of
/// {1, 3, ..., 2k-3} ∪ {2k-3+i, n}, i = 2 .. n-2k-2. Every member is checked
/// for neighborliness, its m_{k+1}, and equality with boundary of ball_D.
std::vector<SimplicialComplex> delta_sequence_2k(int k, int n);

struct ShellingRecord {
  std::vector<VertexSet> facets;
  std::vector<VertexSet> restriction_faces;
};

/// Checks that the order is a shelling and returns the restriction faces.
ShellingRecord verify_shelling(const std::vector<VertexSet>& facets_in_order);

/// Replaces the ball b inside k by boundary(b) * new_vertex.
SimplicialComplex sew(const SimplicialComplex& k, const SimplicialComplex& b, int new_vertex);

/// Subcomplex generated by the facets of g that are not facets of d.
SimplicialComplex complement_ball(const SimplicialComplex& g, const SimplicialComplex& d);

/// The shelled 4-ball with facets {1, j, .., j+3} (j = 2..n-4) followed by
/// {j, .., j+3, n} (j = 2..k), in shelling order.
std::vector<VertexSet> ball_Bk_order(int n, int k);
SimplicialComplex ball_Bk(int n, int k);

/// sew(Delta_i, B_k, n+1).
SimplicialComplex gamma(int n, int i, int k);
SimplicialComplex gamma_from(const SimplicialComplex& delta_i, int n, int k);

SimplicialComplex gs8();
SimplicialComplex p042();
SimplicialComplex octahedron();

/// Stacked (d-1)-sphere on [n]: the boundary of the simplex on [d+1], then
/// each new vertex stacked onto a facet containing the previous one.
SimplicialComplex stacked_sphere(int d, int n);

/// A 2-sphere with n vertices and m2 missing triangles. Throws
/// std::invalid_argument for inadmissible pairs.
SimplicialComplex realize_2sphere(int n, int m2);

}  // namespace mfaces

#endif  // MFACES_GENERATORS_HPP
