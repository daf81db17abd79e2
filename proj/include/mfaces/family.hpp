// Inductive construction of k-neighborly 2k-spheres whose missing faces all
// have dimension k, by repeated sewing along a chain of disjoint edges.

#ifndef MFACES_FAMILY_HPP
#define MFACES_FAMILY_HPP

#include <string>
#include <vector>

#include "mfaces/complex.hpp"

namespace mfaces {

struct FamilyState {
  SimplicialComplex sigma;
  std::vector<VertexSet> edges;  // e_1 .. e_k
  int k = 0;
  int n = 0;
  std::vector<std::string> log;
};

/// The balls built inside the links Gamma_j = lk(e_1 ∪ .. ∪ e_{k-j}).
struct FamilyBalls {
  std::vector<SimplicialComplex> gamma;  // gamma[j] = Gamma_j, j = 0..k
  std::vector<SimplicialComplex> d;      // d[j] = D_j, j = 1..k (d[0] void)
  std::vector<SimplicialComplex> b;      // b[j] = B_j, j = 1..k (b[0] void)
};

/// Throws std::runtime_error naming the failed condition: edges not
/// disjoint, a prefix union not a face, a link that is not a neighborly
/// sphere on the remaining vertices, or a missing face of the wrong
/// dimension. `full` runs the full sphere check on sigma.
void check_family_state(const FamilyState& s, bool full = false);

/// D_1 = e_k * Gamma_0, B_j = Gamma_j \ D_j, D_j = e_{k+1-j} * B_{j-1}, with
/// every neighborliness, stackedness and inducedness property checked.
FamilyBalls family_balls(const FamilyState& s);

/// Relabels so e_j = {n+1-2j, n+2-2j}, sews n+1 onto D_k, and shifts the
/// edges to e'_j = {n+2-2j, n+3-2j}. The result is re-checked.
FamilyState family_step(const FamilyState& s, bool full_sphere_check = false);

/// Boundary of Q_k (odd k) with its edge sequence.
FamilyState family_seed_qk(int k);
/// Boundary of the 9-vertex 5-polytope with E = {{1,9},{3,6}}, k = 2.
FamilyState family_seed_p042();

}  // namespace mfaces

#endif  // MFACES_FAMILY_HPP
