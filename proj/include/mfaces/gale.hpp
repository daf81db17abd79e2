// Combinatorial Gale diagrams of simplicial d-polytopes with d+3 vertices.
//
// A diagram is a set of labelled points on a circle. Angles are integers
// modulo 2*half_turn, so the antipode of angle a is a + half_turn and every
// incidence question is an exact integer comparison.

#ifndef MFACES_GALE_HPP
#define MFACES_GALE_HPP

#include <string>
#include <vector>

#include "mfaces/complex.hpp"

namespace mfaces {

struct GalePoint {
  int angle = 0;
  int label = 0;
};

/// Where the antipode of a slot falls: on a slot, or strictly between slot
/// `index` and the next slot in counter-clockwise order.
struct AntipodePosition {
  bool on_slot = false;
  int index = 0;
};

class GaleCircle {
 public:
  GaleCircle(int half_turn, std::vector<GalePoint> points);

  int half_turn() const { return half_turn_; }
  int full_turn() const { return 2 * half_turn_; }
  const std::vector<GalePoint>& points() const { return points_; }
  int num_points() const { return static_cast<int>(points_.size()); }

  /// Distinct occupied angles in increasing order, and their multiplicities.
  std::vector<int> slots() const;
  std::vector<int> multiplicities() const;
  std::vector<AntipodePosition> antipode_positions() const;

  VertexSet labels() const;
  int angle_of(int label) const;

  /// No point lies exactly opposite another point.
  bool is_simplicial() const;

  std::string to_string() const;

 private:
  int half_turn_;
  std::vector<GalePoint> points_;  // sorted by (angle, label)
};

/// Whether the origin lies in the relative interior of the convex hull of
/// unit vectors at the given angles (circle of 2*half_turn units).
bool origin_in_relint(int half_turn, const std::vector<int>& angles);

/// Boundary complex of the polytope the diagram represents. Throws
/// std::invalid_argument("invalid diagram: ...") if the diagram is not
/// simplicial or the facets do not form a pseudomanifold.
SimplicialComplex faces_from_diagram(const GaleCircle& g);

/// Fewest points (with multiplicity) in any open semicircle.
int min_open_semicircle_count(const GaleCircle& g);

/// Neighborliness of the polytope read off the diagram:
/// min_open_semicircle_count - 1, clamped at 0.
int diagram_neighborliness(const GaleCircle& g);

/// Multiplies every angle and the half turn by `factor`.
GaleCircle refine(const GaleCircle& g, int factor);

/// Moves every point at angle `from` to angle `to`, travelling
/// counter-clockwise when `ccw` is true. Throws std::invalid_argument naming
/// the diameter that would be crossed if the order of diameters changes.
GaleCircle rotate_slot(const GaleCircle& g, int from, int to, bool ccw);

/// Moves the points at angle `from` onto the adjacent slot `to`. Throws
/// std::invalid_argument if a diameter separates the two slots.
GaleCircle merge_slots(const GaleCircle& g, int from, int to);

/// Diagram of the link of the face with the given labels.
GaleCircle remove_points(const GaleCircle& g, const VertexSet& labels);

struct QkConstruction {
  int k = 0;
  GaleCircle diagram;
  SimplicialComplex sphere;
  std::vector<VertexSet> edges;  // e_1 .. e_k
};

/// Label of x_l (or y_l) in the Q_k diagram for k = 2i-1.
int qk_x_label(int l);
int qk_y_label(int l);

/// Double points at the vertices of a regular (2i+1)-gon, k = 2i-1.
GaleCircle qk_diagram(int k);

/// The polytope with the diagram above, its boundary complex, and the
/// sequence of disjoint edges used to seed the sewing family.
QkConstruction build_qk(int k);

}  // namespace mfaces

#endif  // MFACES_GALE_HPP
