#include "mfaces/vectors.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mfaces {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t FaceProfile::f_at(int i) const {
  return (i + 1 >= 0 && i + 1 < static_cast<int>(f.size())) ? f[i + 1] : 0;
}
std::int64_t FaceProfile::h_at(int j) const {
  return (j >= 0 && j < static_cast<int>(h.size())) ? h[j] : 0;
}
std::int64_t FaceProfile::g_at(int j) const {
  return (j >= 0 && j < static_cast<int>(g.size())) ? g[j] : 0;
}
std::int64_t FaceProfile::m_at(int i) const {
  return (i >= 1 && i - 1 < static_cast<int>(m.size())) ? m[i - 1] : 0;
}

Counts f_vector(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  const auto faces = k.faces_by_size();
  Counts f;
  for (const auto& group : faces) f.push_back(static_cast<std::int64_t>(group.size()));
  return f;
}

Counts m_vector(const SimplicialComplex& k) {
  const int d = k.dim() + 1;
  Counts m(std::max(d, 0), 0);
  for (const auto& face : missing_faces(k)) {
    const int i = face.size() - 1;
    if (i >= 1 && i <= d) ++m[i - 1];
  }
  return m;
}

Counts h_from_f(const Counts& f, int d) {
  Counts h(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t term = binom(d - i, d - j) * f[i];
      s += ((j - i) % 2 == 0) ? term : -term;
    }
    h[j] = s;
  }
  return h;
}

Counts f_from_h(const Counts& h, int d) {
  Counts f(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) s += binom(d - i, j - i) * h[i];
    f[j] = s;
  }
  return f;
}

Counts g_from_h(const Counts& h, int d) {
  Counts g(d / 2 + 1, 0);
  for (int j = 0; j <= d / 2; ++j) g[j] = h[j] - (j > 0 ? h[j - 1] : 0);
  return g;
}

int neighborliness(const Counts& f, int n) {
  int best = 0;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (f[i] == binom(n, i)) {
      best = i;
    } else {
      break;
    }
  }
  return best;
}

bool is_eulerian(const SimplicialComplex& k) {
  if (k.is_void()) return false;
  const int d = k.dim() + 1;
  // chi[F] accumulates the reduced Euler characteristic of lk F
  std::unordered_map<VertexSet, std::int64_t, VertexSetHash> chi;
  for (const auto& group : k.faces_by_size()) {
    for (const auto& g : group) {
      const auto labels = g.labels();
      const int s = static_cast<int>(labels.size());
      for (std::uint32_t mask = 0; mask < (1U << s); ++mask) {
        VertexSet sub;
        for (int i = 0; i < s; ++i) {
          if ((mask >> i) & 1U) sub.insert(labels[i]);
        }
        chi[sub] += ((s - sub.size() - 1) % 2 == 0) ? 1 : -1;
      }
    }
  }
  for (const auto& [face, value] : chi) {
    const std::int64_t expected = ((d - face.size() - 1) % 2 == 0) ? 1 : -1;
    if (value != expected) return false;
  }
  return true;
}

FaceProfile face_profile(const SimplicialComplex& k, bool check_eulerian) {
  FaceProfile p;
  p.d = k.dim() + 1;
  p.n = k.num_vertices();
  p.f = f_vector(k);
  if (p.d < 0) return p;
  p.h = h_from_f(p.f, p.d);
  p.g = g_from_h(p.h, p.d);
  p.m = m_vector(k);
  p.neighborliness = neighborliness(p.f, p.n);
  p.is_flag = true;
  for (int i = 2; i <= p.d; ++i) {
    if (p.m_at(i) != 0) p.is_flag = false;
  }
  p.is_eulerian = check_eulerian && k.is_pure() && is_eulerian(k);
  return p;
}

namespace {

// k-th Macaulay representation: m = sum C(a_i, i) over i = k down to j.
std::vector<std::pair<std::int64_t, int>> macaulay(std::int64_t m, int k) {
  std::vector<std::pair<std::int64_t, int>> terms;
  for (int i = k; i >= 1 && m > 0; --i) {
    std::int64_t a = i;
    while (binom(a + 1, i) <= m) ++a;
    terms.emplace_back(a, i);
    m -= binom(a, i);
  }
  return terms;
}

}  // namespace

std::int64_t pseudopower_upper(std::int64_t m, int k) {
  if (m < 0 || k < 1) throw std::invalid_argument("pseudopower needs m >= 0, k >= 1");
  std::int64_t r = 0;
  for (const auto& [a, i] : macaulay(m, k)) r += binom(a + 1, i + 1);
  return r;
}

std::int64_t pseudopower_lower(std::int64_t m, int k) {
  if (m < 0 || k < 1) throw std::invalid_argument("pseudopower needs m >= 0, k >= 1");
  std::int64_t r = 0;
  for (const auto& [a, i] : macaulay(m, k)) r += binom(a - 1, i - 1);
  return r;
}

bool dehn_sommerville_check(const FaceProfile& p) {
  for (int i = 0; i <= p.d; ++i) {
    if (p.h_at(i) != p.h_at(p.d - i)) return false;
  }
  return true;
}

std::optional<int> sphere_stacked_degree(const FaceProfile& p) {
  for (int i = 0; i <= p.d / 2 - 1; ++i) {
    if (p.g_at(i + 1) == 0) {
      if (p.m_at(p.d - i) != p.g_at(i)) {
        throw std::runtime_error("stackedness criteria disagree: g_" + std::to_string(i + 1) +
                                 " = 0 but m_" + std::to_string(p.d - i) + " = " +
                                 std::to_string(p.m_at(p.d - i)) + " != g_" +
                                 std::to_string(i) + " = " + std::to_string(p.g_at(i)));
      }
      return i;
    }
  }
  return std::nullopt;
}

bool odd_middle_stacked_consistent(const FaceProfile& p) {
  if (p.d % 2 == 0) throw std::invalid_argument("odd_middle_stacked_consistent needs odd d");
  const int i = (p.d - 1) / 2;
  return p.m_at(i + 1) == p.g_at(i);
}

bool ball_is_i_stacked(const BallDecomposition& b, int i) {
  const int d = b.ball.dim();
  for (const auto& f : b.interior_faces) {
    if (f.size() - 1 <= d - i - 1) return false;
  }
  return true;
}

bool ball_exactly_i_stacked(const BallDecomposition& b, int i) {
  const int d = b.ball.dim();
  if (b.minimal_interior_faces.empty()) return false;
  for (const auto& f : b.minimal_interior_faces) {
    if (f.size() - 1 != d - i) return false;
  }
  return true;
}

BoundReport make_bound(std::string name, bool upper, Rational value, Rational observed) {
  BoundReport r;
  r.name = std::move(name);
  r.upper = upper;
  r.value = value;
  r.observed = observed;
  r.slack = upper ? value - observed : observed - value;
  r.satisfied = r.slack >= 0;
  return r;
}

std::vector<BoundReport> m_upper_bounds(const Counts& g, int d, const Counts& m) {
  if (g.empty() || g[0] != 1) throw std::invalid_argument("malformed g-vector: g_0 must be 1");
  if (static_cast<int>(g.size()) != d / 2 + 1) {
    throw std::invalid_argument("malformed g-vector: expected " + std::to_string(d / 2 + 1) +
                                " entries");
  }
  for (auto x : g) {
    if (x < 0) throw std::invalid_argument("malformed g-vector: negative entry");
  }
  auto g_at = [&](int j) -> std::int64_t {
    return j < static_cast<int>(g.size()) ? g[j] : 0;
  };
  auto m_at = [&](int i) -> std::int64_t {
    return (i >= 1 && i - 1 < static_cast<int>(m.size())) ? m[i - 1] : 0;
  };
  std::vector<BoundReport> out;
  const int top = (d + 1) / 2 - 1;
  for (int k = 1; k <= top; ++k) {
    out.push_back(make_bound("m" + std::to_string(k) + "_upper", true,
                             pseudopower_upper(g_at(k), k) - g_at(k + 1), m_at(k)));
    out.push_back(make_bound("m" + std::to_string(d - k) + "_upper", true,
                             g_at(k) - pseudopower_lower(g_at(k + 1), k + 1), m_at(d - k)));
  }
  if (d % 2 == 0 && d >= 2) {
    const int k = d / 2;
    out.push_back(make_bound("m" + std::to_string(k) + "_upper_middle", true,
                             pseudopower_upper(g_at(k), k) + g_at(k), m_at(k)));
  }
  return out;
}

Rational goodman_bound(std::int64_t n, std::int64_t f1) {
  if (n <= 0) throw std::invalid_argument("goodman_bound needs n > 0");
  return Rational(f1) * (4 * Rational(f1) - Rational(n) * n) / (3 * Rational(n));
}

Rational generalized_mk_bound(int k, std::int64_t n, std::int64_t f_km1, std::int64_t f_k) {
  if (k < 2) throw std::invalid_argument("generalized_mk_bound needs k >= 2");
  const Rational x(f_km1);
  const Rational a = Rational(k * k) / (Rational(k + 1) * binom(n, k - 1));
  const Rational b = Rational(n * (k - 1) - k * (k - 2)) / (k + 1);
  return a * x * x - b * x - f_k;
}

Counts cyclic_h_vector(int d, int n) {
  if (n <= d) throw std::invalid_argument("cyclic polytope needs n > d");
  Counts h(d + 1, 0);
  for (int i = 0; i <= d / 2; ++i) {
    h[i] = binom(n - d + i - 1, i);
    h[d - i] = h[i];
  }
  return h;
}

Counts cyclic_f_vector(int d, int n) { return f_from_h(cyclic_h_vector(d, n), d); }

Rational nearly_neighborly_bound(int k, int d, std::int64_t n, std::int64_t f_km1) {
  if (d != 2 * k && d != 2 * k + 1) throw std::invalid_argument("nearly_neighborly_bound needs d in {2k, 2k+1}");
  const std::int64_t fk_cyc = cyclic_f_vector(d, static_cast<int>(n))[k + 1];
  const std::int64_t coef = d / 2 + 1 + ((d - 1) % 2 == 0 ? 1 : -1);
  const std::int64_t fk = fk_cyc - coef * (binom(n, k) - f_km1);
  return generalized_mk_bound(k, n, f_km1, fk);
}

Rational flag_edge_cap(int d, std::int64_t n) {
  const Rational q = Rational(n) * n / 4;
  if (d == 4) return q + Rational(3 * n, 2);
  if (d == 5) return q + 3 * Rational(n);
  throw std::invalid_argument("flag_edge_cap needs d in {4, 5}");
}

bool two_sphere_m_admissible(std::int64_t n, std::int64_t m2) {
  return (m2 >= 0 && m2 <= n - 6) || m2 == n - 4;
}

std::vector<BoundReport> all_bounds(const FaceProfile& p) {
  std::vector<BoundReport> out;
  if (p.d < 1) return out;
  out = m_upper_bounds(p.g, p.d, p.m);
  for (int k = 2; k <= p.d / 2 && k <= p.d - 1; ++k) {
    out.push_back(make_bound("m" + std::to_string(k) + "_lower_clique", false,
                             generalized_mk_bound(k, p.n, p.f_at(k - 1), p.f_at(k)), p.m_at(k)));
  }
  const int k = p.d / 2;
  if (p.is_eulerian && k >= 2 && p.neighborliness >= k - 1 && p.n > p.d) {
    out.push_back(make_bound("m" + std::to_string(k) + "_lower_nearly_neighborly", false,
                             nearly_neighborly_bound(k, p.d, p.n, p.f_at(k - 1)), p.m_at(k)));
  }
  if (p.is_eulerian && p.is_flag && (p.d == 4 || p.d == 5)) {
    BoundReport r = make_bound("f1_flag_cap", true, flag_edge_cap(p.d, p.n), p.f_at(1));
    r.satisfied = r.slack > 0;
    out.push_back(r);
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace mfaces
