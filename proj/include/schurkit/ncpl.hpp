#ifndef SCHURKIT_NCPL_HPP
#define SCHURKIT_NCPL_HPP

#include <string>
#include <utility>
#include <vector>

#include "schurkit/perm.hpp"
#include "schurkit/subset.hpp"

namespace schurkit {

// Unordered pair {a,b} of distinct elements of [n], stored with a < b.
struct Edge {
  int a;
  int b;
  Edge(int x, int y);
  bool touches(int v) const { return a == v || b == v; }
  int other(int v) const { return v == a ? b : a; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An ordered sequence of n-1 transpositions of [n]; a candidate factorization
// of the long cycle (1,2,...,n). Validity is decided by is_valid_factorization.
class Factorization {
 public:
  Factorization(int n, std::vector<Edge> transpositions);

  int n() const { return n_; }
  const std::vector<Edge>& transpositions() const { return ts_; }
  int length() const { return static_cast<int>(ts_.size()); }
  const Edge& at(int i) const { return ts_[i - 1]; }  // 1-based

  // Left-to-right product as a permutation; the rightmost factor acts first.
  Permutation product() const;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;

 private:
  int n_;
  std::vector<Edge> ts_;
};

struct ValidityReport {
  bool valid = false;
  std::string violation;  // first failed Goulden-Yong condition, empty when valid
};

// Goulden-Yong test (tree, non-crossing, cyclically decreasing neighbors),
// cross-checked against the direct product test. Disagreement would falsify
// the Goulden-Yong theorem and throws std::logic_error.
ValidityReport is_valid_factorization(const Factorization& w);

// Exactly n^{n-2} elements, in a fixed deterministic order. Requires 2 <= n <= 7.
std::vector<Factorization> enumerate_factorizations(int n);

// A tree drawn on the vertices of a regular n-gon labeled clockwise, with
// non-crossing straight edges. The constructor enforces both properties.
class GeometricTree {
 public:
  GeometricTree(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend auto operator<=>(const GeometricTree&, const GeometricTree&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// True iff the straight segments for {a,b} and {c,d} cross outside a common
// vertex; decided on cyclic intervals, no floating point.
bool edges_cross(int n, const Edge& e, const Edge& f);
bool edges_form_tree(int n, const std::vector<Edge>& edges);
bool edges_noncrossing(int n, const std::vector<Edge>& edges);

// Reflexive-transitive closure of the one-step Goulden-Yong relation;
// order[i][j] holds iff edge i <=_T edge j (0-based edge indices).
std::vector<std::vector<bool>> gy_order(const GeometricTree& t);
bool is_gy_linear(const GeometricTree& t);
// The unique sorted edge order when the Goulden-Yong order is linear.
std::vector<Edge> gy_linear_extension(const GeometricTree& t);

// Caterpillar shape test used against is_gy_linear: the non-leaf vertices form
// a cyclic interval joined by consecutive-label edges (or the tree is a star).
bool is_convex_caterpillar_tree(const GeometricTree& t);

// A linearly ordered factorization: consecutive transpositions share a vertex.
class Caterpillar {
 public:
  explicit Caterpillar(Factorization w);

  const Factorization& factorization() const { return w_; }
  int n() const { return w_.n(); }
  GeometricTree tree() const;

  friend auto operator<=>(const Caterpillar&, const Caterpillar&) = default;

 private:
  Factorization w_;
};

// All n*2^(n-3) convex caterpillars, built from (first edge, branch index set)
// pairs. Requires 3 <= n <= 12.
std::vector<Caterpillar> enumerate_caterpillars(int n);

// Des(c) over [n-2]: positions i where the endpoint of t_i opposite the
// common vertex exceeds that of t_{i+1}.
SubsetOfRange caterpillar_descent(const Caterpillar& c);

// The suffix-product edge labeling phi: F_n -> S_{n-1}. With sigma_j the
// product t_j ... t_{n-1}, label j by the unique i with sigma_j(i) > sigma_{j+1}(i).
Permutation phi_map(const Factorization& w);

// Index of the first edge with 1 as an endpoint.
int main_index(const Caterpillar& c);

// The unique caterpillar with the given descent set and main index.
// Requires i = 1 or i-1 in j; the universe of j is [n-2].
Caterpillar caterpillar_from(const SubsetOfRange& j, int i);

// JSON object {"n": ..., "edges": [[a,b], ...]} preserving edge order.
std::string edges_to_json(int n, const std::vector<Edge>& edges);
std::pair<int, std::vector<Edge>> edges_from_json(const std::string& json_text);
std::string edges_to_dot(int n, const std::vector<Edge>& edges);

}  // namespace schurkit

#endif
