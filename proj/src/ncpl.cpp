#include "schurkit/ncpl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace schurkit {

namespace {

// Position of x in the cyclic order a < a+1 < ... < a-1 on [n]; pos(a) = 0.
int cyclic_pos(int n, int a, int x) { return ((x - a) % n + n) % n; }

int cyclic_succ(int n, int x) { return x % n + 1; }
int cyclic_pred(int n, int x) { return (x + n - 2) % n + 1; }

Permutation long_cycle(int n) {
  std::vector<int> w(n);
  for (int i = 1; i < n; ++i) w[i - 1] = i + 1;
  w[n - 1] = 1;
  return Permutation(std::move(w));
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  // Returns false if already joined.
  bool join(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

Edge::Edge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y) throw std::invalid_argument("Edge: endpoints must differ");
  if (a < 1) throw std::invalid_argument("Edge: endpoints must be positive");
}

Factorization::Factorization(int n, std::vector<Edge> transpositions)
    : n_(n), ts_(std::move(transpositions)) {
  if (n < 1) throw std::invalid_argument("Factorization: n must be positive");
  if (static_cast<int>(ts_.size()) != n - 1)
    throw std::invalid_argument("Factorization: expected n-1 transpositions");
  for (const Edge& e : ts_)
    if (e.b > n) throw std::invalid_argument("Factorization: endpoint outside [n]");
}

Permutation Factorization::product() const {
  std::vector<int> w(n_);
  std::iota(w.begin(), w.end(), 1);
  // Right-to-left fold: w becomes t_1 ... t_{n-1} with the rightmost acting first.
  for (auto it = ts_.rbegin(); it != ts_.rend(); ++it) {
    for (int& v : w) {
      if (v == it->a) v = it->b;
      else if (v == it->b) v = it->a;
    }
  }
  return Permutation(std::move(w));
}

bool edges_cross(int n, const Edge& e, const Edge& f) {
  if (e.touches(f.a) || e.touches(f.b)) return false;
  const int span = cyclic_pos(n, e.a, e.b);
  const bool fa_inside = 0 < cyclic_pos(n, e.a, f.a) && cyclic_pos(n, e.a, f.a) < span;
  const bool fb_inside = 0 < cyclic_pos(n, e.a, f.b) && cyclic_pos(n, e.a, f.b) < span;
  return fa_inside != fb_inside;
}

bool edges_form_tree(int n, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  DisjointSet ds(n);
  for (const Edge& e : edges) {
    if (e.b > n) return false;
    if (!ds.join(e.a, e.b)) return false;  // duplicate edge or cycle
  }
  return true;
}

bool edges_noncrossing(int n, const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges_cross(n, edges[i], edges[j])) return false;
  return true;
}

ValidityReport is_valid_factorization(const Factorization& w) {
  const int n = w.n();
  ValidityReport report;
  if (!edges_form_tree(n, w.transpositions())) {
    report.violation = "G(w) is not a tree";
  } else if (!edges_noncrossing(n, w.transpositions())) {
    report.violation = "G(w) has crossing edges";
  } else {
    // Cyclically decreasing neighbors: for i < j sharing vertex a, the earlier
    // edge's other endpoint must come later in the order a < a+1 < ... < a-1.
    for (int i = 1; i <= w.length() && report.violation.empty(); ++i) {
      for (int j = i + 1; j <= w.length(); ++j) {
        const Edge& e = w.at(i);
        const Edge& f = w.at(j);
        int shared = e.touches(f.a) ? f.a : (e.touches(f.b) ? f.b : 0);
        if (shared == 0) continue;
        if (cyclic_pos(n, shared, e.other(shared)) <= cyclic_pos(n, shared, f.other(shared))) {
          std::ostringstream os;
          os << "neighbors of " << shared << " not cyclically decreasing at positions " << i
             << "," << j;
          report.violation = os.str();
          break;
        }
      }
    }
  }
  report.valid = report.violation.empty();

  const bool product_ok = w.product() == long_cycle(n);
  if (product_ok != report.valid)
    throw std::logic_error("is_valid_factorization: Goulden-Yong test disagrees with product");
  return report;
}

namespace {

void enumerate_factorizations_rec(int n, std::vector<int>& u, std::vector<Edge>& prefix,
                                  std::vector<Factorization>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    out.emplace_back(n, prefix);
    return;
  }
  // Cycle labels of u.
  std::vector<int> comp(n + 1, 0);
  int ncomp = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s]) continue;
    ++ncomp;
    for (int v = s; !comp[v]; v = u[v - 1]) comp[v] = ncomp;
  }
  for (int a = 1; a < n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (comp[a] != comp[b]) continue;  // the next factor must split a cycle
      prefix.emplace_back(a, b);
      for (int& v : u) {
        if (v == a) v = b;
        else if (v == b) v = a;
      }
      enumerate_factorizations_rec(n, u, prefix, out);
      for (int& v : u) {
        if (v == a) v = b;
        else if (v == b) v = a;
      }
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(int n) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("enumerate_factorizations: requires 2 <= n <= 7");
  // u tracks t_k ... t_1 c; after n-1 splitting steps u is the identity and
  // t_1 ... t_{n-1} = c.
  std::vector<int> u(n);
  for (int i = 1; i < n; ++i) u[i - 1] = i + 1;
  u[n - 1] = 1;
  std::vector<Edge> prefix;
  std::vector<Factorization> out;
  enumerate_factorizations_rec(n, u, prefix, out);
  return out;
}

GeometricTree::GeometricTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 2) throw std::invalid_argument("GeometricTree: n must be at least 2");
  for (const Edge& e : edges_)
    if (e.b > n) throw std::invalid_argument("GeometricTree: endpoint outside [n]");
  if (!edges_form_tree(n, edges_)) throw std::invalid_argument("GeometricTree: not a tree");
  if (!edges_noncrossing(n, edges_)) throw std::invalid_argument("GeometricTree: edges cross");
}

std::vector<std::vector<bool>> gy_order(const GeometricTree& t) {
  const auto& edges = t.edges();
  const int m = static_cast<int>(edges.size());
  const int n = t.n();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) leq[i][i] = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Edge& s = edges[i];
      const Edge& u = edges[j];
      int shared = s.touches(u.a) ? u.a : (s.touches(u.b) ? u.b : 0);
      if (shared == 0) continue;
      if (cyclic_pos(n, shared, s.other(shared)) > cyclic_pos(n, shared, u.other(shared)))
        leq[i][j] = true;
    }
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

bool is_gy_linear(const GeometricTree& t) {
  const auto leq = gy_order(t);
  const int m = static_cast<int>(leq.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!leq[i][j] && !leq[j][i]) return false;
  return true;
}

std::vector<Edge> gy_linear_extension(const GeometricTree& t) {
  const auto leq = gy_order(t);
  const int m = static_cast<int>(leq.size());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (i == j) return false;
    if (leq[i][j] && !leq[j][i]) return true;
    if (leq[j][i] && !leq[i][j]) return false;
    throw std::invalid_argument("gy_linear_extension: order is not linear");
  });
  std::vector<Edge> out;
  out.reserve(m);
  for (int i : idx) out.push_back(t.edges()[i]);
  return out;
}

bool is_convex_caterpillar_tree(const GeometricTree& t) {
  const int n = t.n();
  std::vector<int> degree(n + 1, 0);
  for (const Edge& e : t.edges()) {
    ++degree[e.a];
    ++degree[e.b];
  }
  std::vector<int> spine;
  for (int v = 1; v <= n; ++v)
    if (degree[v] >= 2) spine.push_back(v);
  if (spine.empty()) return true;  // a star, or a single edge
  // The spine must be a cyclic interval of consecutive labels...
  const int k = static_cast<int>(spine.size());
  if (k == n) return false;
  auto in_spine = [&](int v) { return degree[v] >= 2; };
  int start = -1;
  for (int v : spine) {
    if (!in_spine(cyclic_pred(n, v))) {
      if (start != -1) return false;  // more than one run: not an interval
      start = v;
    }
  }
  if (start == -1) return false;
  // ...joined by the consecutive-label edges (the spine path of a caterpillar).
  std::set<Edge> edge_set(t.edges().begin(), t.edges().end());
  int v = start;
  for (int step = 1; step < k; ++step) {
    int next = cyclic_succ(n, v);
    if (!in_spine(next) || !edge_set.count(Edge(v, next))) return false;
    v = next;
  }
  return true;
}

Caterpillar::Caterpillar(Factorization w) : w_(std::move(w)) {
  if (w_.n() < 2) throw std::invalid_argument("Caterpillar: n must be at least 2");
  if (!is_valid_factorization(w_).valid)
    throw std::invalid_argument("Caterpillar: not a factorization of the long cycle");
  for (int i = 1; i + 1 <= w_.length(); ++i) {
    const Edge& e = w_.at(i);
    const Edge& f = w_.at(i + 1);
    if (!(e.touches(f.a) || e.touches(f.b)))
      throw std::invalid_argument("Caterpillar: consecutive transpositions share no vertex");
  }
}

GeometricTree Caterpillar::tree() const { return {w_.n(), w_.transpositions()}; }

std::vector<Caterpillar> enumerate_caterpillars(int n) {
  if (n < 3 || n > 12) throw std::invalid_argument("enumerate_caterpillars: requires 3 <= n <= 12");
  std::vector<Caterpillar> out;
  out.reserve(static_cast<std::size_t>(n) << (n - 3));
  // Branch index sets are the subsets of [n-1] containing 1 and n-1; the free
  // choices are the indices 2..n-2. Branches attach the next counterclockwise
  // leaf, links extend the spine clockwise.
  const std::uint64_t free_masks = std::uint64_t{1} << (n - 3);
  for (int a = 1; a <= n; ++a) {
    for (std::uint64_t mask = 0; mask < free_masks; ++mask) {
      std::vector<Edge> edges;
      edges.emplace_back(a, cyclic_succ(n, a));
      int l = a;
      int m = cyclic_succ(n, a);
      for (int k = 2; k <= n - 1; ++k) {
        const bool branch = k == n - 1 || ((mask >> (k - 2)) & 1);
        if (branch) {
          l = cyclic_pred(n, l);
          edges.emplace_back(m, l);
        } else {
          int next = cyclic_succ(n, m);
          edges.emplace_back(m, next);
          m = next;
        }
      }
      out.emplace_back(Factorization(n, std::move(edges)));
    }
  }
  return out;
}

SubsetOfRange caterpillar_descent(const Caterpillar& c) {
  const Factorization& w = c.factorization();
  const int n = c.n();
  SubsetOfRange d = SubsetOfRange::empty(std::max(n - 2, 0));
  for (int i = 1; i <= n - 2; ++i) {
    const Edge& e = w.at(i);
    const Edge& f = w.at(i + 1);
    const int shared = e.touches(f.a) ? f.a : f.b;
    if (e.other(shared) > f.other(shared)) d = d.with(i);
  }
  return d;
}

Permutation phi_map(const Factorization& w) {
  const int n = w.n();
  if (n < 2) throw std::invalid_argument("phi_map: requires n >= 2");
  // Suffix products sigma_j = t_j ... t_{n-1}, with sigma_n = id.
  std::vector<std::vector<int>> sigma(n + 1, std::vector<int>(n));
  std::iota(sigma[n].begin(), sigma[n].end(), 1);
  for (int j = n - 1; j >= 1; --j) {
    sigma[j] = sigma[j + 1];
    for (int& v : sigma[j]) {
      if (v == w.at(j).a) v = w.at(j).b;
      else if (v == w.at(j).b) v = w.at(j).a;
    }
  }
  std::vector<int> word(n - 1, 0);
  for (int j = 1; j <= n - 1; ++j) {
    int found = 0;
    int where = 0;
    for (int i = 1; i <= n; ++i) {
      if (sigma[j][i - 1] > sigma[j + 1][i - 1]) {
        ++found;
        where = i;
      }
    }
    if (found != 1 || where > n - 1) throw std::logic_error("phi_map: |A_j| != 1 inside [n-1]");
    word[j - 1] = where;
  }
  try {
    return Permutation(std::move(word));
  } catch (const std::invalid_argument&) {
    throw std::logic_error("phi_map: labels do not form a permutation of [n-1]");
  }
}

int main_index(const Caterpillar& c) {
  for (int i = 1; i <= c.factorization().length(); ++i)
    if (c.factorization().at(i).touches(1)) return i;
  throw std::logic_error("main_index: no edge touches vertex 1");
}

Caterpillar caterpillar_from(const SubsetOfRange& j, int i) {
  const int n = j.universe() + 2;
  if (i != 1 && !j.contains(i - 1))
    throw std::invalid_argument("caterpillar_from: need i = 1 or i-1 in J");
  for (const Caterpillar& c : enumerate_caterpillars(n))
    if (caterpillar_descent(c) == j && main_index(c) == i) return c;
  throw std::logic_error("caterpillar_from: no caterpillar found for a feasible (J, i)");
}

std::string edges_to_json(int n, const std::vector<Edge>& edges) {
  nlohmann::json out;
  out["n"] = n;
  auto arr = nlohmann::json::array();
  for (const Edge& e : edges) arr.push_back({e.a, e.b});
  out["edges"] = std::move(arr);
  return out.dump();
}

std::pair<int, std::vector<Edge>> edges_from_json(const std::string& json_text) {
  nlohmann::json in = nlohmann::json::parse(json_text);
  const int n = in.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& pair : in.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("edges_from_json: edge must be a pair");
    edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return {n, std::move(edges)};
}

std::string edges_to_dot(int n, const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << "graph tree {\n";
  for (int v = 1; v <= n; ++v) os << "  " << v << ";\n";
  for (const Edge& e : edges) os << "  " << e.a << " -- " << e.b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace schurkit
