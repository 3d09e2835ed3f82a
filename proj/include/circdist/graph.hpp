#ifndef CIRCDIST_GRAPH_HPP_
#define CIRCDIST_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circdist/error.hpp"

namespace circdist {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Adjacency is stored twice: as packed bit rows for O(1) pair queries and as
/// sorted neighbor lists for iteration. Values are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n)
      : n_(n), words_((n + 63) / 64), rows_(n * words_, 0), adj_(n) {}

  /// Builds a graph from an explicit edge list. Rejects loops, endpoints out
  /// of range and repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw ValidationError("edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "} has an endpoint >= n = " +
                              std::to_string(n));
      }
      if (u == v) {
        throw ValidationError("self-loop at vertex " + std::to_string(u));
      }
      if (g.adjacent(u, v)) {
        throw ValidationError("duplicate edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
      }
      g.set_edge(u, v);
    }
    g.finish();
    return g;
  }

  /// Builds a graph where {u,v} is an edge iff `adjacent(u, v)` for u < v.
  template <typename Predicate>
  static Graph from_predicate(std::size_t n, Predicate adjacent) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (adjacent(u, v)) g.set_edge(u, v);
      }
    }
    g.finish();
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }

  /// Edges as pairs (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const {
    if (n_ == 0) return 0;
    const std::size_t d = degree(0);
    for (Vertex v = 1; v < n_; ++v) {
      if (degree(v) != d) return std::nullopt;
    }
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void set_edge(Vertex u, Vertex v) {
    rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }

  void finish() {
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Circulant specifications

/// Order n plus a symmetric generator set A of Z_n with 0 not in A.
/// Generators are kept sorted and deduplicated.
class CirculantSpec {
 public:
  /// Validates and canonicalizes. Never repairs an asymmetric set; see
  /// symmetrize() for that.
  static CirculantSpec create(std::size_t n, std::vector<std::size_t> generators) {
    if (n < 3) {
      throw ValidationError("circulant order must be >= 3, got " + std::to_string(n));
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t a : generators) {
      if (a == 0 || a >= n) {
        throw ValidationError("generator " + std::to_string(a) +
                              " is not a nonzero residue modulo " + std::to_string(n));
      }
      if (!std::binary_search(generators.begin(), generators.end(), n - a)) {
        throw ValidationError("generator set is not symmetric: " + std::to_string(a) +
                              " present but " + std::to_string(n - a) + " missing");
      }
    }
    return CirculantSpec(n, std::move(generators));
  }

  std::size_t order() const noexcept { return n_; }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  bool contains(std::size_t residue) const {
    return std::binary_search(generators_.begin(), generators_.end(), residue % n_);
  }

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  CirculantSpec(std::size_t n, std::vector<std::size_t> generators)
      : n_(n), generators_(std::move(generators)) {}

  std::size_t n_;
  std::vector<std::size_t> generators_;
};

/// Closes a residue set under negation modulo n, reducing entries mod n.
/// Zero residues are kept so that create() still rejects them.
inline std::vector<std::size_t> symmetrize(std::size_t n, std::vector<std::size_t> generators) {
  if (n == 0) throw ValidationError("modulus must be positive");
  std::vector<std::size_t> out;
  for (std::size_t a : generators) {
    out.push_back(a % n);
    out.push_back((n - a % n) % n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Parameters (m, p) of the circulant C(m,p) of order m*p.
struct CmpSpec {
  std::size_t m = 0;
  std::size_t p = 0;

  std::size_t order() const noexcept { return m * p; }

  /// Throws unless m >= 1, p >= 1 and m*p >= 3.
  void validate() const {
    if (m < 1 || p < 1) {
      throw ValidationError("C(m,p) requires m >= 1 and p >= 1");
    }
    if (m * p < 3) {
      throw ValidationError("C(" + std::to_string(m) + "," + std::to_string(p) +
                            ") has order " + std::to_string(m * p) + " < 3");
    }
  }

  /// Generator set {p-1+rp, p+1+rp : 0 <= r < m} reduced mod n. Requires p >= 2.
  std::vector<std::size_t> generators() const {
    validate();
    if (p < 2) {
      throw ValidationError("C(m,1) is the clique K_m and has no generator set");
    }
    const std::size_t n = order();
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m; ++r) {
      out.push_back((p - 1 + r * p) % n);
      out.push_back((p + 1 + r * p) % n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  CirculantSpec circulant() const { return CirculantSpec::create(order(), generators()); }

  friend bool operator==(const CmpSpec&, const CmpSpec&) = default;
};

// ---------------------------------------------------------------------------
// Constructions

inline Graph build_circulant(const CirculantSpec& spec) {
  const std::size_t n = spec.order();
  return Graph::from_predicate(n, [&](Vertex u, Vertex v) { return spec.contains(v + n - u); });
}

inline Graph complete_graph(std::size_t n) {
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

inline Graph path_graph(std::size_t n) {
  return Graph::from_predicate(n, [](Vertex u, Vertex v) { return v == u + 1; });
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  return Graph::from_predicate(n, [n](Vertex u, Vertex v) { return v == u + 1 || (u == 0 && v == n - 1); });
}

/// Complete multipartite graph with consecutive vertex blocks of the given sizes.
inline Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  std::vector<std::size_t> part_of;
  for (std::size_t k = 0; k < part_sizes.size(); ++k) part_of.insert(part_of.end(), part_sizes[k], k);
  return Graph::from_predicate(part_of.size(), [&](Vertex u, Vertex v) { return part_of[u] != part_of[v]; });
}

inline Graph complete_multipartite(std::initializer_list<std::size_t> part_sizes) {
  return complete_multipartite(std::span<const std::size_t>(part_sizes.begin(), part_sizes.size()));
}

/// Vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t shift = a.order();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

/// C(m,p): the circulant with generators {p-1+rp, p+1+rp}; C(m,1) is K_m.
inline Graph build_cmp(const CmpSpec& spec) {
  spec.validate();
  if (spec.p == 1) return complete_graph(spec.m);
  return build_circulant(spec.circulant());
}

inline Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

// ---------------------------------------------------------------------------
// Modules

/// True iff every vertex outside `s` is adjacent to all of `s` or to none of it.
/// The empty set and singletons are trivially modules.
inline bool is_module(const Graph& g, std::span<const Vertex> s) {
  if (s.size() <= 1) return true;
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : s) inside[v] = true;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (inside[y]) continue;
    const bool first = g.adjacent(y, s.front());
    for (Vertex x : s.subspan(1)) {
      if (g.adjacent(y, x) != first) return false;
    }
  }
  return true;
}

inline bool is_stable(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

/// The p residue classes M_i = {i + r*p : 0 <= r < m} of C(m,p).
struct ModulePartition {
  std::size_t m = 0;
  std::size_t p = 0;
  std::vector<std::vector<Vertex>> blocks;

  std::size_t block_of(Vertex v) const noexcept { return v % p; }
  /// Position of v inside its block (the r in v = i + r*p).
  std::size_t rank_in_block(Vertex v) const noexcept { return v / p; }
};

inline ModulePartition module_partition(const CmpSpec& spec) {
  spec.validate();
  if (spec.m < 2 || spec.p < 2) {
    throw ValidationError("module partition requires m >= 2 and p >= 2");
  }
  ModulePartition partition{spec.m, spec.p, std::vector<std::vector<Vertex>>(spec.p)};
  for (std::size_t i = 0; i < spec.p; ++i) {
    for (std::size_t r = 0; r < spec.m; ++r) partition.blocks[i].push_back(i + r * spec.p);
  }
  return partition;
}

/// The band P_j = {(j-1)p, ..., jp-1}, for 1 <= j <= m.
inline std::vector<Vertex> band(const CmpSpec& spec, std::size_t j) {
  if (j < 1 || j > spec.m) {
    throw ValidationError("band index " + std::to_string(j) + " outside 1.." + std::to_string(spec.m));
  }
  std::vector<Vertex> out(spec.p);
  std::iota(out.begin(), out.end(), (j - 1) * spec.p);
  return out;
}

// ---------------------------------------------------------------------------
// Distances

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first distances from `source`; kUnreachable for other components.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

inline std::size_t distance(const Graph& g, Vertex u, Vertex v) { return bfs_distances(g, u)[v]; }

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

/// Vertices in BFS order from vertex 0, then remaining components in order of
/// their smallest vertex.
inline std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::queue<Vertex> frontier;
    seen[root] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Complete multipartite recognition

/// Parts of `g` if it is complete multipartite, ordered by smallest vertex.
/// Vertices are grouped by closed non-neighborhood; the graph qualifies iff each
/// group is stable and every pair from different groups is adjacent.
inline std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph& g) {
  const std::size_t n = g.order();
  std::map<std::vector<bool>, std::size_t> group_index;
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> part_of(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> non_neighborhood(n);
    for (Vertex u = 0; u < n; ++u) non_neighborhood[u] = !g.adjacent(u, v);
    auto [it, inserted] = group_index.emplace(std::move(non_neighborhood), parts.size());
    if (inserted) parts.emplace_back();
    parts[it->second].push_back(v);
    part_of[v] = it->second;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != (part_of[u] != part_of[v])) return std::nullopt;
    }
  }
  return parts;
}

/// Sorted part sizes if `g` is complete multipartite.
inline std::optional<std::vector<std::size_t>> complete_multipartite_signature(const Graph& g) {
  auto parts = complete_multipartite_parts(g);
  if (!parts) return std::nullopt;
  std::vector<std::size_t> sizes;
  for (const auto& part : *parts) sizes.push_back(part.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Pairs u < v with N(u) \ {v} == N(v) \ {u}. Swapping such a pair is always
/// an automorphism.
inline std::vector<Edge> twin_pairs(const Graph& g) {
  std::vector<Edge> out;
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(u) != g.degree(v)) continue;
      bool twins = true;
      for (Vertex w = 0; w < n && twins; ++w) {
        if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) twins = false;
      }
      if (twins) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace circdist

#endif  // CIRCDIST_GRAPH_HPP_
