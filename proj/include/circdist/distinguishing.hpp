#ifndef CIRCDIST_DISTINGUISHING_HPP_
#define CIRCDIST_DISTINGUISHING_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "circdist/automorphism.hpp"
#include "circdist/error.hpp"
#include "circdist/graph.hpp"
#include "circdist/labeling.hpp"
#include "circdist/permutation.hpp"

namespace circdist {

// ---------------------------------------------------------------------------
// Verification

struct DistinguishingReport {
  bool distinguishing = false;
  /// Lexicographically least nontrivial automorphism preserving the labeling.
  std::optional<Permutation> witness;
};

inline DistinguishingReport is_distinguishing(const Graph& g, const Labeling& c) {
  if (c.size() != g.order()) {
    throw ValidationError("labeling has " + std::to_string(c.size()) + " entries for a graph of order " +
                          std::to_string(g.order()));
  }
  auto witness = find_nontrivial_color_preserving_automorphism(g, c.labels());
  return {!witness.has_value(), std::move(witness)};
}

// ---------------------------------------------------------------------------
// Exact distinguishing number

struct ExactResult {
  std::size_t value = 0;
  Labeling witness;
};

namespace detail {

// Depth-first walk over restricted growth strings with labels in 1..r. A
// prefix is abandoned as soon as two twins share a label, since swapping
// them preserves every completion.
class RgsSearch {
 public:
  RgsSearch(const Graph& g, std::size_t r) : g_(g), n_(g.order()), r_(r), earlier_twins_(g.order()) {
    for (auto [u, v] : twin_pairs(g)) earlier_twins_[v].push_back(u);
  }

  bool admissible(const std::vector<std::size_t>& labels, Vertex v, std::size_t label) const {
    for (Vertex u : earlier_twins_[v]) {
      if (labels[u] == label) return false;
    }
    return true;
  }

  /// Valid prefixes of the given length in lexicographic order.
  std::vector<std::vector<std::size_t>> prefixes(std::size_t length) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> labels(n_, 0);
    collect(labels, 0, 0, length, out);
    return out;
  }

  /// Lexicographically least distinguishing completion of `prefix`.
  std::optional<std::vector<std::size_t>> complete(std::vector<std::size_t> prefix) const {
    std::size_t max_label = 0;
    for (std::size_t label : prefix) max_label = std::max(max_label, label);
    const std::size_t start = prefix.size();
    prefix.resize(n_, 0);
    if (extend(prefix, start, max_label)) return prefix;
    return std::nullopt;
  }

 private:
  void collect(std::vector<std::size_t>& labels, Vertex v, std::size_t max_label, std::size_t length,
               std::vector<std::vector<std::size_t>>& out) const {
    if (v == length) {
      out.emplace_back(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(length));
      return;
    }
    const std::size_t top = std::min(r_, max_label + 1);
    for (std::size_t label = 1; label <= top; ++label) {
      if (!admissible(labels, v, label)) continue;
      labels[v] = label;
      collect(labels, v + 1, std::max(max_label, label), length, out);
    }
    labels[v] = 0;
  }

  bool extend(std::vector<std::size_t>& labels, Vertex v, std::size_t max_label) const {
    if (v == n_) return !find_nontrivial_color_preserving_automorphism(g_, labels).has_value();
    const std::size_t top = std::min(r_, max_label + 1);
    for (std::size_t label = 1; label <= top; ++label) {
      if (!admissible(labels, v, label)) continue;
      labels[v] = label;
      if (extend(labels, v + 1, std::max(max_label, label))) return true;
    }
    labels[v] = 0;
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t r_;
  std::vector<std::vector<Vertex>> earlier_twins_;
};

// Splits the search into prefix tasks. Task i is skipped once a task j < i has
// succeeded, and the earliest successful task wins, so the answer equals the
// sequential one.
inline std::optional<std::vector<std::size_t>> parallel_least_distinguishing(const RgsSearch& search, std::size_t n,
                                                                             std::size_t threads) {
  const std::size_t depth = std::min<std::size_t>(n, 6);
  const auto tasks = search.prefixes(depth);
  std::vector<std::optional<std::vector<std::size_t>>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= tasks.size() || task > best.load()) return;
      results[task] = search.complete(tasks[task]);
      if (results[task]) {
        std::size_t current = best.load();
        while (task < current && !best.compare_exchange_weak(current, task)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  for (auto& result : results) {
    if (result) return result;
  }
  return std::nullopt;
}

}  // namespace detail

/// Smallest r <= r_max admitting a distinguishing labeling, with the
/// lexicographically least witness among restricted growth strings. Label
/// renamings are quotiented out, which is sound because being distinguishing
/// is invariant under bijective relabeling.
inline ExactResult exact_distinguishing_number(const Graph& g, std::size_t r_max, std::size_t threads = 1) {
  if (r_max < 1) throw ValidationError("r_max must be >= 1");
  const std::size_t n = g.order();
  if (n == 0) return {0, Labeling(0, {})};
  for (std::size_t r = 1; r <= std::min(r_max, n); ++r) {
    detail::RgsSearch search(g, r);
    std::optional<std::vector<std::size_t>> labels =
        threads > 1 ? detail::parallel_least_distinguishing(search, n, threads) : search.complete({});
    if (labels) return {r, Labeling(r, std::move(*labels))};
  }
  throw BoundExceeded(r_max);
}

// ---------------------------------------------------------------------------
// Closed forms

/// (m >= 3, p = 1), (m = 1, p >= 3) or (m >= 2, p >= 2).
inline bool in_cmp_formula_domain(const CmpSpec& spec) {
  const auto [m, p] = spec;
  return m * p >= 3 && ((m >= 3 && p == 1) || (m == 1 && p >= 3) || (m >= 2 && p >= 2));
}

inline std::size_t cmp_distinguishing_formula(const CmpSpec& spec) {
  const auto [m, p] = spec;
  if (!in_cmp_formula_domain(spec)) {
    throw ValidationError("(m,p) = (" + std::to_string(m) + "," + std::to_string(p) +
                          ") is outside the closed-form domain");
  }
  if (p == 1) return m;
  if ((m == 1 && p <= 5) || (m >= 2 && p == 4)) return 2 * m + 1;
  return m + 1;
}

/// Complete multipartite shape: j_i parts of size a_i, sizes strictly decreasing.
class MultipartiteShape {
 public:
  struct Entry {
    std::size_t size;
    std::size_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit MultipartiteShape(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].size < 1 || entries_[k].multiplicity < 1) {
        throw ValidationError("multipartite shape entries need size >= 1 and multiplicity >= 1");
      }
      if (k > 0 && entries_[k].size >= entries_[k - 1].size) {
        throw ValidationError("multipartite part sizes must be strictly decreasing");
      }
    }
  }

  /// Shape of the complete multipartite graph with the given part sizes.
  static MultipartiteShape from_part_sizes(std::vector<std::size_t> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    std::vector<Entry> entries;
    for (std::size_t a : sizes) {
      if (!entries.empty() && entries.back().size == a) {
        ++entries.back().multiplicity;
      } else {
        entries.push_back({a, 1});
      }
    }
    return MultipartiteShape(std::move(entries));
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Binomial coefficient, saturating at the maximum of std::size_t.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(value);
}

/// min { q : C(q, a_i) >= j_i for every entry }.
inline std::size_t multipartite_distinguishing_formula(const MultipartiteShape& shape) {
  std::size_t q = 0;
  for (const auto& entry : shape.entries()) q = std::max(q, entry.size);
  auto satisfied = [&](std::size_t candidate) {
    return std::all_of(shape.entries().begin(), shape.entries().end(),
                       [&](const auto& entry) { return binomial(candidate, entry.size) >= entry.multiplicity; });
  };
  while (!satisfied(q)) ++q;
  return q;
}

// ---------------------------------------------------------------------------
// Explicit labelings

/// Distinguishing labeling of a complete multipartite graph with
/// D = multipartite_distinguishing_formula labels. Among parts of equal size a
/// (ordered by smallest vertex) the k-th part receives the k-th a-subset of
/// {1..D} in lexicographic order, assigned increasingly to its vertices.
inline Labeling multipartite_witness_labeling(const Graph& g) {
  auto parts = complete_multipartite_parts(g);
  if (!parts) throw ValidationError("graph is not complete multipartite");
  std::vector<std::size_t> sizes;
  for (const auto& part : *parts) sizes.push_back(part.size());
  const std::size_t d = multipartite_distinguishing_formula(MultipartiteShape::from_part_sizes(sizes));

  std::vector<std::size_t> labels(g.order(), 0);
  std::map<std::size_t, std::vector<std::size_t>> next_subset;
  for (const auto& part : *parts) {
    const std::size_t a = part.size();
    auto [it, fresh] = next_subset.try_emplace(a);
    auto& subset = it->second;
    if (fresh) {
      subset.resize(a);
      std::iota(subset.begin(), subset.end(), std::size_t{1});
    }
    for (std::size_t k = 0; k < a; ++k) labels[part[k]] = subset[k];
    // advance to the next a-subset of {1..d} in lexicographic order
    std::size_t k = a;
    while (k > 0 && subset[k - 1] == d - a + k) --k;
    if (k > 0) {
      ++subset[k - 1];
      for (std::size_t t = k; t < a; ++t) subset[t] = subset[t - 1] + 1;
    }
  }
  return Labeling(d, std::move(labels));
}

/// The (m+1)-labeling of C(m,p): label 1 on 0..floor(p/2) and on 2p-1, label 2
/// on the rest of the first band, label j+1 on band P_j for j >= 2. For
/// p in {2,3} the graph is complete multipartite and the multipartite witness
/// is returned instead. No (m+1)-labeling exists for p = 4.
inline Labeling explicit_labeling(const CmpSpec& spec) {
  spec.validate();
  const auto [m, p] = spec;
  if (m < 2) throw ValidationError("explicit labeling requires m >= 2");
  if (p == 4) {
    throw ValidationError("no (m+1)-labeling exists for p = 4: D(C(m,4)) = 2m+1");
  }
  if (p < 2) throw ValidationError("explicit labeling requires p >= 2");
  if (p <= 3) return multipartite_witness_labeling(build_cmp(spec));

  std::vector<std::size_t> labels(spec.order());
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (v < p) {
      labels[v] = v <= p / 2 ? 1 : 2;
    } else if (v == 2 * p - 1) {
      labels[v] = 1;
    } else {
      labels[v] = v / p + 2;  // band P_j with j = v/p + 1
    }
  }
  return Labeling(m + 1, std::move(labels));
}

/// Sorted multiset of labels on the neighbors of v.
inline std::vector<std::size_t> neighborhood_label_signature(const Graph& g, const Labeling& c, Vertex v) {
  std::vector<std::size_t> out;
  for (Vertex u : g.neighbors(v)) out.push_back(c[u]);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Breaking labelings with at most m labels

struct BreakResult {
  enum class Construction { kTransposition, kConjugatedReflection };

  Permutation sigma;
  Construction construction;
};

inline const char* to_string(BreakResult::Construction construction) {
  return construction == BreakResult::Construction::kTransposition ? "transposition" : "conjugated-reflection";
}

/// A nontrivial automorphism of C(m,p) preserving a labeling that uses at most
/// m distinct labels. If a block repeats a label, the transposition of the
/// first such pair (lowest block, then lowest vertices) is returned. Otherwise
/// every block is rainbow and the result is delta^-1 . psi . delta.
inline BreakResult break_m_labeling(const CmpSpec& spec, const Labeling& c) {
  spec.validate();
  if (spec.m < 2 || spec.p < 2) throw ValidationError("breaking requires m >= 2 and p >= 2");
  const std::size_t n = spec.order();
  if (c.size() != n) {
    throw ValidationError("labeling has " + std::to_string(c.size()) + " entries, C(m,p) has " +
                          std::to_string(n) + " vertices");
  }
  if (c.distinct_count() > spec.m) {
    throw ValidationError("labeling uses " + std::to_string(c.distinct_count()) + " labels, more than m = " +
                          std::to_string(spec.m));
  }

  const ModulePartition partition = module_partition(spec);
  for (const auto& block : partition.blocks) {
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        if (c[block[a]] == c[block[b]]) {
          return {Permutation::transposition(n, block[a], block[b]), BreakResult::Construction::kTransposition};
        }
      }
    }
  }

  // Rainbow blocks: rename the used labels to 1..m by rank.
  std::vector<std::size_t> used = c.labels();
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::size_t> ranked(n);
  for (Vertex v = 0; v < n; ++v) {
    ranked[v] = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), c[v]) - used.begin()) + 1;
  }
  const Permutation delta = delta_from_labeling(spec, Labeling(spec.m, std::move(ranked)));
  return {compose(inverse(delta), compose(psi(spec), delta)), BreakResult::Construction::kConjugatedReflection};
}

}  // namespace circdist

#endif  // CIRCDIST_DISTINGUISHING_HPP_
