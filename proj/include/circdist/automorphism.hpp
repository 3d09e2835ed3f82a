#ifndef CIRCDIST_AUTOMORPHISM_HPP_
#define CIRCDIST_AUTOMORPHISM_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circdist/error.hpp"
#include "circdist/graph.hpp"
#include "circdist/labeling.hpp"
#include "circdist/permutation.hpp"

namespace circdist {

inline constexpr std::size_t kDefaultAutomorphismCap = 1'000'000;

/// True iff sigma maps the edge set of g onto itself. A permutation of the
/// wrong degree is not an automorphism.
inline bool is_automorphism(const Graph& g, const Permutation& sigma) {
  if (sigma.degree() != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(sigma(u), sigma(v))) return false;
  }
  return true;
}

/// True iff c(sigma(v)) == c(v) for every vertex.
template <typename Colors>
bool preserves_colors(const Permutation& sigma, const Colors& colors) {
  for (Vertex v = 0; v < sigma.degree(); ++v) {
    if (colors[sigma(v)] != colors[v]) return false;
  }
  return true;
}

namespace detail {

// Color refinement run on two copies of the same graph at once: entries
// 0..n-1 of a coloring describe the source copy, n..2n-1 the target copy.
// Individualizing v in the source and w in the target with the same fresh
// color and refining both together keeps class names comparable, so a class
// with different sizes in the two halves proves no automorphism extends the
// current partial assignment.
class PairedRefiner {
 public:
  explicit PairedRefiner(const Graph& g) : g_(g), n_(g.order()), index_(2 * g.order()), signature_(2 * g.order()) {}

  // Refines `colors` in place to the coarsest stable coloring and renumbers
  // classes densely. Returns false as soon as the halves disagree.
  bool refine(std::vector<std::size_t>& colors, std::size_t& num_colors) {
    const std::size_t total = 2 * n_;
    while (true) {
      for (std::size_t x = 0; x < total; ++x) {
        auto& sig = signature_[x];
        sig.clear();
        sig.push_back(colors[x]);
        const std::size_t offset = x < n_ ? 0 : n_;
        for (Vertex w : g_.neighbors(x - offset)) sig.push_back(colors[w + offset]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(index_.begin(), index_.end(), std::size_t{0});
      std::sort(index_.begin(), index_.end(),
                [this](std::size_t a, std::size_t b) { return signature_[a] < signature_[b]; });

      std::size_t classes = 0;
      std::size_t source_count = 0;
      std::size_t target_count = 0;
      for (std::size_t k = 0; k < total; ++k) {
        const std::size_t x = index_[k];
        if (k > 0 && signature_[x] != signature_[index_[k - 1]]) {
          if (source_count != target_count) return false;
          source_count = target_count = 0;
          ++classes;
        }
        colors[x] = classes;
        (x < n_ ? source_count : target_count) += 1;
      }
      if (source_count != target_count) return false;
      ++classes;
      if (classes == num_colors) return true;
      num_colors = classes;
    }
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> index_;
  std::vector<std::vector<std::size_t>> signature_;
};

// Individualization-refinement backtracking over vertex images.
//
// At each node the first vertex of `order` whose class is not a singleton is
// branched on; its candidate images are the target vertices of the same class,
// in increasing order. When the vertex order is 0..n-1 the leaves are visited
// in lexicographic order of their image arrays.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::span<const std::size_t> vertex_colors, std::vector<Vertex> order)
      : g_(g), n_(g.order()), refiner_(g), order_(std::move(order)) {
    std::vector<std::size_t> distinct(vertex_colors.begin(), vertex_colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    initial_.resize(2 * n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      const std::size_t c =
          vertex_colors.empty()
              ? 0
              : static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), vertex_colors[v]) -
                                         distinct.begin());
      initial_[v] = initial_[v + n_] = c;
    }
    initial_classes_ = std::max<std::size_t>(distinct.size(), 1);
  }

  // Calls on_leaf(const Permutation&) for every automorphism preserving the
  // initial colors until it returns false.
  template <typename OnLeaf>
  void run(OnLeaf&& on_leaf) {
    if (n_ == 0) {
      on_leaf(Permutation::identity(0));
      return;
    }
    std::vector<std::size_t> colors = initial_;
    std::size_t classes = initial_classes_;
    if (!refiner_.refine(colors, classes)) return;
    descend(colors, classes, on_leaf);
  }

 private:
  template <typename OnLeaf>
  bool descend(const std::vector<std::size_t>& colors, std::size_t classes, OnLeaf& on_leaf) {
    std::vector<std::size_t> class_size(classes, 0);
    for (Vertex v = 0; v < n_; ++v) ++class_size[colors[v]];

    const auto branch = std::find_if(order_.begin(), order_.end(),
                                     [&](Vertex v) { return class_size[colors[v]] > 1; });
    if (branch == order_.end()) {
      std::vector<Vertex> source_of_class(classes);
      for (Vertex v = 0; v < n_; ++v) source_of_class[colors[v]] = v;
      std::vector<Vertex> images(n_);
      for (Vertex w = 0; w < n_; ++w) images[source_of_class[colors[n_ + w]]] = w;
      Permutation sigma(std::move(images));
      if (!is_automorphism(g_, sigma)) return true;
      return on_leaf(sigma);
    }

    const Vertex v = *branch;
    for (Vertex w = 0; w < n_; ++w) {
      if (colors[n_ + w] != colors[v]) continue;
      std::vector<std::size_t> next = colors;
      next[v] = next[n_ + w] = classes;
      std::size_t next_classes = classes + 1;
      if (!refiner_.refine(next, next_classes)) continue;
      if (!descend(next, next_classes, on_leaf)) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  PairedRefiner refiner_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> initial_;
  std::size_t initial_classes_ = 1;
};

inline std::vector<Vertex> natural_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

}  // namespace detail

/// Every automorphism of a graph, identity first, the rest in lexicographic
/// order of image arrays.
struct AutGroup {
  std::size_t degree = 0;
  std::vector<Permutation> elements;

  std::size_t order() const noexcept { return elements.size(); }

  bool contains(const Permutation& sigma) const {
    return std::binary_search(elements.begin(), elements.end(), sigma);
  }
};

/// Exhaustive backtracking enumeration of Aut(g). Throws CapExceeded once more
/// than `cap` elements have been found.
inline AutGroup enumerate_automorphisms(const Graph& g, std::size_t cap = kDefaultAutomorphismCap) {
  if (cap == 0) throw ValidationError("automorphism cap must be positive");
  AutGroup group{g.order(), {}};
  detail::AutomorphismSearch search(g, {}, bfs_order(g));
  search.run([&](const Permutation& sigma) {
    if (group.elements.size() == cap) throw CapExceeded(cap);
    group.elements.push_back(sigma);
    return true;
  });
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

/// Lexicographically least non-identity automorphism of g with
/// colors[sigma(v)] == colors[v] for all v, if one exists. The group itself is
/// never materialized.
inline std::optional<Permutation> find_nontrivial_color_preserving_automorphism(const Graph& g,
                                                                                std::span<const std::size_t> colors) {
  if (!colors.empty() && colors.size() != g.order()) {
    throw ValidationError("coloring has " + std::to_string(colors.size()) + " entries for a graph of order " +
                          std::to_string(g.order()));
  }
  std::optional<Permutation> found;
  detail::AutomorphismSearch search(g, colors, detail::natural_order(g.order()));
  search.run([&](const Permutation& sigma) {
    if (sigma.is_identity()) return true;
    found = sigma;
    return false;
  });
  return found;
}

/// Checks identity membership, closure under composition and inverses, and
/// that every element is an automorphism of g.
inline bool verify_group(const Graph& g, const AutGroup& group) {
  if (group.elements.empty() || !group.elements.front().is_identity()) return false;
  for (const auto& a : group.elements) {
    if (!is_automorphism(g, a) || !group.contains(inverse(a))) return false;
    for (const auto& b : group.elements) {
      if (!group.contains(compose(a, b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Named automorphisms of C(m,p)

/// Acts as per_block[i] on the rank positions of block i: the vertex at rank r
/// of M_i goes to the vertex at rank per_block[i](r).
inline Permutation module_permutation(const ModulePartition& partition, std::span<const Permutation> per_block) {
  if (per_block.size() != partition.blocks.size()) {
    throw ValidationError("expected " + std::to_string(partition.blocks.size()) + " block permutations, got " +
                          std::to_string(per_block.size()));
  }
  std::vector<Vertex> images(partition.m * partition.p);
  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    const auto& block = partition.blocks[i];
    if (per_block[i].degree() != block.size()) {
      throw ValidationError("permutation for block " + std::to_string(i) + " has degree " +
                            std::to_string(per_block[i].degree()) + ", block has " + std::to_string(block.size()) +
                            " vertices");
    }
    for (std::size_t r = 0; r < block.size(); ++r) images[block[r]] = block[per_block[i](r)];
  }
  return Permutation(std::move(images));
}

/// The reflection i + rp -> (p-1-i) + rp, which fixes each band setwise.
inline Permutation psi(const CmpSpec& spec) {
  spec.validate();
  if (spec.p < 2) throw ValidationError("psi requires p >= 2");
  std::vector<Vertex> images(spec.order());
  for (Vertex v = 0; v < images.size(); ++v) {
    const std::size_t i = v % spec.p;
    images[v] = v - i + (spec.p - 1 - i);
  }
  return Permutation(std::move(images));
}

/// Sends v in M_i to (c(v)-1)p + i. Every block must carry each label 1..m
/// exactly once; otherwise NonRainbowBlock names the first repeated pair.
inline Permutation delta_from_labeling(const CmpSpec& spec, const Labeling& c) {
  const ModulePartition partition = module_partition(spec);
  if (c.size() != spec.order()) {
    throw ValidationError("labeling has " + std::to_string(c.size()) + " entries, C(m,p) has " +
                          std::to_string(spec.order()) + " vertices");
  }
  std::vector<Vertex> images(spec.order());
  for (std::size_t i = 0; i < spec.p; ++i) {
    const auto& block = partition.blocks[i];
    std::vector<std::optional<Vertex>> holder(spec.m + 1);
    for (Vertex v : block) {
      const std::size_t label = c[v];
      if (label > spec.m) {
        throw ValidationError("label " + std::to_string(label) + " of vertex " + std::to_string(v) +
                              " exceeds m = " + std::to_string(spec.m));
      }
      if (holder[label]) throw NonRainbowBlock(i, *holder[label], v);
      holder[label] = v;
      images[v] = (label - 1) * spec.p + i;
    }
  }
  return Permutation(std::move(images));
}

}  // namespace circdist

#endif  // CIRCDIST_AUTOMORPHISM_HPP_
