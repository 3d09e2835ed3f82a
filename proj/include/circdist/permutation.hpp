#ifndef CIRCDIST_PERMUTATION_HPP_
#define CIRCDIST_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "circdist/error.hpp"
#include "circdist/graph.hpp"

namespace circdist {

/// Bijection on {0..n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ValidationError unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (Vertex v : images_) {
      if (v >= images_.size() || hit[v]) {
        throw ValidationError("image array is not a bijection on 0.." +
                              std::to_string(images_.size() == 0 ? 0 : images_.size() - 1));
      }
      hit[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{0});
    return Permutation(std::move(images), Unchecked{});
  }

  static Permutation transposition(std::size_t n, Vertex a, Vertex b) {
    if (a >= n || b >= n) throw ValidationError("transposition point out of range");
    Permutation t = identity(n);
    std::swap(t.images_[a], t.images_[b]);
    return t;
  }

  /// v -> v + shift (mod n).
  static Permutation rotation(std::size_t n, std::size_t shift) {
    std::vector<Vertex> images(n);
    for (Vertex v = 0; v < n; ++v) images[v] = (v + shift) % n;
    return Permutation(std::move(images), Unchecked{});
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const noexcept { return images_[v]; }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (Vertex v = 0; v < images_.size(); ++v) {
      if (images_[v] != v) return false;
    }
    return true;
  }

  /// Cycle notation without fixed points, e.g. "(0 5)(1 6 2)"; "()" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (Vertex start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += '(';
      Vertex v = start;
      do {
        if (v != start) out += ' ';
        out += std::to_string(v);
        seen[v] = true;
        v = images_[v];
      } while (v != start);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on image arrays.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Vertex> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Vertex> images_;
};

/// (a ∘ b)(v) = a(b(v)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("cannot compose permutations of degree " + std::to_string(a.degree()) +
                          " and " + std::to_string(b.degree()));
  }
  std::vector<Vertex> images(a.degree());
  for (Vertex v = 0; v < images.size(); ++v) images[v] = a(b(v));
  return Permutation(std::move(images), Permutation::Unchecked{});
}

inline Permutation inverse(const Permutation& a) {
  std::vector<Vertex> images(a.degree());
  for (Vertex v = 0; v < images.size(); ++v) images[a(v)] = v;
  return Permutation(std::move(images), Permutation::Unchecked{});
}

}  // namespace circdist

#endif  // CIRCDIST_PERMUTATION_HPP_
