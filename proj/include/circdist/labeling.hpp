#ifndef CIRCDIST_LABELING_HPP_
#define CIRCDIST_LABELING_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "circdist/error.hpp"
#include "circdist/graph.hpp"

namespace circdist {

/// Vertex labeling c : V -> {1..r}.
class Labeling {
 public:
  Labeling() = default;

  Labeling(std::size_t r, std::vector<std::size_t> labels) : r_(r), labels_(std::move(labels)) {
    for (Vertex v = 0; v < labels_.size(); ++v) {
      if (labels_[v] < 1 || labels_[v] > r_) {
        throw ValidationError("label " + std::to_string(labels_[v]) + " of vertex " + std::to_string(v) +
                              " outside 1.." + std::to_string(r_));
      }
    }
  }

  /// Uses r = largest label present.
  static Labeling from_labels(std::vector<std::size_t> labels) {
    const std::size_t r = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    return Labeling(r, std::move(labels));
  }

  std::size_t r() const noexcept { return r_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t operator[](Vertex v) const noexcept { return labels_[v]; }
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }

  /// Number of distinct labels actually used.
  std::size_t distinct_count() const {
    std::vector<std::size_t> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::size_t> labels_;
};

}  // namespace circdist

#endif  // CIRCDIST_LABELING_HPP_
