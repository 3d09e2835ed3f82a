#ifndef CIRCDIST_ERROR_HPP_
#define CIRCDIST_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circdist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (malformed generator set,
/// out-of-range parameters, labels outside the allowed range, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The automorphism search produced more elements than the caller allowed.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("automorphism cap exceeded (cap = " + std::to_string(cap) + ")"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// No distinguishing labeling exists with at most `bound` labels.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(std::size_t bound)
      : Error("no distinguishing labeling with at most " +
              std::to_string(bound) + " labels"),
        bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// A block of the module partition carries a repeated label, so the
/// labeling-sort permutation is undefined. The two vertices form a
/// label-preserving transposition.
class NonRainbowBlock : public ValidationError {
 public:
  NonRainbowBlock(std::size_t block, std::size_t first, std::size_t second)
      : ValidationError("non-rainbow block M_" + std::to_string(block) +
                        ": vertices " + std::to_string(first) + " and " +
                        std::to_string(second) + " share a label"),
        block_(block),
        first_(first),
        second_(second) {}

  std::size_t block() const noexcept { return block_; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t block_;
  std::size_t first_;
  std::size_t second_;
};

}  // namespace circdist

#endif  // CIRCDIST_ERROR_HPP_
