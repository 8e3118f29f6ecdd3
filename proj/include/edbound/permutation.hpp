#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace edbound {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1}.  Composition reads right to left:
/// (p * q)(x) = p(q(x)).  Ordering is lexicographic on the image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws kValidation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<Point>& images() const noexcept { return images_; }
  Point operator()(Point x) const { return images_[x]; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)"; "()" for identity.
  std::string to_cycles() const;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// p after q.  Throws kDegreeMismatch on unequal degrees.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace edbound
