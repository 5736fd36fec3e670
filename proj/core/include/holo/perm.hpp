#ifndef HOLO_PERM_HPP
#define HOLO_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace holo {

/// Index of a point (or of a group element when permutations act on a group).
using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1} stored as its image table:
/// images[i] is where point i goes.
///
/// Composition convention: (p * q)(i) = p(q(i)), i.e. the right factor acts
/// first. All regular representations are defined against this convention.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Swaps a and b, fixes everything else.
  static Perm transposition(std::size_t degree, Point a, Point b);
  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;
  /// Non-trivial cycles, each rotated to start at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  /// "(0 1 2)(3 4)" style; "()" for the identity.
  std::string cycle_string() const;

  Perm operator*(const Perm& rhs) const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  friend Perm compose(const Perm& p, const Perm& q);

  std::vector<Point> images_;
};

/// (p * q)(i) = p(q(i)); throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

/// g * s * g^-1.
Perm conjugate(const Perm& g, const Perm& s);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace holo

#endif
