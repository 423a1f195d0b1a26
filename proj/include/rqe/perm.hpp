#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rqe/errors.hpp"

namespace rqe {

// Points are 0-based internally; all text I/O is 1-based.
using Point = std::uint8_t;

inline constexpr unsigned kMaxDegree = 255;

// A permutation of {0..n-1} stored as its image array. Permutations act on
// the right: the product a*b means "apply a first, then b", so x·(a*b) =
// (x·a)·b and conjugation g^f = f⁻¹gf relabels the cycles of g by f.
//
// Comparison is lexicographic on image tuples; the identity is the minimum
// of every symmetric group.
class Perm {
public:
  Perm() = default; // degree 0

  explicit Perm(unsigned degree) {
    if (degree > kMaxDegree)
      throw ConfigError("permutation degree exceeds " + std::to_string(kMaxDegree));
    images_.resize(degree);
    for (unsigned i = 0; i < degree; ++i)
      images_[i] = Point(i);
  }

  // Validates that `images` is a bijection on {0..n-1}.
  static Perm from_images(std::vector<Point> images);

  unsigned degree() const { return unsigned(images_.size()); }
  Point apply(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (unsigned i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  // Right-action product: apply *this first, then rhs.
  Perm operator*(const Perm& rhs) const;

  Perm inverse() const;

  // f⁻¹ · *this · f, computed pointwise without materializing f⁻¹.
  Perm conjugated_by(const Perm& f) const;

  unsigned order() const;

  // All cycle lengths (fixed points included), sorted ascending.
  std::vector<unsigned> cycle_type() const;

  std::string to_image_string() const;  // "3 1 2"
  std::string to_cycle_string() const;  // "(1,3,2)", identity prints "()"

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<Point> images_;
};

inline Perm compose(const Perm& a, const Perm& b) { return a * b; }
inline Perm conjugate(const Perm& g, const Perm& f) { return g.conjugated_by(f); }

// Accepts either an image array ("3 1 2") or cycle notation ("(1,3,2)",
// "()" for the identity). `degree` fixes the degree for cycle input and is
// validated against image input; throws FormatError on malformed text.
Perm parse_perm(std::string_view text, unsigned degree);
Perm parse_cycles(std::string_view text, unsigned degree);
Perm parse_images(std::string_view text, unsigned degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes
    std::uint64_t h = 1469598103934665603ull;
    for (Point b : p.images()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

} // namespace rqe
