#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "quandlekit/core.hpp"

namespace quandlekit {

/// A bijection on {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  struct Unchecked {};

  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw PreconditionError("image array is not a bijection");
      }
      seen[p] = true;
    }
  }

  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  static Permutation identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return {std::move(img), Unchecked{}};
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> touched(degree, false);
    for (const auto& cyc : cycles) {
      std::vector<Point> c(cyc);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree || touched[c[i]]) {
          throw PreconditionError("cycles must be disjoint and within the degree");
        }
        touched[c[i]] = true;
        img[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return {std::move(img), Unchecked{}};
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return {std::move(inv), Unchecked{}};
  }

  std::optional<Point> smallest_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return static_cast<Point>(i);
    }
    return std::nullopt;
  }

  /// Order of the permutation as a group element (lcm of cycle lengths).
  std::size_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x -> q(p(x)): apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw PreconditionError("degree mismatch in compose");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q(p(static_cast<Point>(i)));
  return {std::move(img), Permutation::Unchecked{}};
}

/// One-line image array, e.g. "1 2 0".
inline std::string to_string(const Permutation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out << ' ';
    out << p(static_cast<Point>(i));
  }
  return out.str();
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t seed = p.degree();
    for (Point x : p.images()) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace quandlekit
