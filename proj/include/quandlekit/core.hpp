#pragma once

// Shared vocabulary for the quandlekit headers.
//
// Composition convention (used by every module): maps compose left to
// right.  compose(p, q) is "apply p, then q", i.e. x -> q(p(x)).  Group
// products of permutations follow the same rule, so in a group of
// permutations a * b means "apply a first".

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quandlekit {

using Element = std::uint32_t;
using Point = std::uint32_t;

/// Square table in row-major nested form, table[a][b] = a op b.
using Table = std::vector<std::vector<Element>>;

/// Exact group orders; symmetric groups on 81 points overflow 64 bits.
using BigOrder = boost::multiprecision::cpp_int;

/// Thrown when an input violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a size bound on an exhaustive search is exceeded.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Thrown when a Cayley table fails the group axioms.
class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parsers on malformed input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t checked_square(std::size_t n) {
  if (n != 0 && n > (std::size_t{1} << 16)) {
    throw BoundExceeded("table side " + std::to_string(n) + " is too large");
  }
  return n * n;
}

}  // namespace detail

}  // namespace quandlekit
