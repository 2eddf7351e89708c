#pragma once

// Text formats.
//   .grp / .qnd : line 1 = order n, then n lines of n space-separated
//                 indices (row a holds a op b for b = 0..n-1).
//   permutation : one line of images, "1 2 0".
//   perm group  : degree, generator count, one generator per line.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "quandlekit/finite_group.hpp"
#include "quandlekit/perm_group.hpp"
#include "quandlekit/permutation.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::uint64_t> parse_indices(const std::string& line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError("line " + std::to_string(lineno) + ": expected non-negative integers");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line, or throws ParseError naming what was expected.
  std::vector<std::uint64_t> next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError("unexpected end of input: expected " + std::string(what));
    ++lineno_;
    return parse_indices(line, lineno_);
  }

  std::string next_raw(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError("unexpected end of input: expected " + std::string(what));
    ++lineno_;
    return line;
  }

  /// Only blank lines may follow.
  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw ParseError("line " + std::to_string(lineno_) + ": trailing content");
      }
    }
  }

  std::size_t line() const noexcept { return lineno_; }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

inline Table read_square(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next("order");
  if (header.size() != 1) throw ParseError("line 1: expected a single order");
  if (header[0] == 0) throw ParseError("line 1: order must be positive");
  const std::size_t n = header[0];
  checked_square(n);
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    auto row = reader.next("table row");
    if (row.size() != n) {
      throw ParseError("line " + std::to_string(reader.line()) + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] >= n) throw ParseError("line " + std::to_string(reader.line()) + ": entry out of range");
      t[a][b] = static_cast<Element>(row[b]);
    }
  }
  reader.expect_end();
  return t;
}

inline void write_square(std::ostream& out, std::size_t n, const std::vector<Element>& flat) {
  out << n << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out << (b ? " " : "") << flat[a * n + b];
    out << '\n';
  }
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

}  // namespace detail

inline FiniteGroup read_group(std::istream& in) { return FiniteGroup::from_table(detail::read_square(in)); }

inline void write_group(std::ostream& out, const FiniteGroup& g) { detail::write_square(out, g.order(), g.flat_table()); }

/// Throws AxiomViolation for tables that are not quandles.
inline Quandle read_quandle(std::istream& in) { return validate_axioms(detail::read_square(in)); }

inline void write_quandle(std::ostream& out, const Quandle& q) { detail::write_square(out, q.order(), q.flat_table()); }

inline FiniteGroup load_group(const std::string& path) {
  auto in = detail::open_in(path);
  return read_group(in);
}

inline Quandle load_quandle(const std::string& path) {
  auto in = detail::open_in(path);
  return read_quandle(in);
}

inline void save_group(const std::string& path, const FiniteGroup& g) {
  auto out = detail::open_out(path);
  write_group(out, g);
  if (!out) throw IoError("write failed: " + path);
}

inline void save_quandle(const std::string& path, const Quandle& q) {
  auto out = detail::open_out(path);
  write_quandle(out, q);
  if (!out) throw IoError("write failed: " + path);
}

inline Permutation parse_permutation(const std::string& line) {
  auto values = detail::parse_indices(line, 1);
  std::vector<Point> img;
  for (auto v : values) {
    if (v > std::numeric_limits<Point>::max()) throw ParseError("permutation image out of range");
    img.push_back(static_cast<Point>(v));
  }
  try {
    return Permutation(std::move(img));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_permutation(const Permutation& p) { return to_string(p); }

inline void write_perm_group(std::ostream& out, const PermGroup& g) { out << to_string(g); }

/// Reads degree and generators; the stabilizer chain is rebuilt.
inline PermGroup read_perm_group(std::istream& in) {
  detail::LineReader reader(in);
  auto degree = reader.next("degree");
  auto count = reader.next("generator count");
  if (degree.size() != 1 || count.size() != 1) throw ParseError("expected degree and generator count");
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i < count[0]; ++i) {
    Permutation p = parse_permutation(reader.next_raw("generator"));
    if (p.degree() != degree[0]) throw ParseError("generator " + std::to_string(i) + " has the wrong degree");
    gens.push_back(std::move(p));
  }
  reader.expect_end();
  return PermGroup(degree[0], std::move(gens));
}

}  // namespace quandlekit
