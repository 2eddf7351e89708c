#pragma once

// Permutation groups backed by a deterministic Schreier-Sims stabilizer
// chain.  Base points are always the smallest point moved by the residue
// that needs a new level, so two runs on the same generator list build the
// same chain.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "quandlekit/core.hpp"
#include "quandlekit/permutation.hpp"

namespace quandlekit {

class PermGroup {
 public:
  /// One level of the stabilizer chain: the basic orbit of `base` under
  /// the strong generators fixing all earlier base points, with coset
  /// representatives rep(beta) mapping base to beta.
  struct Level {
    Point base = 0;
    std::vector<Permutation> strong_generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;

    const Permutation& rep(Point beta) const { return *transversal[beta]; }
    bool in_orbit(Point beta) const { return transversal[beta].has_value(); }
  };

  PermGroup() = default;

  /// Builds the group generated by `generators` on {0..degree-1}.
  PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (g.degree() != degree_) throw PreconditionError("generator degree mismatch");
    }
    for (const auto& g : generators_) add_generator(g);
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Level>& chain() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  BigOrder order() const {
    BigOrder o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  /// Order as a machine integer; throws BoundExceeded if it does not fit.
  std::uint64_t order_u64() const {
    BigOrder o = order();
    if (o > std::numeric_limits<std::uint64_t>::max()) {
      throw BoundExceeded("group order does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(o);
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw PreconditionError("degree mismatch in contains");
    auto [residue, level] = strip(p, 0);
    return level == levels_.size() && residue.is_identity();
  }

  /// Closure of {x} under the generators, sorted.
  std::vector<Point> orbit(Point x) const { return orbit_of(generators_, degree_, x); }

  static std::vector<Point> orbit_of(const std::vector<Permutation>& gens, std::size_t degree,
                                     Point x) {
    if (x >= degree) throw PreconditionError("point out of range");
    std::vector<bool> seen(degree, false);
    std::vector<Point> out{x};
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const auto& g : gens) {
        Point y = g(out[i]);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Point stabilizer, generated by the Schreier generators of the orbit
  /// of x.  Orbit-stabilizer is re-checked on the result.
  PermGroup stabilizer(Point x) const {
    if (x >= degree_) throw PreconditionError("point out of range");
    // The strong generators below the first level already generate G_x.
    if (!levels_.empty() && levels_[0].base == x) {
      return PermGroup(degree_, levels_.size() > 1 ? levels_[1].strong_generators
                                                   : std::vector<Permutation>{});
    }
    std::vector<std::optional<Permutation>> trans(degree_);
    std::vector<Point> orb{x};
    trans[x] = Permutation::identity(degree_);
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const auto& g : generators_) {
        Point y = g(orb[i]);
        if (!trans[y]) {
          trans[y] = compose(*trans[orb[i]], g);
          orb.push_back(y);
        }
      }
    }
    PermGroup stab = trivial(degree_);
    for (Point beta : orb) {
      for (const auto& g : generators_) {
        Permutation s = compose(compose(*trans[beta], g), trans[g(beta)]->inverse());
        if (!s.is_identity() && !stab.contains(s)) {
          stab.generators_.push_back(s);
          stab.add_generator(s);
        }
      }
    }
    if (stab.order() * orb.size() != order()) {
      throw std::logic_error("orbit-stabilizer identity violated");
    }
    return stab;
  }

  /// True iff the group acts k-transitively: the orbit of the tuple
  /// (0, 1, ..., k-1) under the generators covers every ordered k-tuple of
  /// distinct points.  Breadth-first search over encoded tuples.
  bool is_k_transitive(std::size_t k) const {
    if (k > degree_) throw PreconditionError("k exceeds the degree");
    if (k == 0) return true;
    const std::uint64_t n = degree_;
    long double space = 1;
    for (std::size_t i = 0; i < k; ++i) space *= static_cast<long double>(n);
    if (space > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
      throw BoundExceeded("tuple space too large for transitivity search");
    }
    std::uint64_t target = 1;
    for (std::size_t i = 0; i < k; ++i) target *= n - i;

    auto encode = [&](const std::vector<Point>& t) {
      std::uint64_t code = 0;
      for (Point p : t) code = code * n + p;
      return code;
    };
    auto decode = [&](std::uint64_t code) {
      std::vector<Point> t(k);
      for (std::size_t i = k; i-- > 0;) {
        t[i] = static_cast<Point>(code % n);
        code /= n;
      }
      return t;
    };

    std::vector<Point> start(k);
    std::iota(start.begin(), start.end(), Point{0});
    std::unordered_set<std::uint64_t> seen{encode(start)};
    std::deque<std::uint64_t> queue{encode(start)};
    std::vector<Point> image(k);
    while (!queue.empty() && seen.size() < target) {
      auto tuple = decode(queue.front());
      queue.pop_front();
      for (const auto& g : generators_) {
        for (std::size_t i = 0; i < k; ++i) image[i] = g(tuple[i]);
        auto code = encode(image);
        if (seen.insert(code).second) queue.push_back(code);
      }
    }
    return seen.size() == target;
  }

  /// Visits every group element exactly once, in chain order.
  template <class Visitor>
  void for_each_element(Visitor&& visit) const {
    Permutation id = Permutation::identity(degree_);
    if (levels_.empty()) {
      visit(id);
      return;
    }
    visit_level(levels_.size() - 1, id, visit);
  }

  std::vector<Permutation> elements(std::uint64_t limit = 5'000'000) const {
    if (order() > limit) throw BoundExceeded("group too large to list its elements");
    std::vector<Permutation> out;
    for_each_element([&](const Permutation& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Elements factor uniquely as rep_{k-1} * ... * rep_1 * rep_0 (apply the
  // deepest representative first).
  template <class Visitor>
  void visit_level(std::size_t level, const Permutation& prefix, Visitor& visit) const {
    for (Point beta : levels_[level].orbit) {
      Permutation next = compose(prefix, levels_[level].rep(beta));
      if (level == 0) {
        visit(next);
      } else {
        visit_level(level - 1, next, visit);
      }
    }
  }

  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t m = from; m < levels_.size(); ++m) {
      Point beta = g(levels_[m].base);
      if (!levels_[m].in_orbit(beta)) return {std::move(g), m};
      g = compose(g, levels_[m].rep(beta).inverse());
    }
    return {std::move(g), levels_.size()};
  }

  void rebuild_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.transversal.assign(degree_, std::nullopt);
    l.orbit.assign(1, l.base);
    l.transversal[l.base] = Permutation::identity(degree_);
    for (std::size_t j = 0; j < l.orbit.size(); ++j) {
      Point beta = l.orbit[j];
      for (const auto& s : l.strong_generators) {
        Point gamma = s(beta);
        if (!l.transversal[gamma]) {
          l.transversal[gamma] = compose(*l.transversal[beta], s);
          l.orbit.push_back(gamma);
        }
      }
    }
  }

  // Adds residue h (fixing the first `level` base points) as a strong
  // generator for levels [first, level], opening a new level if needed.
  void install(const Permutation& h, std::size_t first, std::size_t level) {
    if (level == levels_.size()) {
      Level fresh;
      fresh.base = *h.smallest_moved_point();
      levels_.push_back(std::move(fresh));
    }
    for (std::size_t l = first; l <= level; ++l) {
      levels_[l].strong_generators.push_back(h);
      rebuild_orbit(l);
    }
  }

  void add_generator(const Permutation& g) {
    auto [h, j] = strip(g, 0);
    if (j == levels_.size() && h.is_identity()) return;
    install(h, 0, j);
    close_from(j);
  }

  // Schreier-Sims main loop: ensures levels [0, start] are complete.
  void close_from(std::size_t start) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      bool extended = false;
      const std::size_t ui = static_cast<std::size_t>(i);
      for (std::size_t oi = 0; oi < levels_[ui].orbit.size() && !extended; ++oi) {
        Point beta = levels_[ui].orbit[oi];
        for (std::size_t si = 0; si < levels_[ui].strong_generators.size(); ++si) {
          const Permutation& s = levels_[ui].strong_generators[si];
          Point gamma = s(beta);
          Permutation sch =
              compose(compose(levels_[ui].rep(beta), s), levels_[ui].rep(gamma).inverse());
          if (sch.is_identity()) continue;
          auto [h, j] = strip(std::move(sch), ui + 1);
          if (j < levels_.size() || !h.is_identity()) {
            install(h, ui + 1, j);
            i = static_cast<std::ptrdiff_t>(j);
            extended = true;
            break;
          }
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

inline PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

inline std::string to_string(const PermGroup& g) {
  std::string out = std::to_string(g.degree()) + "\n" + std::to_string(g.generators().size()) + "\n";
  for (const auto& p : g.generators()) out += to_string(p) + "\n";
  return out;
}

}  // namespace quandlekit
