#pragma once

// Inner and full automorphism groups of finite quandles, connectivity
// notions, isomorphism testing, and the map a -> S_a into Conj(Inn(X)).
//
// Two actions are kept apart throughout: k-transitivity of a quandle refers
// to Inn(X); aut_is_doubly_transitive refers to Aut(X).

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "quandlekit/perm_group.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

namespace detail {

/// Depth-first search for injective maps f : src -> dst with
/// f(a * b) = f(a) * f(b).  Points of src are assigned in increasing order
/// and candidate images are tried in increasing order.  A pair (a, b) is
/// checked as soon as a, b and a * b all have images.
class MapSearch {
 public:
  MapSearch(const Quandle& src, const Quandle& dst) : src_(src), dst_(dst), n_(src.order()) {
    closing_.resize(n_);
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        Element last = std::max({a, b, src.op(a, b)});
        closing_[last].emplace_back(a, b);
      }
    }
    src_sig_ = signatures(src);
    dst_sig_ = signatures(dst);
  }

  /// Calls visit(image) for each complete map extending `prefix`; stops
  /// early when visit returns false.  Returns false if stopped early.
  bool run(const std::vector<Point>& prefix, const std::function<bool(const std::vector<Point>&)>& visit) {
    if (dst_.order() != n_) return true;
    image_.assign(n_, 0);
    used_.assign(n_, false);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] >= n_ || used_[prefix[i]] || src_sig_[i] != dst_sig_[prefix[i]]) return true;
      image_[i] = prefix[i];
      used_[prefix[i]] = true;
      if (!consistent(static_cast<Element>(i))) return true;
    }
    visit_ = &visit;
    return descend(static_cast<Element>(prefix.size()));
  }

  std::optional<std::vector<Point>> first(const std::vector<Point>& prefix) {
    std::optional<std::vector<Point>> found;
    run(prefix, [&](const std::vector<Point>& f) {
      found = f;
      return false;
    });
    return found;
  }

 private:
  // Per-point invariants preserved by isomorphisms: fixed points of the
  // column S_x and of the row L_x.
  static std::vector<std::pair<std::size_t, std::size_t>> signatures(const Quandle& q) {
    std::vector<std::pair<std::size_t, std::size_t>> sig(q.order());
    for (Element x = 0; x < q.order(); ++x) {
      std::size_t col = 0, row = 0;
      for (Element y = 0; y < q.order(); ++y) {
        col += q.op(y, x) == y;
        row += q.op(x, y) == x;
      }
      sig[x] = {col, row};
    }
    return sig;
  }

  bool consistent(Element i) const {
    for (auto [a, b] : closing_[i]) {
      if (image_[src_.op(a, b)] != dst_.op(image_[a], image_[b])) return false;
    }
    return true;
  }

  bool descend(Element i) {
    if (i == n_) return (*visit_)(image_);
    for (Point c = 0; c < n_; ++c) {
      if (used_[c] || src_sig_[i] != dst_sig_[c]) continue;
      image_[i] = c;
      used_[c] = true;
      bool keep_going = !consistent(i) || descend(i + 1);
      used_[c] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  const Quandle& src_;
  const Quandle& dst_;
  std::size_t n_;
  std::vector<std::vector<std::pair<Element, Element>>> closing_;
  std::vector<std::pair<std::size_t, std::size_t>> src_sig_, dst_sig_;
  std::vector<Point> image_;
  std::vector<bool> used_;
  const std::function<bool(const std::vector<Point>&)>* visit_ = nullptr;
};

}  // namespace detail

/// Generated by all inner translations S_x.
inline PermGroup inner_group(const Quandle& x) {
  std::vector<Permutation> gens;
  for (Element a = 0; a < x.order(); ++a) gens.push_back(inner_translation(x, a));
  return PermGroup(x.order(), std::move(gens));
}

struct AutSearchOptions {
  std::size_t max_order = 81;
};

/// Aut(X) as a permutation group.  Generators are found level by level down
/// a stabilizer chain: for each point k (from the top down) and each image
/// y not yet in the orbit of k under the automorphisms found so far, the
/// backtracking search looks for one automorphism fixing 0..k-1 and sending
/// k to y.  The resulting order is exact.
inline PermGroup automorphism_group_backtrack(const Quandle& x, AutSearchOptions opt = {}) {
  const std::size_t n = x.order();
  if (n > opt.max_order) {
    throw BoundExceeded("quandle automorphism search limited to order " + std::to_string(opt.max_order));
  }
  detail::MapSearch search(x, x);
  std::vector<Permutation> gens;
  BigOrder expected = 1;
  for (std::size_t k = n; k-- > 0;) {
    std::vector<bool> in_orbit(n, false);
    for (Point p : PermGroup::orbit_of(gens, n, static_cast<Point>(k))) in_orbit[p] = true;
    std::vector<Point> prefix(k + 1);
    std::iota(prefix.begin(), prefix.end(), Point{0});
    for (Point y = static_cast<Point>(k) + 1; y < n; ++y) {
      if (in_orbit[y]) continue;
      prefix[k] = y;
      if (auto f = search.first(prefix)) {
        gens.emplace_back(*f, Permutation::Unchecked{});
        for (Point p : PermGroup::orbit_of(gens, n, static_cast<Point>(k))) in_orbit[p] = true;
      }
    }
    expected *= static_cast<unsigned>(std::count(in_orbit.begin(), in_orbit.end(), true));
  }
  PermGroup group(n, std::move(gens));
  if (group.order() != expected) throw std::logic_error("automorphism chain order mismatch");
  return group;
}

/// Every automorphism of X, sorted, via the same backtracking search.
inline std::vector<Permutation> enumerate_automorphisms(const Quandle& x) {
  detail::MapSearch search(x, x);
  std::vector<Permutation> out;
  search.run({}, [&](const std::vector<Point>& f) {
    out.emplace_back(f, Permutation::Unchecked{});
    return true;
  });
  return out;
}

/// Independent oracle: filters all |X|! bijections.
inline std::vector<Permutation> brute_force_aut(const Quandle& x) {
  if (x.order() > 7) throw BoundExceeded("brute-force automorphisms limited to order 7");
  std::vector<Point> f(x.order());
  std::iota(f.begin(), f.end(), Point{0});
  std::vector<Permutation> out;
  do {
    if (is_quandle_homomorphism(x, x, f)) out.emplace_back(f, Permutation::Unchecked{});
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

/// Inn(X) acts transitively.  Computed from the orbit of 0 under the inner
/// translations, which generate Inn(X).
inline bool is_connected(const Quandle& x) {
  std::vector<Permutation> gens;
  for (Element a = 0; a < x.order(); ++a) gens.push_back(inner_translation(x, a));
  return PermGroup::orbit_of(gens, x.order(), 0).size() == x.order();
}

/// Inn(X) acts 2-transitively.
inline bool is_two_point_homogeneous(const Quandle& x) {
  if (x.order() < 2) throw PreconditionError("two-point homogeneity needs at least two elements");
  return inner_group(x).is_k_transitive(2);
}

/// Aut(X) acts doubly transitively, decided as: Aut(X) is transitive and
/// the stabilizer of 0 is transitive on the remaining points.
inline bool aut_is_doubly_transitive(const PermGroup& aut) {
  const std::size_t n = aut.degree();
  if (aut.orbit(0).size() != n) return false;
  if (n < 2) return true;
  return aut.stabilizer(0).orbit(1).size() == n - 1;
}

inline bool aut_is_doubly_transitive(const Quandle& x) {
  PermGroup aut = automorphism_group_backtrack(x);
  return aut_is_doubly_transitive(aut);
}

inline std::optional<Permutation> quandle_isomorphic(const Quandle& x, const Quandle& y) {
  if (x.order() != y.order()) return std::nullopt;
  detail::MapSearch search(x, y);
  if (auto f = search.first({})) return Permutation(*f, Permutation::Unchecked{});
  return std::nullopt;
}

/// Report for the map a -> S_a into Conj(Inn(X)), where Conj uses
/// a * b = b^-1 a b with permutations multiplied left to right.
struct EmbeddingReport {
  std::vector<Permutation> images;
  PermGroup inner;
  std::optional<std::pair<Element, Element>> homomorphism_witness;
  std::optional<std::pair<Element, Element>> injectivity_witness;

  bool is_homomorphism() const noexcept { return !homomorphism_witness; }
  bool is_injective() const noexcept { return !injectivity_witness; }
  bool is_embedding() const noexcept { return is_homomorphism() && is_injective(); }
};

inline EmbeddingReport embed_in_conj_inn(const Quandle& x) {
  EmbeddingReport r;
  for (Element a = 0; a < x.order(); ++a) r.images.push_back(inner_translation(x, a));
  r.inner = PermGroup(x.order(), r.images);
  for (Element a = 0; a < x.order() && !r.homomorphism_witness; ++a) {
    for (Element b = 0; b < x.order(); ++b) {
      const Permutation& sb = r.images[b];
      if (compose(compose(sb.inverse(), r.images[a]), sb) != r.images[x.op(a, b)]) {
        r.homomorphism_witness = std::make_pair(a, b);
        break;
      }
    }
  }
  for (Element a = 0; a < x.order() && !r.injectivity_witness; ++a) {
    for (Element b = a + 1; b < x.order(); ++b) {
      if (r.images[a] == r.images[b]) {
        r.injectivity_witness = std::make_pair(a, b);
        break;
      }
    }
  }
  return r;
}

}  // namespace quandlekit
