#pragma once

// Exhaustive enumeration of small quandles.  A quandle is determined by its
// columns S_b, each a permutation fixing b, subject to
//   S_c . S_b . S_c^-1 = S_{S_c(b)}   (function composition),
// which is right self-distributivity restated.  The search picks the
// smallest undetermined column, tries every permutation fixing it, and
// propagates the forced columns to a fixed point.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "quandlekit/quandle.hpp"
#include "quandlekit/symmetry.hpp"

namespace quandlekit {

namespace detail {

class QuandleEnumerator {
 public:
  explicit QuandleEnumerator(std::size_t n) : n_(n) {
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  template <class Visitor>
  void run(Visitor&& visit) {
    std::vector<std::optional<std::vector<Point>>> cols(n_);
    descend(cols, visit);
  }

 private:
  using Columns = std::vector<std::optional<std::vector<Point>>>;

  // S_c S_b S_c^-1 as a function: y -> S_c(S_b(S_c^-1(y))).
  std::vector<Point> conjugate(const std::vector<Point>& sc, const std::vector<Point>& sb) const {
    std::vector<Point> inv(n_), out(n_);
    for (Point y = 0; y < n_; ++y) inv[sc[y]] = y;
    for (Point y = 0; y < n_; ++y) out[y] = sc[sb[inv[y]]];
    return out;
  }

  bool propagate(Columns& cols) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Point c = 0; c < n_; ++c) {
        if (!cols[c]) continue;
        for (Point b = 0; b < n_; ++b) {
          if (!cols[b] || !cols[c]) continue;
          Point t = (*cols[c])[b];
          auto forced = conjugate(*cols[c], *cols[b]);
          if (cols[t]) {
            if (*cols[t] != forced) return false;
          } else {
            cols[t] = std::move(forced);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  template <class Visitor>
  void descend(Columns& cols, Visitor& visit) {
    auto open = std::find_if(cols.begin(), cols.end(), [](const auto& c) { return !c.has_value(); });
    if (open == cols.end()) {
      std::vector<Element> flat(n_ * n_);
      for (Point b = 0; b < n_; ++b) {
        for (Point a = 0; a < n_; ++a) flat[a * n_ + b] = (*cols[b])[a];
      }
      visit(Quandle::from_flat(n_, std::move(flat)));
      return;
    }
    const Point b = static_cast<Point>(open - cols.begin());
    for (const auto& p : perms_) {
      if (p[b] != b) continue;
      Columns next = cols;
      next[b] = p;
      if (propagate(next)) descend(next, visit);
    }
  }

  std::size_t n_;
  std::vector<std::vector<Point>> perms_;
};

/// Isomorphism-invariant fingerprint used to bucket candidates before the
/// exact isomorphism test.
inline std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>>
quandle_fingerprint(const Quandle& q) {
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>> fp;
  for (Element x = 0; x < q.order(); ++x) {
    std::size_t col = 0, row = 0;
    for (Element y = 0; y < q.order(); ++y) {
      col += q.op(y, x) == y;
      row += q.op(x, y) == x;
    }
    Permutation s = inner_translation(q, x);
    std::vector<bool> seen(q.order(), false);
    std::vector<std::size_t> cycles;
    for (Point i = 0; i < q.order(); ++i) {
      std::size_t len = 0;
      for (Point j = i; !seen[j]; j = s(j)) {
        seen[j] = true;
        ++len;
      }
      if (len) cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    fp.emplace_back(col, row, std::move(cycles));
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationOrder = 6;

/// Every quandle structure on {0..n-1} (labelled, not up to isomorphism),
/// in search order.
inline std::vector<Quandle> enumerate_quandles(std::size_t n) {
  if (n == 0) throw PreconditionError("order must be positive");
  if (n > kMaxEnumerationOrder) throw BoundExceeded("quandle enumeration limited to order 6");
  std::vector<Quandle> out;
  detail::QuandleEnumerator(n).run([&](Quandle q) { out.push_back(std::move(q)); });
  return out;
}

/// One representative per isomorphism class, the first met in search order.
inline std::vector<Quandle> enumerate_quandle_classes(std::size_t n) {
  if (n == 0) throw PreconditionError("order must be positive");
  if (n > kMaxEnumerationOrder) throw BoundExceeded("quandle enumeration limited to order 6");
  using Fingerprint = decltype(detail::quandle_fingerprint(Quandle{}));
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  std::vector<Quandle> reps;
  detail::QuandleEnumerator(n).run([&](Quandle q) {
    auto& bucket = buckets[detail::quandle_fingerprint(q)];
    for (std::size_t idx : bucket) {
      if (quandle_isomorphic(q, reps[idx])) return;
    }
    bucket.push_back(reps.size());
    reps.push_back(std::move(q));
  });
  return reps;
}

}  // namespace quandlekit
