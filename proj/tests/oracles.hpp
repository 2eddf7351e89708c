#pragma once

// Reference implementations for the test suites.  Each one works from raw
// operation tables by exhaustive enumeration and shares no search code with
// the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "quandlekit/finite_group.hpp"
#include "quandlekit/quandle.hpp"

namespace oracle {

using quandlekit::Element;
using quandlekit::FiniteGroup;
using quandlekit::Quandle;
using Map = std::vector<std::uint32_t>;

inline bool group_hom(const FiniteGroup& g, const Map& f) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (f[g.mul(a, b)] != g.mul(f[a], f[b])) return false;
    }
  }
  return true;
}

/// Every bijection fixing the identity, filtered by the homomorphism law.
inline std::vector<Map> group_automorphisms(const FiniteGroup& g) {
  if (g.order() > 10) throw std::length_error("bijection oracle limited to order 10");
  Map f(g.order());
  std::iota(f.begin(), f.end(), 0u);
  std::vector<Map> out;
  do {
    if (group_hom(g, f)) out.push_back(f);
  } while (std::next_permutation(f.begin() + 1, f.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Mixed-radix coordinates, last factor fastest, independent of the library.
inline std::vector<std::vector<std::uint32_t>> coords(const std::vector<std::uint32_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(factors.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = i;
    for (std::size_t k = factors.size(); k-- > 0;) {
      out[i][k] = static_cast<std::uint32_t>(r % factors[k]);
      r /= factors[k];
    }
  }
  return out;
}

/// Automorphisms of Z/f1 x ... x Z/fr counted by trying every tuple of
/// images for the unit vectors and keeping those that induce a
/// well-defined bijective homomorphism (checked on the full table).
inline std::vector<Map> abelian_automorphisms(const FiniteGroup& g, const std::vector<std::uint32_t>& factors) {
  const auto c = coords(factors);
  const std::size_t n = c.size(), r = factors.size();
  if (n != g.order()) throw std::invalid_argument("factor list does not match the group");
  auto scaled_sum = [&](const std::vector<Element>& imgs, const std::vector<std::uint32_t>& x) {
    Element acc = 0;
    for (std::size_t k = 0; k < r; ++k) {
      for (std::uint32_t t = 0; t < x[k]; ++t) acc = g.mul(acc, imgs[k]);
    }
    return acc;
  };
  std::vector<Map> out;
  std::vector<Element> imgs(r, 0);
  while (true) {
    Map f(n);
    for (std::size_t a = 0; a < n; ++a) f[a] = scaled_sum(imgs, c[a]);
    std::vector<bool> hit(n, false);
    bool bijective = true;
    for (auto v : f) {
      if (hit[v]) bijective = false;
      hit[v] = true;
    }
    if (bijective && group_hom(g, f)) out.push_back(f);
    std::size_t k = 0;
    while (k < r && ++imgs[k] == n) imgs[k++] = 0;
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |Aut| of a finite abelian group from its factor list.  For the p-part
/// Z/p^e1 x ... x Z/p^ek with e1 <= ... <= ek, and d_j / c_j the largest /
/// smallest index l with e_l = e_j:
///   prod_j (p^d_j - p^(j-1)) * p^(e_j (k - d_j)) * p^((e_j - 1)(k - c_j + 1)).
inline std::uint64_t abelian_aut_formula(const std::vector<std::uint32_t>& factors) {
  auto ipow = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_prime;
  for (auto f : factors) {
    std::uint32_t m = f;
    for (std::uint32_t p = 2; p <= m; ++p) {
      std::uint32_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e) by_prime[p].push_back(e);
    }
  }
  std::uint64_t total = 1;
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end());
    const std::size_t k = es.size();
    for (std::size_t j = 1; j <= k; ++j) {
      std::size_t d = 0, c = k + 1;
      for (std::size_t l = 1; l <= k; ++l) {
        if (es[l - 1] != es[j - 1]) continue;
        d = std::max(d, l);
        c = std::min(c, l);
      }
      const std::uint64_t e = es[j - 1];
      total *= ipow(p, d) - ipow(p, j - 1);
      total *= ipow(p, e * (k - d));
      total *= ipow(p, (e - 1) * (k - c + 1));
    }
  }
  return total;
}

inline std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

inline std::size_t element_order(const FiniteGroup& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

/// Every element of the closure of `gens` (images vectors), by repeated
/// multiplication until nothing new appears.
inline std::set<Map> closure(std::size_t degree, const std::vector<Map>& gens) {
  Map id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Map> seen{id};
  std::vector<Map> frontier{id};
  while (!frontier.empty()) {
    std::vector<Map> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Map y(degree);
        for (std::size_t i = 0; i < degree; ++i) y[i] = s[x[i]];
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline Map column(const Quandle& q, Element b) {
  Map s(q.order());
  for (Element y = 0; y < q.order(); ++y) s[y] = q.op(y, b);
  return s;
}

inline std::vector<Map> columns(const Quandle& q) {
  std::vector<Map> out;
  for (Element b = 0; b < q.order(); ++b) out.push_back(column(q, b));
  return out;
}

inline bool quandle_hom(const Quandle& x, const Map& f) {
  for (Element a = 0; a < x.order(); ++a) {
    for (Element b = 0; b < x.order(); ++b) {
      if (f[x.op(a, b)] != x.op(f[a], f[b])) return false;
    }
  }
  return true;
}

inline std::vector<Map> quandle_automorphisms(const Quandle& x) {
  if (x.order() > 8) throw std::length_error("bijection oracle limited to order 8");
  Map f(x.order());
  std::iota(f.begin(), f.end(), 0u);
  std::vector<Map> out;
  do {
    if (quandle_hom(x, f)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

/// k-transitivity from an explicit element list: count images of (0..k-1).
inline bool k_transitive(std::size_t degree, const std::set<Map>& elements, std::size_t k) {
  std::set<std::vector<std::uint32_t>> images;
  for (const auto& g : elements) images.insert(std::vector<std::uint32_t>(g.begin(), g.begin() + k));
  std::size_t target = 1;
  for (std::size_t i = 0; i < k; ++i) target *= degree - i;
  return images.size() == target;
}

inline bool axioms_hold(const Quandle& q) {
  const std::size_t n = q.order();
  for (Element a = 0; a < n; ++a) {
    if (q.op(a, a) != a) return false;
  }
  for (Element b = 0; b < n; ++b) {
    std::set<Element> col;
    for (Element a = 0; a < n; ++a) col.insert(q.op(a, b));
    if (col.size() != n) return false;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c))) return false;
      }
    }
  }
  return true;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

}  // namespace oracle
