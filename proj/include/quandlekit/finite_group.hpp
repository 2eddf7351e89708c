#pragma once

// Finite groups as Cayley tables.  The identity is always element 0.
// Products of permutation-built groups (make_symmetric) are left to right:
// a * b applies a first.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quandlekit/core.hpp"

namespace quandlekit {

/// Cyclic factor orders plus the coordinate tuple of every element, kept
/// for groups built by make_abelian.
struct AbelianCoordinates {
  std::vector<std::uint32_t> factors;
  std::vector<std::vector<std::uint32_t>> coords;
};

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}, {}, "1", false) {}

  /// Validates identity, Latin-square and associativity laws.
  static FiniteGroup from_table(const Table& table, std::vector<std::string> labels = {},
                                std::string name = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw InvalidGroup("group must be nonempty");
    std::vector<Element> flat;
    flat.reserve(detail::checked_square(n));
    for (const auto& row : table) {
      if (row.size() != n) throw InvalidGroup("table is not square");
      for (Element e : row) {
        if (e >= n) throw InvalidGroup("table entry out of range");
        flat.push_back(e);
      }
    }
    return FiniteGroup(n, std::move(flat), std::move(labels), std::move(name), true);
  }

  /// Trusted constructor for tables produced by this library.
  static FiniteGroup from_flat_unchecked(std::size_t n, std::vector<Element> flat,
                                         std::vector<std::string> labels, std::string name) {
    return FiniteGroup(n, std::move(flat), std::move(labels), std::move(name), false);
  }

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }

  /// a^k for k >= 0.
  Element pow(Element a, std::size_t k) const {
    Element r = 0;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
      }
    }
    return true;
  }

  Table table() const {
    Table t(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
    }
    return t;
  }

  const std::vector<Element>& flat_table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<AbelianCoordinates>& abelian_coordinates() const noexcept { return coords_; }

  std::string label(Element a) const {
    return a < labels_.size() ? labels_[a] : std::to_string(a);
  }

  FiniteGroup& set_abelian_coordinates(AbelianCoordinates c) {
    coords_ = std::move(c);
    return *this;
  }

  FiniteGroup& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(std::size_t n, std::vector<Element> flat, std::vector<std::string> labels,
              std::string name, bool validate)
      : n_(n), table_(std::move(flat)), labels_(std::move(labels)), name_(std::move(name)) {
    if (validate) check_axioms();
    inverse_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (table_[a * n_ + b] == 0) {
          inverse_[a] = static_cast<Element>(b);
          break;
        }
      }
    }
  }

  void check_axioms() const {
    for (std::size_t a = 0; a < n_; ++a) {
      if (table_[a] != a || table_[a * n_] != a) {
        throw InvalidGroup("element 0 is not the identity (row/column " + std::to_string(a) + ")");
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      std::vector<bool> row(n_, false), col(n_, false);
      for (std::size_t b = 0; b < n_; ++b) {
        Element r = table_[a * n_ + b], c = table_[b * n_ + a];
        if (row[r] || col[c]) {
          throw InvalidGroup("row or column " + std::to_string(a) + " is not a permutation");
        }
        row[r] = col[c] = true;
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        const Element ab = table_[a * n_ + b];
        for (std::size_t c = 0; c < n_; ++c) {
          if (table_[ab * n_ + c] != table_[a * n_ + table_[b * n_ + c]]) {
            throw InvalidGroup("associativity fails at (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
  std::optional<AbelianCoordinates> coords_;
};

// ---------------------------------------------------------------------------
// Maps between groups

/// images[a] is the image of element a.
struct GroupMap {
  std::vector<Element> images;
  std::size_t codomain_order = 0;

  std::size_t domain_order() const noexcept { return images.size(); }
  Element operator()(Element a) const { return images[a]; }

  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;
  friend bool operator==(const GroupMap&, const GroupMap&) = default;
};

inline GroupMap identity_map(const FiniteGroup& g) {
  GroupMap m{std::vector<Element>(g.order()), g.order()};
  std::iota(m.images.begin(), m.images.end(), Element{0});
  return m;
}

/// a -> a^-1; an automorphism exactly when the group is abelian.
inline GroupMap inversion_map(const FiniteGroup& g) {
  GroupMap m{std::vector<Element>(g.order()), g.order()};
  for (Element a = 0; a < g.order(); ++a) m.images[a] = g.inverse(a);
  return m;
}

/// a -> a^u (multiplication by the integer u in additive notation).
inline GroupMap power_map(const FiniteGroup& g, long long u) {
  GroupMap m{std::vector<Element>(g.order()), g.order()};
  for (Element a = 0; a < g.order(); ++a) {
    long long k = static_cast<long long>(g.element_order(a));
    long long e = ((u % k) + k) % k;
    m.images[a] = g.pow(a, static_cast<std::size_t>(e));
  }
  return m;
}

/// a -> g^-1 a g.
inline GroupMap conjugation_map(const FiniteGroup& g, Element by) {
  GroupMap m{std::vector<Element>(g.order()), g.order()};
  for (Element a = 0; a < g.order(); ++a) m.images[a] = g.mul(g.mul(g.inverse(by), a), by);
  return m;
}

/// x -> g(f(x)).
inline GroupMap compose(const GroupMap& f, const GroupMap& g) {
  if (f.codomain_order != g.domain_order()) throw PreconditionError("map composition mismatch");
  GroupMap m{std::vector<Element>(f.domain_order()), g.codomain_order};
  for (std::size_t a = 0; a < f.domain_order(); ++a) m.images[a] = g(f(static_cast<Element>(a)));
  return m;
}

inline GroupMap inverse(const GroupMap& f) {
  GroupMap m{std::vector<Element>(f.domain_order()), f.domain_order()};
  for (std::size_t a = 0; a < f.domain_order(); ++a) m.images[f.images[a]] = static_cast<Element>(a);
  return m;
}

inline bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod, const GroupMap& f) {
  if (f.domain_order() != dom.order() || f.codomain_order != cod.order()) return false;
  for (Element x : f.images) {
    if (x >= cod.order()) return false;
  }
  if (f(0) != 0) return false;
  for (Element a = 0; a < dom.order(); ++a) {
    for (Element b = 0; b < dom.order(); ++b) {
      if (f(dom.mul(a, b)) != cod.mul(f(a), f(b))) return false;
    }
  }
  return true;
}

inline bool is_bijective(const GroupMap& f) {
  if (f.domain_order() != f.codomain_order) return false;
  std::vector<bool> hit(f.codomain_order, false);
  for (Element x : f.images) {
    if (x >= f.codomain_order || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

inline bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  return is_bijective(f) && is_homomorphism(g, g, f);
}

namespace detail {
inline void require_automorphism(const FiniteGroup& g, const GroupMap& f) {
  if (!is_automorphism(g, f)) throw PreconditionError("map is not an automorphism of the group");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

inline FiniteGroup make_abelian(const std::vector<std::uint32_t>& factors) {
  for (auto f : factors) {
    if (f == 0) throw PreconditionError("cyclic factor orders must be positive");
  }
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  detail::checked_square(n);
  // Lexicographic order on coordinate tuples: last coordinate varies fastest.
  AbelianCoordinates ac{factors, std::vector<std::vector<std::uint32_t>>(n)};
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::vector<std::uint32_t> c(factors.size());
    std::size_t rest = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % factors[i]);
      rest /= factors[i];
    }
    ac.coords[idx] = std::move(c);
  }
  auto index_of = [&](const std::vector<std::uint32_t>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + c[i];
    return static_cast<Element>(idx);
  };
  std::vector<Element> flat(n * n);
  std::vector<std::uint32_t> sum(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        sum[i] = (ac.coords[a][i] + ac.coords[b][i]) % factors[i];
      }
      flat[a * n + b] = index_of(sum);
    }
  }
  std::vector<std::string> labels(n);
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    name += (i ? " x Z/" : "Z/") + std::to_string(factors[i]);
  }
  if (factors.empty()) name = "1";
  for (std::size_t a = 0; a < n; ++a) {
    if (factors.size() == 1) {
      labels[a] = std::to_string(ac.coords[a][0]);
      continue;
    }
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      s += (i ? "," : "") + std::to_string(ac.coords[a][i]);
    }
    labels[a] = s + ")";
  }
  auto g = FiniteGroup::from_flat_unchecked(n, std::move(flat), std::move(labels), name);
  g.set_abelian_coordinates(std::move(ac));
  return g;
}

inline FiniteGroup make_cyclic(std::uint32_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  return make_abelian({n});
}

/// All permutations of n letters in lexicographic order; identity first.
inline FiniteGroup make_symmetric(std::uint32_t n) {
  if (n == 0) throw PreconditionError("symmetric group degree must be positive");
  if (n > 6) throw BoundExceeded("make_symmetric supports n <= 6");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::uint32_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  const std::size_t order = perms.size();
  std::vector<Element> flat(order * order);
  std::vector<std::uint32_t> prod(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::uint32_t x = 0; x < n; ++x) prod[x] = perms[b][perms[a][x]];
      flat[a * order + b] = index.at(prod);
    }
  }
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? " " : "") + std::to_string(q[i]);
    labels.push_back(s + "]");
  }
  return FiniteGroup::from_flat_unchecked(order, std::move(flat), std::move(labels),
                                          "S" + std::to_string(n));
}

/// Subgroup of a group given as a closed element subset containing 0;
/// elements are renumbered in increasing original index.
inline FiniteGroup subgroup(const FiniteGroup& g, std::vector<Element> members, std::string name) {
  std::sort(members.begin(), members.end());
  if (members.empty() || members.front() != 0) throw PreconditionError("subgroup must contain 0");
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<std::int64_t>(i);
  const std::size_t m = members.size();
  std::vector<Element> flat(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.label(members[i]));
    for (std::size_t j = 0; j < m; ++j) {
      auto p = pos[g.mul(members[i], members[j])];
      if (p < 0) throw PreconditionError("subset is not closed under multiplication");
      flat[i * m + j] = static_cast<Element>(p);
    }
  }
  return FiniteGroup::from_flat_unchecked(m, std::move(flat), std::move(labels), std::move(name));
}

/// Even permutations inside make_symmetric(n).
inline FiniteGroup make_alternating(std::uint32_t n) {
  FiniteGroup s = make_symmetric(n);
  std::vector<Element> even;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  Element idx = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    if (inversions % 2 == 0) even.push_back(idx);
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  return subgroup(s, std::move(even), "A" + std::to_string(n));
}

/// Element (g, h) has index g + |G| * h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name = {}) {
  const std::size_t n = g.order() * h.order();
  detail::checked_square(n);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element ga = static_cast<Element>(a % g.order()), ha = static_cast<Element>(a / g.order());
      Element gb = static_cast<Element>(b % g.order()), hb = static_cast<Element>(b / g.order());
      flat[a * n + b] = static_cast<Element>(g.mul(ga, gb) + g.order() * h.mul(ha, hb));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = "(" + g.label(static_cast<Element>(a % g.order())) + "," +
                h.label(static_cast<Element>(a / g.order())) + ")";
  }
  if (name.empty()) name = g.name() + " x " + h.name();
  return FiniteGroup::from_flat_unchecked(n, std::move(flat), std::move(labels), std::move(name));
}

/// N x| Z/k where the generator of Z/k acts on N by `action`:
/// (n1, j1)(n2, j2) = (n1 * action^j1(n2), j1 + j2 mod k).  Element (n, j)
/// has index n + |N| * j.  Requires action^k = id.
inline FiniteGroup semidirect_cyclic(const FiniteGroup& normal, const GroupMap& action,
                                     std::uint32_t k, std::string name) {
  detail::require_automorphism(normal, action);
  if (k == 0) throw PreconditionError("complement order must be positive");
  std::vector<GroupMap> powers{identity_map(normal)};
  for (std::uint32_t j = 1; j <= k; ++j) powers.push_back(compose(powers.back(), action));
  if (powers[k] != powers[0]) throw PreconditionError("action order must divide k");
  const std::size_t m = normal.order(), n = m * k;
  detail::checked_square(n);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element na = static_cast<Element>(a % m), nb = static_cast<Element>(b % m);
      std::size_t ja = a / m, jb = b / m;
      flat[a * n + b] = static_cast<Element>(normal.mul(na, powers[ja](nb)) + m * ((ja + jb) % k));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = normal.label(static_cast<Element>(a % m)) + "." + std::to_string(a / m);
  }
  return FiniteGroup::from_flat_unchecked(n, std::move(flat), std::move(labels), std::move(name));
}

/// Dihedral group of order 2n: Z/n x| Z/2 acting by negation.
inline FiniteGroup make_dihedral_group(std::uint32_t n) {
  FiniteGroup c = make_cyclic(n);
  return semidirect_cyclic(c, inversion_map(c), 2, "D" + std::to_string(n));
}

/// Dicyclic group of order 4m: <a, x | a^2m = 1, x^2 = a^m, x^-1 a x = a^-1>.
/// Element a^k x^j has index k + 2m j.
inline FiniteGroup make_dicyclic(std::uint32_t m) {
  if (m == 0) throw PreconditionError("dicyclic parameter must be positive");
  const std::uint32_t two_m = 2 * m;
  const std::size_t n = 2 * static_cast<std::size_t>(two_m);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t k1 = a % two_m, j1 = static_cast<std::uint32_t>(a / two_m);
      std::uint32_t k2 = b % two_m, j2 = static_cast<std::uint32_t>(b / two_m);
      std::uint32_t k, j;
      if (j1 == 0) {
        k = (k1 + k2) % two_m;
        j = j2;
      } else if (j2 == 0) {
        k = (k1 + two_m - k2) % two_m;
        j = 1;
      } else {
        k = (k1 + two_m - k2 + m) % two_m;
        j = 0;
      }
      flat[a * n + b] = k + two_m * j;
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = a % two_m;
    labels[a] = (k ? "a^" + std::to_string(k) : std::string("1")) + (a >= two_m ? "x" : "");
  }
  std::string name = m == 2 ? "Q8" : (m == 4 ? "Q16" : "Dic" + std::to_string(m));
  return FiniteGroup::from_flat_unchecked(n, std::move(flat), std::move(labels), name);
}

inline FiniteGroup make_quaternion8() {
  FiniteGroup q = make_dicyclic(2);
  // a = i, x = j: index k + 4j for i^k j^j.
  return FiniteGroup::from_flat_unchecked(
      8, q.flat_table(), {"1", "i", "-1", "-i", "j", "k", "-j", "-k"}, "Q8");
}

// ---------------------------------------------------------------------------
// Queries

inline std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

inline bool in_sorted(const std::vector<Element>& set, Element x) {
  return std::binary_search(set.begin(), set.end(), x);
}

/// Closure of a subset under multiplication, sorted.
inline std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// Greedy generating set: repeatedly add the smallest element outside the
/// subgroup generated so far.
inline std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<Element> closure{0};
  while (closure.size() < g.order()) {
    Element next = 0;
    while (in_sorted(closure, next)) ++next;
    gens.push_back(next);
    closure = generated_subgroup(g, gens);
  }
  return gens;
}

/// Elementary abelian p-group test: abelian, nontrivial, and every
/// non-identity element has the same prime order.
inline bool is_elementary_abelian(const FiniteGroup& g) {
  if (g.order() < 2 || !g.is_abelian()) return false;
  const std::size_t p = g.element_order(1);
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  for (Element a = 1; a < g.order(); ++a) {
    if (g.element_order(a) != p) return false;
  }
  return true;
}

struct AutomorphismOptions {
  std::size_t max_order = 64;
};

/// All automorphisms, sorted by image array.  Images of a greedy
/// generating set are chosen among elements of equal order; each partial
/// assignment is extended along a breadth-first word tree of the subgroup
/// it generates and must stay an injective homomorphism there.
inline std::vector<GroupMap> automorphism_group(const FiniteGroup& g, AutomorphismOptions opt = {}) {
  if (g.order() > opt.max_order) {
    throw BoundExceeded("automorphism search limited to order " + std::to_string(opt.max_order));
  }
  const std::size_t n = g.order();
  const auto gens = greedy_generators(g);
  const std::size_t k = gens.size();

  // Word tree for each prefix subgroup <g_0..g_i>: (element, parent, generator).
  struct Node {
    Element element, parent;
    std::size_t gen;
  };
  std::vector<std::vector<Node>> trees(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::vector<Node>& tree = trees[i];
    std::vector<Element> frontier{0};
    for (std::size_t q = 0; q < frontier.size(); ++q) {
      for (std::size_t s = 0; s <= i; ++s) {
        Element y = g.mul(frontier[q], gens[s]);
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
          tree.push_back({y, frontier[q], s});
        }
      }
    }
  }

  std::vector<std::vector<Element>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ord = g.element_order(gens[i]);
    for (Element a = 0; a < n; ++a) {
      if (g.element_order(a) == ord) candidates[i].push_back(a);
    }
  }

  std::vector<GroupMap> result;
  std::vector<Element> gen_images(k);
  std::vector<Element> image(n);
  std::vector<bool> defined(n), used(n);

  auto extend = [&](std::size_t level) -> bool {
    std::fill(defined.begin(), defined.end(), false);
    std::fill(used.begin(), used.end(), false);
    image[0] = 0;
    defined[0] = used[0] = true;
    std::vector<Element> members{0};
    for (const Node& node : trees[level]) {
      Element v = g.mul(image[node.parent], gen_images[node.gen]);
      if (used[v]) return false;
      image[node.element] = v;
      defined[node.element] = used[v] = true;
      members.push_back(node.element);
    }
    for (Element a : members) {
      for (Element b : members) {
        if (image[g.mul(a, b)] != g.mul(image[a], image[b])) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t level) -> void {
    for (Element c : candidates[level]) {
      gen_images[level] = c;
      if (!extend(level)) continue;
      if (level + 1 == k) {
        result.push_back(GroupMap{image, n});
      } else {
        self(self, level + 1);
      }
    }
  };

  if (k == 0) {
    result.push_back(identity_map(g));
  } else {
    search(search, 0);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

inline bool is_fixed_point_free(const FiniteGroup& g, const GroupMap& phi) {
  detail::require_automorphism(g, phi);
  for (Element a = 1; a < g.order(); ++a) {
    if (phi(a) == a) return false;
  }
  return true;
}

inline bool is_central_automorphism(const FiniteGroup& g, const GroupMap& phi) {
  detail::require_automorphism(g, phi);
  const auto z = center(g);
  for (Element a = 0; a < g.order(); ++a) {
    if (!in_sorted(z, g.mul(g.inverse(a), phi(a)))) return false;
  }
  return true;
}

struct TwistedMap {
  GroupMap map;
  bool is_homomorphism = false;
};

/// a -> a^-1 phi(a), with a direct homomorphism check.
inline TwistedMap twisted_map(const FiniteGroup& g, const GroupMap& phi) {
  if (!is_homomorphism(g, g, phi)) throw PreconditionError("map is not an endomorphism");
  TwistedMap t{GroupMap{std::vector<Element>(g.order()), g.order()}, false};
  for (Element a = 0; a < g.order(); ++a) t.map.images[a] = g.mul(g.inverse(a), phi(a));
  t.is_homomorphism = is_homomorphism(g, g, t.map);
  return t;
}

/// Automorphisms commuting with phi.  `automorphisms` defaults to the full
/// automorphism group.
inline std::vector<GroupMap> centralizer_in_aut(const FiniteGroup& g, const GroupMap& phi,
                                                const std::vector<GroupMap>* automorphisms = nullptr) {
  detail::require_automorphism(g, phi);
  std::vector<GroupMap> all;
  if (!automorphisms) {
    all = automorphism_group(g);
    automorphisms = &all;
  }
  std::vector<GroupMap> c;
  for (const auto& f : *automorphisms) {
    bool commutes = true;
    for (Element a = 0; a < g.order() && commutes; ++a) commutes = f(phi(a)) == phi(f(a));
    if (commutes) c.push_back(f);
  }
  return c;
}

/// {a + a}, sorted.
inline std::vector<Element> doubling_image(const FiniteGroup& g) {
  if (!g.is_abelian()) throw PreconditionError("doubling image requires an abelian group");
  std::vector<Element> out;
  for (Element a = 0; a < g.order(); ++a) out.push_back(g.mul(a, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Map on an abelian group with coordinates, y_i = sum_j M[i][j] x_j mod f_i.
/// Throws if the result is not an automorphism.
inline GroupMap matrix_map(const FiniteGroup& g, const std::vector<std::vector<long long>>& matrix) {
  const auto& ac = g.abelian_coordinates();
  if (!ac) throw PreconditionError("matrix maps need a group built by make_abelian");
  const std::size_t r = ac->factors.size();
  if (matrix.size() != r) throw PreconditionError("matrix must be r x r for r cyclic factors");
  for (const auto& row : matrix) {
    if (row.size() != r) throw PreconditionError("matrix must be r x r for r cyclic factors");
  }
  GroupMap m{std::vector<Element>(g.order()), g.order()};
  for (Element a = 0; a < g.order(); ++a) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < r; ++i) {
      long long f = ac->factors[i], s = 0;
      for (std::size_t j = 0; j < r; ++j) s += matrix[i][j] * ac->coords[a][j];
      idx = idx * ac->factors[i] + static_cast<std::size_t>(((s % f) + f) % f);
    }
    m.images[a] = static_cast<Element>(idx);
  }
  detail::require_automorphism(g, m);
  return m;
}

inline std::string describe(const GroupMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.images.size(); ++i) s += (i ? " " : "") + std::to_string(f.images[i]);
  return s + "]";
}

}  // namespace quandlekit
