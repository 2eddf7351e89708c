#pragma once

// Finite quandles as operation tables, table[a][b] = a * b.  The column of b
// is the inner translation S_b : y -> y * b.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/core.hpp"
#include "quandlekit/finite_group.hpp"
#include "quandlekit/permutation.hpp"

namespace quandlekit {

/// Construction data recorded by the group-based constructors.
struct Provenance {
  std::string kind;  // "conj", "takasaki", "alexander", "galexander", "dihedral"
  std::shared_ptr<const FiniteGroup> group;
  std::optional<GroupMap> automorphism;
  std::uint32_t exponent = 1;

  std::string describe() const {
    std::string s = kind + "(" + (group ? group->name() : std::string("?"));
    if (automorphism) s += ", " + quandlekit::describe(*automorphism);
    if (kind == "conj" && exponent != 1) s += ", m=" + std::to_string(exponent);
    return s + ")";
  }
};

/// First axiom failure found by the validator.  Witness meaning:
///   axiom 1: a * a != a, witness (a, a, a)
///   axiom 2: a * b == c * b with a != c, witness (a, b, c)
///   axiom 3: (a*b)*c != (a*c)*(b*c), witness (a, b, c)
struct AxiomFailure {
  int axiom = 0;
  Element a = 0, b = 0, c = 0;

  std::string message() const {
    std::string w = "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
    switch (axiom) {
      case 1: return "axiom 1 (idempotence) fails: " + std::to_string(a) + " * " + std::to_string(a) + " != " + std::to_string(a);
      case 2: return "axiom 2 (right invertibility) fails: column " + std::to_string(b) +
                     " repeats a value at rows " + std::to_string(a) + " and " + std::to_string(c);
      default: return "axiom 3 (right self-distributivity) fails at " + w;
    }
  }
};

class AxiomViolation : public std::invalid_argument {
 public:
  explicit AxiomViolation(AxiomFailure f) : std::invalid_argument(f.message()), failure_(f) {}
  const AxiomFailure& failure() const noexcept { return failure_; }

 private:
  AxiomFailure failure_;
};

class Quandle {
 public:
  Quandle() = default;

  std::size_t order() const noexcept { return n_; }
  Element op(Element a, Element b) const { return table_[a * n_ + b]; }
  const std::vector<Element>& flat_table() const noexcept { return table_; }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

  Table table() const {
    Table t(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
    }
    return t;
  }

  std::string describe() const {
    return provenance_ ? provenance_->describe() : "quandle of order " + std::to_string(n_);
  }

  Quandle& set_provenance(Provenance p) {
    provenance_ = std::move(p);
    return *this;
  }

  /// Returns the first violated axiom, if any.
  static std::optional<AxiomFailure> find_violation(std::size_t n, const std::vector<Element>& t) {
    for (Element a = 0; a < n; ++a) {
      if (t[a * n + a] != a) return AxiomFailure{1, a, a, a};
    }
    for (Element b = 0; b < n; ++b) {
      std::vector<std::int64_t> row_of(n, -1);
      for (Element a = 0; a < n; ++a) {
        Element v = t[a * n + b];
        if (row_of[v] >= 0) return AxiomFailure{2, static_cast<Element>(row_of[v]), b, a};
        row_of[v] = a;
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        const Element ab = t[a * n + b];
        for (Element c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[t[a * n + c] * n + t[b * n + c]]) return AxiomFailure{3, a, b, c};
        }
      }
    }
    return std::nullopt;
  }

  /// Validating constructor from a flat table.
  static Quandle from_flat(std::size_t n, std::vector<Element> flat) {
    if (n == 0) throw PreconditionError("quandle must be nonempty");
    if (flat.size() != detail::checked_square(n)) throw PreconditionError("table is not square");
    for (Element e : flat) {
      if (e >= n) throw PreconditionError("table entry out of range");
    }
    if (auto f = find_violation(n, flat)) throw AxiomViolation(*f);
    Quandle q;
    q.n_ = n;
    q.table_ = std::move(flat);
    return q;
  }

  static Quandle trivial(std::size_t n) {
    std::vector<Element> flat(detail::checked_square(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>(a);
    }
    return from_flat(n, std::move(flat));
  }

  friend bool operator==(const Quandle& x, const Quandle& y) {
    return x.n_ == y.n_ && x.table_ == y.table_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::optional<Provenance> provenance_;
};

/// Checks the three axioms; throws AxiomViolation with a witness triple.
inline Quandle validate_axioms(const Table& table) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(detail::checked_square(n));
  for (const auto& row : table) {
    if (row.size() != n) throw PreconditionError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Quandle::from_flat(n, std::move(flat));
}

namespace detail {

template <class Op>
Quandle from_group_op(const FiniteGroup& g, Op op, Provenance prov) {
  const std::size_t n = g.order();
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) flat[a * n + b] = op(a, b);
  }
  Quandle q = Quandle::from_flat(n, std::move(flat));
  q.set_provenance(std::move(prov));
  return q;
}

inline std::shared_ptr<const FiniteGroup> share(const FiniteGroup& g) {
  return std::make_shared<const FiniteGroup>(g);
}

}  // namespace detail

/// a * b = b^-m a b^m.
inline Quandle conj_quandle(const FiniteGroup& g, std::uint32_t m = 1) {
  if (m == 0) throw PreconditionError("conjugation exponent must be positive");
  return detail::from_group_op(
      g,
      [&](Element a, Element b) {
        Element bm = g.pow(b, m);
        return g.mul(g.mul(g.inverse(bm), a), bm);
      },
      Provenance{"conj", detail::share(g), std::nullopt, m});
}

/// a * b = 2b - a.
inline Quandle takasaki(const FiniteGroup& a) {
  if (!a.is_abelian()) throw PreconditionError("Takasaki quandles need an abelian group");
  return detail::from_group_op(
      a, [&](Element x, Element y) { return a.mul(a.mul(y, y), a.inverse(x)); },
      Provenance{"takasaki", detail::share(a), inversion_map(a), 1});
}

/// a * b = t(a) + b - t(b).
inline Quandle alexander(const FiniteGroup& a, const GroupMap& t) {
  if (!a.is_abelian()) throw PreconditionError("Alexander quandles need an abelian group");
  detail::require_automorphism(a, t);
  return detail::from_group_op(
      a, [&](Element x, Element y) { return a.mul(a.mul(t(x), y), a.inverse(t(y))); },
      Provenance{"alexander", detail::share(a), t, 1});
}

/// a * b = phi(a b^-1) b.
inline Quandle gen_alexander(const FiniteGroup& g, const GroupMap& phi) {
  detail::require_automorphism(g, phi);
  return detail::from_group_op(
      g, [&](Element x, Element y) { return g.mul(phi(g.mul(x, g.inverse(y))), y); },
      Provenance{"galexander", detail::share(g), phi, 1});
}

/// Dihedral quandle R_n = T(Z/n).
inline Quandle dihedral(std::uint32_t n) {
  Quandle q = takasaki(make_cyclic(n));
  auto prov = *q.provenance();
  prov.kind = "dihedral";
  q.set_provenance(std::move(prov));
  return q;
}

inline bool is_commutative(const Quandle& x) {
  for (Element a = 0; a < x.order(); ++a) {
    for (Element b = a + 1; b < x.order(); ++b) {
      if (x.op(a, b) != x.op(b, a)) return false;
    }
  }
  return true;
}

inline bool is_involutory(const Quandle& x) {
  for (Element a = 0; a < x.order(); ++a) {
    for (Element b = 0; b < x.order(); ++b) {
      if (x.op(x.op(a, b), b) != a) return false;
    }
  }
  return true;
}

/// S_x : y -> y * x.
inline Permutation inner_translation(const Quandle& x, Element at) {
  if (at >= x.order()) throw PreconditionError("element out of range");
  std::vector<Point> img(x.order());
  for (Element y = 0; y < x.order(); ++y) img[y] = x.op(y, at);
  return {std::move(img), Permutation::Unchecked{}};
}

/// True iff f(a * b) = f(a) * f(b) for all a, b (f need not be bijective).
inline bool is_quandle_homomorphism(const Quandle& x, const Quandle& y, const std::vector<Point>& f) {
  if (f.size() != x.order()) return false;
  for (Element a = 0; a < x.order(); ++a) {
    for (Element b = 0; b < x.order(); ++b) {
      if (f[x.op(a, b)] != y.op(f[a], f[b])) return false;
    }
  }
  return true;
}

inline bool is_quandle_automorphism(const Quandle& x, const Permutation& f) {
  return f.degree() == x.order() && is_quandle_homomorphism(x, x, f.images());
}

}  // namespace quandlekit
