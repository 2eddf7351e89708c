#pragma once

// Built-in group catalog used by the exhaustive checks: every abelian group
// of a given order (one per invariant-factor type) and every non-abelian
// group of order at most 16.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "quandlekit/finite_group.hpp"

namespace quandlekit {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

namespace detail {

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline void partitions(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                       std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// One factor list (prime powers, grouped by prime, descending exponents)
/// per isomorphism type of abelian group of order n.
inline std::vector<std::vector<std::uint32_t>> abelian_types(std::uint32_t n) {
  if (n == 0) throw PreconditionError("order must be positive");
  std::vector<std::vector<std::uint32_t>> types{{}};
  for (auto [p, e] : detail::factorize(n)) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    detail::partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& t : types) {
      for (const auto& part : parts) {
        auto f = t;
        for (auto k : part) {
          std::uint32_t q = 1;
          for (std::uint32_t i = 0; i < k; ++i) q *= p;
          f.push_back(q);
        }
        next.push_back(std::move(f));
      }
    }
    types = std::move(next);
  }
  if (n == 1) types = {{1}};
  return types;
}

inline std::vector<CatalogEntry> abelian_catalog(std::uint32_t max_order, std::uint32_t min_order = 1) {
  std::vector<CatalogEntry> out;
  for (std::uint32_t n = std::max(1u, min_order); n <= max_order; ++n) {
    for (const auto& t : abelian_types(n)) {
      FiniteGroup g = make_abelian(t);
      out.push_back({g.name(), std::move(g)});
    }
  }
  return out;
}

/// The fourteen non-abelian groups of order <= 16, restricted to max_order.
inline std::vector<CatalogEntry> nonabelian_catalog(std::uint32_t max_order) {
  std::vector<CatalogEntry> out;
  auto add = [&](FiniteGroup g) {
    if (g.order() <= max_order) out.push_back({g.name(), std::move(g)});
  };
  if (max_order < 6) return out;
  FiniteGroup s3 = make_symmetric(3);
  add(s3);
  if (max_order >= 8) {
    add(make_dihedral_group(4));
    add(make_quaternion8());
  }
  if (max_order >= 10) add(make_dihedral_group(5));
  if (max_order >= 12) {
    add(make_dihedral_group(6));
    add(make_alternating(4));
    add(make_dicyclic(3));
  }
  if (max_order >= 14) add(make_dihedral_group(7));
  if (max_order >= 16) {
    FiniteGroup z8 = make_cyclic(8), z4 = make_cyclic(4), z2 = make_cyclic(2);
    add(make_dihedral_group(8));
    add(make_dicyclic(4));
    add(semidirect_cyclic(z8, power_map(z8, 3), 2, "SD16"));
    add(semidirect_cyclic(z8, power_map(z8, 5), 2, "M16"));
    add(semidirect_cyclic(z4, power_map(z4, -1), 4, "Z4:Z4"));
    add(direct_product(z2, make_dihedral_group(4), "Z2xD4"));
    add(direct_product(z2, make_quaternion8(), "Z2xQ8"));
    // Z/4 x Z/2 with coordinates (k, m); index 2k + m.
    FiniteGroup z4z2 = make_abelian({4, 2});
    // (k, m) -> (k + 2m, m): conjugation action of X on <iI> x <Z> in the Pauli group.
    add(semidirect_cyclic(z4z2, matrix_map(z4z2, {{1, 2}, {0, 1}}), 2, "Pauli"));
    // (k, m) -> (k, m + k): <a,b,c | a^4=b^2=c^2=1, ab=ba, bc=cb, cac^-1=ab>.
    add(semidirect_cyclic(z4z2, matrix_map(z4z2, {{1, 0}, {1, 1}}), 2, "(Z4xZ2):Z2"));
  }
  return out;
}

/// Abelian groups followed by non-abelian ones, each block by order.
inline std::vector<CatalogEntry> group_catalog(std::uint32_t max_order) {
  auto out = abelian_catalog(max_order);
  for (auto& e : nonabelian_catalog(max_order)) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.group.order() < b.group.order();
  });
  return out;
}

/// Parses names such as "z5", "z3xz3", "s3", "a4", "d4" (order 8), "q8",
/// "dic3", or any catalog name (case-insensitive).
inline FiniteGroup group_by_name(const std::string& raw) {
  std::string s;
  for (char c : raw) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto number_after = [&](std::size_t skip) -> std::uint32_t {
    std::string digits = s.substr(skip);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw ParseError("unknown group '" + raw + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  if (s == "q8") return make_quaternion8();
  if (s == "q16") return make_dicyclic(4);
  if (s.rfind("dic", 0) == 0) return make_dicyclic(number_after(3));
  if (s.size() > 1 && s[0] == 'z' && s.find('x') != std::string::npos) {
    std::vector<std::uint32_t> factors;
    std::size_t start = 0;
    while (start < s.size()) {
      std::size_t end = s.find('x', start);
      std::string part = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (part.size() < 2 || part[0] != 'z' || !std::all_of(part.begin() + 1, part.end(), ::isdigit)) {
        throw ParseError("unknown group '" + raw + "'");
      }
      factors.push_back(static_cast<std::uint32_t>(std::stoul(part.substr(1))));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return make_abelian(factors);
  }
  for (const auto& e : nonabelian_catalog(16)) {
    std::string lower;
    for (char c : e.name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == s) return e.group;
  }
  if (!s.empty() && s[0] == 'z') return make_cyclic(number_after(1));
  if (!s.empty() && s[0] == 's') return make_symmetric(number_after(1));
  if (!s.empty() && s[0] == 'a') return make_alternating(number_after(1));
  if (!s.empty() && s[0] == 'd') return make_dihedral_group(number_after(1));
  throw ParseError("unknown group '" + raw + "'");
}

}  // namespace quandlekit
