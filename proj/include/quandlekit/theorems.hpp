#pragma once

// Exhaustive machine checks of structural statements about quandles built
// from groups.  Every check returns a TheoremReport; an empty failure list
// means every tested instance satisfied every clause.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "quandlekit/enumeration.hpp"
#include "quandlekit/finite_group.hpp"
#include "quandlekit/group_catalog.hpp"
#include "quandlekit/perm_group.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/symmetry.hpp"

namespace quandlekit {

struct Failure {
  std::string input;
  std::string clause;
};

struct TheoremReport {
  std::string theorem_id;
  std::size_t instances_tested = 0;
  std::vector<Failure> failures;
  /// Observed values, in insertion order (e.g. "|Aut(R_5)|" -> "20").
  std::vector<std::pair<std::string, std::string>> facts;
  std::chrono::duration<double> elapsed{0};

  bool passed() const noexcept { return failures.empty(); }

  void fail(std::string input, std::string clause) {
    failures.push_back({std::move(input), std::move(clause)});
  }

  /// Records a failure unless `ok`; returns ok.
  bool require(bool ok, const std::string& input, const std::string& clause) {
    if (!ok) fail(input, clause);
    return ok;
  }

  template <class T>
  void note(std::string key, const T& value) {
    std::ostringstream out;
    if constexpr (std::is_same_v<T, bool>) {
      out << (value ? "true" : "false");
    } else {
      out << value;
    }
    facts.emplace_back(std::move(key), out.str());
  }

  std::optional<std::string> fact(const std::string& key) const {
    for (const auto& [k, v] : facts) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  /// Appends instances, failures and facts of `other`.
  void absorb(const TheoremReport& other) {
    instances_tested += other.instances_tested;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    facts.insert(facts.end(), other.facts.begin(), other.facts.end());
  }
};

namespace detail {

class Stopwatch {
 public:
  explicit Stopwatch(TheoremReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  TheoremReport& report_;
  std::chrono::steady_clock::time_point start_;
};

inline Permutation as_permutation(const GroupMap& f) {
  return Permutation(std::vector<Point>(f.images.begin(), f.images.end()), Permutation::Unchecked{});
}

/// t_a : x -> x * a.
inline Permutation translation(const FiniteGroup& g, Element a) {
  std::vector<Point> img(g.order());
  for (Element x = 0; x < g.order(); ++x) img[x] = g.mul(x, a);
  return {std::move(img), Permutation::Unchecked{}};
}

inline std::string big_to_string(const BigOrder& o) { return o.str(); }

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline bool is_involution_or_identity(const GroupMap& f) { return compose(f, f) == GroupMap{[&] {
  std::vector<Element> id(f.domain_order());
  std::iota(id.begin(), id.end(), Element{0});
  return id;
}(), f.codomain_order}; }

inline std::size_t map_order(const GroupMap& f) {
  GroupMap power = f;
  std::size_t k = 1;
  auto is_id = [](const GroupMap& m) {
    for (std::size_t i = 0; i < m.images.size(); ++i) {
      if (m.images[i] != i) return false;
    }
    return true;
  };
  while (!is_id(power)) {
    power = compose(power, f);
    ++k;
  }
  return k;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t seed = v.size();
    for (Element x : v) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

/// A small generating subset of a list of automorphisms.
inline std::vector<GroupMap> generating_subset(std::size_t degree, const std::vector<GroupMap>& maps) {
  std::vector<GroupMap> gens;
  PermGroup span = PermGroup::trivial(degree);
  std::vector<Permutation> perm_gens;
  for (const auto& f : maps) {
    Permutation p = as_permutation(f);
    if (span.contains(p)) continue;
    gens.push_back(f);
    perm_gens.push_back(p);
    span = PermGroup(degree, perm_gens);
  }
  return gens;
}

/// Verifies that Phi(a, f) = t_a . f embeds Z x| C into Aut(X), where
/// (a1, f1)(a2, f2) = (a1 f1(a2), f1 f2).  `central` lists the translation
/// elements and `maps` the group automorphisms.  Returns the image size.
inline std::size_t verify_translation_embedding(const FiniteGroup& g, const Quandle& x,
                                                const std::vector<Element>& central,
                                                const std::vector<GroupMap>& maps,
                                                TheoremReport& report, const std::string& input) {
  for (Element a : central) {
    if (!is_quandle_automorphism(x, translation(g, a))) {
      report.fail(input, "translation t_" + std::to_string(a) + " is not a quandle automorphism");
      return 0;
    }
  }
  for (const auto& f : maps) {
    if (!is_quandle_automorphism(x, as_permutation(f))) {
      report.fail(input, "group automorphism " + describe(f) + " is not a quandle automorphism");
      return 0;
    }
  }
  std::vector<Permutation> t;
  for (Element a : central) t.push_back(translation(g, a));
  std::vector<Permutation> fp;
  for (const auto& f : maps) fp.push_back(as_permutation(f));

  // Phi(a, f) = t_a . f as functions: apply f, then t_a.
  auto phi = [&](std::size_t ai, std::size_t fi) { return compose(fp[fi], t[ai]); };
  std::unordered_set<Permutation, PermutationHash> image;
  image.reserve(central.size() * maps.size());
  for (std::size_t ai = 0; ai < central.size(); ++ai) {
    for (std::size_t fi = 0; fi < maps.size(); ++fi) image.insert(phi(ai, fi));
  }
  const std::size_t domain = central.size() * maps.size();
  if (!report.require(image.size() == domain, input, "Phi is not injective")) return image.size();

  std::map<Element, std::size_t> central_index;
  for (std::size_t i = 0; i < central.size(); ++i) central_index[central[i]] = i;
  std::map<GroupMap, std::size_t> map_index;
  for (std::size_t i = 0; i < maps.size(); ++i) map_index[maps[i]] = i;

  // Phi(s y) = Phi(s) . Phi(y) for s in a generating set and all y implies
  // Phi is a homomorphism; (a, id)(0, f) = (a, f) so these generate.
  const std::size_t id_index = map_index.at(identity_map(g));
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (Element z : greedy_generators(subgroup(g, central, "Z"))) gens.emplace_back(z, id_index);
  const std::size_t zero_index = central_index.at(0);
  for (const auto& f : generating_subset(g.order(), maps)) gens.emplace_back(zero_index, map_index.at(f));

  if (!report.require(phi(zero_index, id_index).is_identity(), input, "Phi(0, id) is not the identity")) {
    return image.size();
  }
  for (auto [sa, sf] : gens) {
    for (std::size_t ai = 0; ai < central.size(); ++ai) {
      for (std::size_t fi = 0; fi < maps.size(); ++fi) {
        Element prod_a = g.mul(central[sa], maps[sf](central[ai]));
        auto it_a = central_index.find(prod_a);
        auto it_f = map_index.find(compose(maps[fi], maps[sf]));
        if (it_a == central_index.end() || it_f == map_index.end()) {
          report.fail(input, "semidirect product is not closed");
          return image.size();
        }
        // Phi(s) . Phi(y) as functions: apply Phi(y) first.
        if (phi(it_a->second, it_f->second) != compose(phi(ai, fi), phi(sa, sf))) {
          report.fail(input, "Phi is not a homomorphism");
          return image.size();
        }
      }
    }
  }
  return image.size();
}

/// Conjugacy-class representatives of a list of automorphisms, or the whole
/// list when it has at most `full_limit` entries.
inline std::vector<GroupMap> automorphism_sample(const FiniteGroup& g, const std::vector<GroupMap>& auts,
                                                 std::size_t full_limit) {
  if (auts.size() <= full_limit) return auts;
  std::unordered_map<std::vector<Element>, std::size_t, VectorHash> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i].images] = i;
  auto gens = generating_subset(g.order(), auts);
  std::vector<bool> assigned(auts.size(), false);
  std::vector<GroupMap> reps;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (assigned[i]) continue;
    reps.push_back(auts[i]);
    std::vector<std::size_t> queue{i};
    assigned[i] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& s : gens) {
        GroupMap c = compose(compose(inverse(s), auts[queue[q]]), s);
        std::size_t j = index.at(c.images);
        if (!assigned[j]) {
          assigned[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return reps;
}

inline std::string with_map(const FiniteGroup& g, const GroupMap& f) {
  return g.name() + ", phi=" + describe(f);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-instance checks

/// Z(G) x| C_Aut(G)(phi) embeds in Aut(Alex(G, phi)) via (a, f) -> t_a . f.
inline TheoremReport check_prop_embedding_zg_caut(const FiniteGroup& g, const GroupMap& phi) {
  detail::require_automorphism(g, phi);
  TheoremReport r{"prop-zg-caut"};
  detail::Stopwatch timer(r);
  const std::string input = detail::with_map(g, phi);
  Quandle x = gen_alexander(g, phi);
  auto auts = automorphism_group(g);
  auto cent = centralizer_in_aut(g, phi, &auts);
  auto z = center(g);
  std::size_t image = detail::verify_translation_embedding(g, x, z, cent, r, input);
  ++r.instances_tested;
  r.note("image order [" + input + "]", image);
  if (g.order() <= 81) {
    BigOrder aut = automorphism_group_backtrack(x).order();
    r.note("|Aut(Alex)| [" + input + "]", detail::big_to_string(aut));
  }
  return r;
}

/// Aut(T(G)) = G x| Aut(G) and Inn(T(G)) = 2G x| Z/2 for abelian G of odd order.
inline TheoremReport check_thm_takasaki_aut(const FiniteGroup& g) {
  if (!g.is_abelian()) throw PreconditionError("Takasaki structure check needs an abelian group");
  if (g.order() % 2 == 0) throw PreconditionError("Takasaki structure check needs odd order");
  TheoremReport r{"takasaki-aut"};
  detail::Stopwatch timer(r);
  const std::string input = g.name();
  ++r.instances_tested;
  Quandle x = takasaki(g);
  PermGroup aut = automorphism_group_backtrack(x);
  auto group_auts = automorphism_group(g);
  const BigOrder expected = BigOrder(g.order()) * group_auts.size();
  r.note("|Aut(T(" + input + "))|", detail::big_to_string(aut.order()));
  r.note("|Aut(" + input + ")|", group_auts.size());
  r.require(aut.order() == expected, input, "|Aut(T(G))| != |G| * |Aut(G)|");

  r.require(detail::verify_translation_embedding(g, x, [&] {
              std::vector<Element> all(g.order());
              std::iota(all.begin(), all.end(), Element{0});
              return all;
            }(), group_auts, r, input) == expected,
            input, "G x| Aut(G) image has the wrong size");

  std::unordered_set<std::vector<Element>, detail::VectorHash> aut_set;
  for (const auto& f : group_auts) aut_set.insert(f.images);
  bool factors = true;
  aut.for_each_element([&](const Permutation& f) {
    if (!factors) return;
    const Element shift = g.inverse(f(0));
    std::vector<Element> h(g.order());
    for (Element a = 0; a < g.order(); ++a) h[a] = g.mul(f(a), shift);
    if (!aut_set.count(h)) {
      factors = false;
      r.fail(input, "automorphism " + to_string(f) + " is not t_f(0) . h with h in Aut(G)");
    }
  });

  PermGroup inn = inner_group(x);
  const auto doubles = doubling_image(g);
  const BigOrder inn_expected = g.order() > 1 ? BigOrder(doubles.size() * 2) : BigOrder(1);
  r.note("|Inn(T(" + input + "))|", detail::big_to_string(inn.order()));
  r.require(inn.order() == inn_expected, input, "|Inn(T(G))| != 2 |2G|");
  for (Element a = 0; a < g.order(); ++a) {
    // S_a = t_{2a} . r: y -> -y + 2a.
    Permutation expected_s = compose(detail::as_permutation(inversion_map(g)), detail::translation(g, g.mul(a, a)));
    if (!r.require(inner_translation(x, a) == expected_s, input, "S_" + std::to_string(a) + " != t_2a . r")) break;
  }
  return r;
}

/// Aut(R_n) = Z/n x| (Z/n)^x and Inn(R_n) = Z/n x| Z/2 for odd n.
inline TheoremReport check_corollary_dihedral(std::uint32_t n) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("dihedral corollary needs odd n");
  TheoremReport r{"dihedral-corollary"};
  detail::Stopwatch timer(r);
  const std::string input = "R_" + std::to_string(n);
  ++r.instances_tested;
  Quandle x = dihedral(n);
  BigOrder aut = automorphism_group_backtrack(x).order();
  BigOrder inn = inner_group(x).order();
  r.note("|Aut(" + input + ")|", detail::big_to_string(aut));
  r.note("|Inn(" + input + ")|", detail::big_to_string(inn));
  r.require(aut == BigOrder(n) * detail::euler_phi(n), input, "|Aut(R_n)| != n * phi(n)");
  r.require(inn == (n > 1 ? BigOrder(2 * n) : BigOrder(1)), input, "|Inn(R_n)| != 2n");
  FiniteGroup c = make_cyclic(n);
  Permutation reflection = detail::as_permutation(inversion_map(c));
  for (Element a = 0; a < n; ++a) {
    Permutation expected = compose(reflection, detail::translation(c, c.mul(a, a)));
    if (!r.require(inner_translation(x, a) == expected, input, "S_" + std::to_string(a) + " != t_2a . r")) break;
  }
  return r;
}

/// Z(G) x| Aut(G) embeds in Aut(Conj(G)); reports whether it is onto and
/// checks |Inn(Conj(G))| = |G / Z(G)|.
inline TheoremReport check_prop_conj_embedding(const FiniteGroup& g, std::size_t bound = 64) {
  if (g.order() > bound) throw BoundExceeded("conjugation embedding check limited to order " + std::to_string(bound));
  TheoremReport r{"conj-embedding"};
  detail::Stopwatch timer(r);
  const std::string input = g.name();
  ++r.instances_tested;
  Quandle x = conj_quandle(g, 1);
  auto auts = automorphism_group(g, {std::max<std::size_t>(bound, 64)});
  auto z = center(g);
  std::size_t image = detail::verify_translation_embedding(g, x, z, auts, r, input);
  BigOrder aut_conj = automorphism_group_backtrack(x).order();
  BigOrder inn_conj = inner_group(x).order();
  r.note("|Z(G) x| Aut(G)| [" + input + "]", image);
  r.note("|Aut(Conj(" + input + "))|", detail::big_to_string(aut_conj));
  r.note("Aut(Conj) = Z x| Aut [" + input + "]", aut_conj == BigOrder(image));
  r.note("|Inn(Conj(" + input + "))|", detail::big_to_string(inn_conj));
  r.require(inn_conj == BigOrder(g.order() / z.size()), input, "|Inn(Conj(G))| != |G/Z(G)|");
  return r;
}

/// For phi fixed-point free on abelian G: Aut_0 = C_Aut(G)(phi),
/// Aut = G x| C, Inn = G x| <phi>.
inline TheoremReport check_thm_fpf_structure(const FiniteGroup& g, const GroupMap& phi) {
  if (!g.is_abelian()) throw PreconditionError("fixed-point-free structure check needs an abelian group");
  if (!is_fixed_point_free(g, phi)) throw PreconditionError("phi must be fixed-point free");
  TheoremReport r{"fpf-structure"};
  detail::Stopwatch timer(r);
  const std::string input = detail::with_map(g, phi);
  ++r.instances_tested;
  Quandle x = gen_alexander(g, phi);
  PermGroup aut = automorphism_group_backtrack(x);
  auto cent = centralizer_in_aut(g, phi);

  PermGroup aut0 = aut.stabilizer(0);
  bool inside = true;
  for (const auto& f : cent) inside = inside && aut0.contains(detail::as_permutation(f));
  r.require(inside && aut0.order() == BigOrder(cent.size()), input, "Aut(X)_0 != C_Aut(G)(phi)");

  r.note("|Aut(Alex)| [" + input + "]", detail::big_to_string(aut.order()));
  r.note("|C(phi)| [" + input + "]", cent.size());
  r.require(aut.order() == BigOrder(g.order()) * cent.size(), input, "|Aut(X)| != |G| |C(phi)|");

  std::unordered_set<std::vector<Element>, detail::VectorHash> cent_set;
  for (const auto& f : cent) cent_set.insert(f.images);
  bool factors = true;
  aut.for_each_element([&](const Permutation& f) {
    if (!factors) return;
    const Element shift = g.inverse(f(0));
    std::vector<Element> h(g.order());
    for (Element a = 0; a < g.order(); ++a) h[a] = g.mul(f(a), shift);
    if (!cent_set.count(h)) {
      factors = false;
      r.fail(input, "automorphism " + to_string(f) + " is not t_f(0) . h with h in C(phi)");
    }
  });

  PermGroup inn = inner_group(x);
  const std::size_t phi_order = detail::map_order(phi);
  r.note("|Inn(Alex)| [" + input + "]", detail::big_to_string(inn.order()));
  r.require(inn.order() == BigOrder(g.order() * phi_order), input, "|Inn(X)| != |G| ord(phi)");
  Permutation phi_perm = detail::as_permutation(phi);
  for (Element a = 0; a < g.order(); ++a) {
    Element shift = g.mul(a, g.inverse(phi(a)));
    if (!r.require(inner_translation(x, a) == compose(phi_perm, detail::translation(g, shift)), input,
                   "S_" + std::to_string(a) + " != t_(a - phi(a)) . phi")) {
      break;
    }
  }
  return r;
}

/// Aut(Alex((Z/p)^n, u)) is doubly transitive; Inn is not 2-transitive for n >= 2.
inline TheoremReport check_thm_fnt(std::uint32_t p, std::uint32_t n, std::uint32_t u, std::size_t bound = 81) {
  if (!detail::is_prime(p)) throw PreconditionError("p must be prime");
  if (n == 0) throw PreconditionError("n must be positive");
  if (u % p == 0 || u % p == 1) throw PreconditionError("u must be a unit other than 1 mod p");
  std::size_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) order *= p;
  if (order > bound) throw BoundExceeded("p^n exceeds the configured bound");
  TheoremReport r{"fnt"};
  detail::Stopwatch timer(r);
  FiniteGroup g = make_abelian(std::vector<std::uint32_t>(n, p));
  const std::string input = "(Z/" + std::to_string(p) + ")^" + std::to_string(n) + ", u=" + std::to_string(u);
  ++r.instances_tested;
  Quandle x = alexander(g, power_map(g, u));
  PermGroup aut = automorphism_group_backtrack(x);
  const bool via_lemma = aut_is_doubly_transitive(aut);
  const bool direct = aut.is_k_transitive(2);
  r.note("|Aut| [" + input + "]", detail::big_to_string(aut.order()));
  r.note("Aut doubly transitive [" + input + "]", via_lemma);
  r.require(via_lemma, input, "Aut(X) is not doubly transitive");
  r.require(via_lemma == direct, input, "transitivity lemma disagrees with direct 2-tuple orbit");
  const bool two_point = is_two_point_homogeneous(x);
  r.note("Inn 2-transitive [" + input + "]", two_point);
  if (n >= 2) r.require(!two_point, input, "X is two-point homogeneous although n >= 2");
  return r;
}

// ---------------------------------------------------------------------------
// Catalog-wide checks

/// Commutative Alex(G, phi) forces phi(a^2) = a; for abelian G commutative
/// iff 2 phi = id; for non-abelian G phi(a^2) = a never gives commutativity.
inline TheoremReport check_commutativity_criterion(std::uint32_t catalog_bound) {
  TheoremReport r{"commutativity"};
  detail::Stopwatch timer(r);
  for (const auto& e : group_catalog(catalog_bound)) {
    const FiniteGroup& g = e.group;
    for (const auto& phi : automorphism_group(g)) {
      ++r.instances_tested;
      const std::string input = detail::with_map(g, phi);
      const bool comm = is_commutative(gen_alexander(g, phi));
      bool halves = true;
      for (Element a = 0; a < g.order() && halves; ++a) halves = phi(g.mul(a, a)) == a;
      if (comm) r.require(halves, input, "commutative but phi(a^2) != a for some a");
      if (g.is_abelian()) {
        r.require(comm == halves, input, "abelian: commutative differs from 2 phi = id");
      } else if (halves) {
        r.require(!comm, input, "non-abelian with phi(a^2) = a yet commutative");
      }
    }
  }
  return r;
}

/// Central automorphisms: phi~ is a homomorphism into Z(G), phi -> phi~ is
/// injective, fixed-point free central implies abelian, Autcent = Aut for
/// abelian groups.
inline TheoremReport check_lemma_central(std::uint32_t catalog_bound) {
  TheoremReport r{"central-lemma"};
  detail::Stopwatch timer(r);
  for (const auto& e : group_catalog(catalog_bound)) {
    const FiniteGroup& g = e.group;
    const auto z = center(g);
    const auto auts = automorphism_group(g);
    std::set<std::vector<Element>> twisted_images;
    std::size_t central_count = 0;
    for (const auto& phi : auts) {
      if (!is_central_automorphism(g, phi)) continue;
      ++central_count;
      ++r.instances_tested;
      const std::string input = detail::with_map(g, phi);
      TwistedMap t = twisted_map(g, phi);
      r.require(t.is_homomorphism, input, "phi~ is not a homomorphism");
      bool into_center = true;
      for (Element v : t.map.images) into_center = into_center && in_sorted(z, v);
      r.require(into_center, input, "phi~ does not land in Z(G)");
      r.require(twisted_images.insert(t.map.images).second, input, "phi -> phi~ is not injective");
      if (is_fixed_point_free(g, phi)) r.require(g.is_abelian(), input, "fixed-point free central phi on non-abelian G");
    }
    if (g.is_abelian()) {
      r.require(central_count == auts.size(), g.name(), "Autcent(G) != Aut(G) for abelian G");
    }
    if (!g.is_abelian()) r.note("|Autcent(" + g.name() + ")|", central_count);
  }
  return r;
}

/// Involutory central phi on non-abelian G never gives a connected Alex(G, phi).
inline TheoremReport check_thm_connected_abelian(std::uint32_t catalog_bound) {
  TheoremReport r{"connected-abelian"};
  detail::Stopwatch timer(r);
  for (const auto& e : nonabelian_catalog(catalog_bound)) {
    const FiniteGroup& g = e.group;
    for (const auto& phi : automorphism_group(g)) {
      if (!detail::is_involution_or_identity(phi) || !is_central_automorphism(g, phi)) continue;
      ++r.instances_tested;
      const std::string input = detail::with_map(g, phi);
      Quandle x = gen_alexander(g, phi);
      r.require(is_involutory(x), input, "Alex(G, phi) is not involutory");
      r.require(!is_connected(x), input, "Alex(G, phi) is connected for non-abelian G");
    }
  }
  return r;
}

/// Finite abelian G: connected <=> phi fixed-point free <=> phi~ bijective.
inline TheoremReport check_thm_bae_choe(std::uint32_t catalog_bound) {
  TheoremReport r{"bae-choe"};
  detail::Stopwatch timer(r);
  for (const auto& e : abelian_catalog(catalog_bound)) {
    const FiniteGroup& g = e.group;
    for (const auto& phi : automorphism_group(g)) {
      ++r.instances_tested;
      const bool connected = is_connected(gen_alexander(g, phi));
      const bool fpf = is_fixed_point_free(g, phi);
      const bool bijective = is_bijective(twisted_map(g, phi).map);
      if (connected != fpf || fpf != bijective) {
        r.fail(detail::with_map(g, phi), std::string("connected=") + (connected ? "1" : "0") +
                                             " fpf=" + (fpf ? "1" : "0") + " phi~bijective=" + (bijective ? "1" : "0"));
      }
    }
  }
  return r;
}

/// Aut(G) is transitive on G \ {0} iff G is elementary abelian.
inline TheoremReport check_lemma_transitive_aut(std::uint32_t catalog_bound) {
  TheoremReport r{"transitive-aut"};
  detail::Stopwatch timer(r);
  for (const auto& e : group_catalog(catalog_bound)) {
    const FiniteGroup& g = e.group;
    if (g.order() < 2) continue;
    ++r.instances_tested;
    std::vector<bool> reached(g.order(), false);
    for (const auto& f : automorphism_group(g)) reached[f(1)] = true;
    const bool transitive = std::count(reached.begin(), reached.end(), true) ==
                            static_cast<std::ptrdiff_t>(g.order() - 1);
    r.require(transitive == is_elementary_abelian(g), g.name(),
              transitive ? "Aut(G) transitive but G not elementary abelian"
                         : "G elementary abelian but Aut(G) not transitive");
  }
  return r;
}

/// No quandle of order 4..hi is 3-transitive; R_3 is the only 3-transitive
/// quandle of order 3.  Classes come from exhaustive enumeration.
inline TheoremReport check_mccarron_bound(std::size_t lo, std::size_t hi) {
  if (lo < 1 || lo > hi) throw PreconditionError("order interval must satisfy 1 <= lo <= hi");
  if (hi > kMaxEnumerationOrder) throw BoundExceeded("order interval exceeds 6");
  TheoremReport r{"mccarron"};
  detail::Stopwatch timer(r);
  for (std::size_t n = lo; n <= hi; ++n) {
    auto classes = enumerate_quandle_classes(n);
    r.note("classes of order " + std::to_string(n), classes.size());
    if (n < 3) continue;
    std::size_t three = 0;
    for (const auto& q : classes) {
      ++r.instances_tested;
      if (!inner_group(q).is_k_transitive(3)) continue;
      ++three;
      if (n >= 4) {
        r.fail("order " + std::to_string(n) + " table", "3-transitive quandle with at least four elements");
      } else {
        r.require(quandle_isomorphic(q, dihedral(3)).has_value(), "order 3",
                  "3-transitive quandle not isomorphic to R_3");
      }
    }
    r.note("3-transitive classes of order " + std::to_string(n), three);
    if (n == 3) r.require(three == 1, "order 3", "expected exactly one 3-transitive quandle");
  }
  return r;
}

/// a -> S_a into Conj(Inn(X)) for X = Alex(G, phi), phi an involution on
/// abelian G: homomorphism always, injective exactly when phi is
/// fixed-point free.
inline TheoremReport check_prop_conj_inn_embedding(std::uint32_t catalog_bound) {
  TheoremReport r{"conj-inn-embedding"};
  detail::Stopwatch timer(r);
  for (const auto& e : abelian_catalog(catalog_bound)) {
    const FiniteGroup& g = e.group;
    for (const auto& phi : automorphism_group(g)) {
      if (!detail::is_involution_or_identity(phi)) continue;
      ++r.instances_tested;
      const std::string input = detail::with_map(g, phi);
      auto rep = embed_in_conj_inn(alexander(g, phi));
      r.require(rep.is_homomorphism(), input, "a -> S_a is not a quandle homomorphism");
      r.require(rep.is_injective() == is_fixed_point_free(g, phi), input,
                "injectivity of a -> S_a differs from phi fixed-point free");
    }
  }
  return r;
}

/// Doubly transitive <=> transitive with a transitive point stabilizer,
/// compared against the direct 2-tuple orbit on Aut(X).
inline TheoremReport check_lemma_doubly_transitive(std::uint32_t bound) {
  TheoremReport r{"doubly-transitive-criterion"};
  detail::Stopwatch timer(r);
  auto test = [&](const Quandle& x) {
    if (x.order() < 2) return;
    ++r.instances_tested;
    PermGroup aut = automorphism_group_backtrack(x);
    r.require(aut_is_doubly_transitive(aut) == aut.is_k_transitive(2), x.describe(),
              "criterion disagrees with the 2-tuple orbit");
  };
  for (std::uint32_t n = 2; n <= bound; ++n) test(dihedral(n));
  for (const auto& e : abelian_catalog(bound)) {
    const FiniteGroup& g = e.group;
    if (g.order() < 2 || g.order() > 16) continue;
    for (const auto& phi : detail::automorphism_sample(g, automorphism_group(g), 64)) test(alexander(g, phi));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Registry used by the command-line driver

struct VerifyOptions {
  std::uint32_t max_order = 16;
  std::vector<std::uint32_t> n_values;      // dihedral-corollary; default odd n <= max_order
  std::optional<std::pair<std::size_t, std::size_t>> mccarron_orders;  // default [1, min(6, max_order)]
  std::size_t full_automorphism_limit = 1000;  // larger Aut(G): one phi per conjugacy class
};

struct TheoremEntry {
  std::string id;
  std::string statement;
  std::function<TheoremReport(const VerifyOptions&)> run;
};

inline const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> registry = [] {
    std::vector<TheoremEntry> reg;
    reg.push_back({"conj-inn-embedding",
                   "a -> S_a embeds Alex(G, phi) in Conj(Inn) for fixed-point free involutions phi",
                   [](const VerifyOptions& o) { return check_prop_conj_inn_embedding(o.max_order); }});
    reg.push_back({"prop-zg-caut", "Z(G) x| C_Aut(G)(phi) embeds in Aut(Alex(G, phi))",
                   [](const VerifyOptions& o) {
                     TheoremReport r{"prop-zg-caut"};
                     detail::Stopwatch timer(r);
                     for (const auto& e : group_catalog(o.max_order)) {
                       auto auts = automorphism_group(e.group);
                       for (const auto& phi : detail::automorphism_sample(e.group, auts, o.full_automorphism_limit)) {
                         r.absorb(check_prop_embedding_zg_caut(e.group, phi));
                       }
                     }
                     return r;
                   }});
    reg.push_back({"takasaki-aut", "Aut(T(G)) = G x| Aut(G), Inn(T(G)) = 2G x| Z/2 for odd abelian G",
                   [](const VerifyOptions& o) {
                     TheoremReport r{"takasaki-aut"};
                     detail::Stopwatch timer(r);
                     for (const auto& e : abelian_catalog(o.max_order)) {
                       if (e.group.order() % 2) r.absorb(check_thm_takasaki_aut(e.group));
                     }
                     return r;
                   }});
    reg.push_back({"dihedral-corollary", "Aut(R_n) = Z/n x| (Z/n)^x, Inn(R_n) = Z/n x| Z/2 for odd n",
                   [](const VerifyOptions& o) {
                     TheoremReport r{"dihedral-corollary"};
                     detail::Stopwatch timer(r);
                     std::vector<std::uint32_t> ns = o.n_values;
                     if (ns.empty()) {
                       for (std::uint32_t n = 1; n <= o.max_order; n += 2) ns.push_back(n);
                     }
                     for (auto n : ns) r.absorb(check_corollary_dihedral(n));
                     return r;
                   }});
    reg.push_back({"conj-embedding", "Z(G) x| Aut(G) embeds in Aut(Conj(G))",
                   [](const VerifyOptions& o) {
                     TheoremReport r{"conj-embedding"};
                     detail::Stopwatch timer(r);
                     for (const auto& e : group_catalog(o.max_order)) r.absorb(check_prop_conj_embedding(e.group));
                     return r;
                   }});
    reg.push_back({"commutativity", "commutative Alex(G, phi) forces phi(a^2) = a; abelian: iff 2 phi = id",
                   [](const VerifyOptions& o) { return check_commutativity_criterion(o.max_order); }});
    reg.push_back({"central-lemma", "phi~ for central phi: homomorphism into Z(G), injective, fpf implies abelian",
                   [](const VerifyOptions& o) { return check_lemma_central(o.max_order); }});
    reg.push_back({"connected-abelian", "connected Alex(G, phi) with involutory central phi forces G abelian",
                   [](const VerifyOptions& o) { return check_thm_connected_abelian(o.max_order); }});
    reg.push_back({"bae-choe", "abelian G: connected <=> phi fixed-point free <=> phi~ in Aut(G)",
                   [](const VerifyOptions& o) { return check_thm_bae_choe(o.max_order); }});
    reg.push_back({"fpf-structure", "fixed-point free phi: Aut_0 = C(phi), Aut = G x| C(phi), Inn = G x| <phi>",
                   [](const VerifyOptions& o) {
                     TheoremReport r{"fpf-structure"};
                     detail::Stopwatch timer(r);
                     for (const auto& e : abelian_catalog(o.max_order)) {
                       auto auts = automorphism_group(e.group);
                       for (const auto& phi : detail::automorphism_sample(e.group, auts, o.full_automorphism_limit)) {
                         if (is_fixed_point_free(e.group, phi)) r.absorb(check_thm_fpf_structure(e.group, phi));
                       }
                     }
                     return r;
                   }});
    reg.push_back({"doubly-transitive-criterion", "doubly transitive <=> transitive with transitive stabilizer",
                   [](const VerifyOptions& o) { return check_lemma_doubly_transitive(o.max_order); }});
    reg.push_back({"transitive-aut", "Aut(G) transitive on G \\ {0} <=> G elementary abelian",
                   [](const VerifyOptions& o) { return check_lemma_transitive_aut(o.max_order); }});
    reg.push_back({"fnt", "Aut(Alex((Z/p)^n, u)) doubly transitive; Inn not 2-transitive for n >= 2",
                   [](const VerifyOptions& o) {
                     TheoremReport r{"fnt"};
                     detail::Stopwatch timer(r);
                     for (std::uint32_t p = 2; p <= o.max_order; ++p) {
                       if (!detail::is_prime(p)) continue;
                       std::uint64_t q = p;
                       for (std::uint32_t n = 1; q <= o.max_order; ++n, q *= p) {
                         for (std::uint32_t u = 2; u < p; ++u) r.absorb(check_thm_fnt(p, n, u, o.max_order));
                       }
                     }
                     return r;
                   }});
    reg.push_back({"mccarron", "no 3-transitive quandle of order >= 4; R_3 is 3-transitive",
                   [](const VerifyOptions& o) {
                     auto range = o.mccarron_orders.value_or(
                         std::pair<std::size_t, std::size_t>(1, std::min<std::size_t>(kMaxEnumerationOrder, o.max_order)));
                     return check_mccarron_bound(range.first, range.second);
                   }});
    return reg;
  }();
  return registry;
}

inline const TheoremEntry* find_theorem(const std::string& id) {
  for (const auto& e : theorem_registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace quandlekit
