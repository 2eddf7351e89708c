// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "quandlekit/enumeration.hpp"
#include "quandlekit/group_catalog.hpp"
#include "quandlekit/symmetry.hpp"
#include "quandlekit/theorems.hpp"

using namespace quandlekit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool run_criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= budget_seconds) {
    out.ok = false;
    out.detail = "over time budget";
  }
  std::printf("%s criterion %d (%s): %.2fs / budget %.0fs%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              budget_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

oracle::Map images(const Permutation& p) { return oracle::Map(p.images().begin(), p.images().end()); }

std::set<oracle::Map> element_set(const PermGroup& g) {
  std::set<oracle::Map> out;
  g.for_each_element([&](const Permutation& p) { out.insert(images(p)); });
  return out;
}

/// Orbit of 0 under the columns S_b, by breadth-first search on the table.
bool connected_by_table(const Quandle& x) {
  std::vector<bool> seen(x.order(), false);
  std::vector<Element> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element b = 0; b < x.order(); ++b) {
      Element y = x.op(queue[i], b);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == x.order();
}

std::set<oracle::Map> inn_closure(const Quandle& x) { return oracle::closure(x.order(), oracle::columns(x)); }

Outcome dihedral_orders() {
  Outcome o;
  const std::vector<std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>> want{
      {3, 6, 6}, {5, 20, 10}, {7, 42, 14}, {9, 54, 18}, {11, 110, 22}};
  for (const auto& [n, aut, inn] : want) {
    Quandle x = dihedral(n);
    const BigOrder a = automorphism_group_backtrack(x).order();
    const BigOrder i = inner_group(x).order();
    const std::string tag = "R_" + std::to_string(n);
    o.require(aut == n * oracle::euler_phi(n) && inn == 2ull * n, tag + ": table value disagrees with n phi(n), 2n");
    o.require(a == aut, tag + ": |Aut| = " + a.str());
    o.require(i == inn, tag + ": |Inn| = " + i.str());
  }
  return o;
}

Outcome takasaki_structure() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& e : abelian_catalog(27)) {
    const FiniteGroup& g = e.group;
    if (g.order() % 2 == 0) continue;
    ++groups;
    const auto& factors = g.abelian_coordinates()->factors;
    const std::size_t group_auts = oracle::abelian_automorphisms(g, factors).size();
    Quandle x = takasaki(g);
    PermGroup aut = automorphism_group_backtrack(x);
    o.require(aut.order() == BigOrder(g.order()) * group_auts,
              e.name + ": |Aut(T(G))| = " + aut.order().str() + ", |G||Aut(G)| = " +
                  std::to_string(g.order() * group_auts));
    // f = t_c . h with c = f(0) and h = x -> f(x) - c a group automorphism.
    bool factors_ok = true;
    oracle::Map h(g.order());
    aut.for_each_element([&](const Permutation& f) {
      if (!factors_ok) return;
      const Element shift = g.inverse(f(0));
      for (Element a = 0; a < g.order(); ++a) h[a] = g.mul(f(a), shift);
      factors_ok = oracle::group_hom(g, h);
    });
    o.require(factors_ok, e.name + ": an automorphism is not translation . group automorphism");
  }
  o.require(groups == 18, "expected 18 abelian groups of odd order <= 27, found " + std::to_string(groups));
  return o;
}

Outcome bae_choe() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& e : abelian_catalog(16)) {
    const FiniteGroup& g = e.group;
    for (const auto& phi : automorphism_group(g)) {
      ++instances;
      Quandle x = alexander(g, phi);
      const bool connected = is_connected(x);
      bool fpf = true;
      for (Element a = 1; a < g.order(); ++a) fpf = fpf && phi(a) != a;
      std::set<Element> tilde;
      for (Element a = 0; a < g.order(); ++a) tilde.insert(g.mul(g.inverse(a), phi(a)));
      const bool bijective = tilde.size() == g.order();
      const std::string tag = e.name + ", phi=" + describe(phi);
      o.require(connected == connected_by_table(x), tag + ": connectivity disagrees with orbit search");
      o.require(connected == fpf && fpf == bijective, tag + ": predicates disagree");
    }
  }
  o.require(instances > 0, "no instances");
  return o;
}

Outcome connected_implies_abelian() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& e : nonabelian_catalog(16)) {
    const FiniteGroup& g = e.group;
    const auto z = oracle::center(g);
    for (const auto& phi : automorphism_group(g)) {
      bool central = true, involution = true;
      for (Element a = 0; a < g.order(); ++a) {
        central = central && std::binary_search(z.begin(), z.end(), g.mul(g.inverse(a), phi(a)));
        involution = involution && phi(phi(a)) == a;
      }
      if (!central || !involution) continue;
      ++instances;
      Quandle x = gen_alexander(g, phi);
      o.require(!connected_by_table(x) && !is_connected(x), e.name + ", phi=" + describe(phi) + ": connected");
    }
  }
  o.require(instances > 0, "no instances");
  return o;
}

Outcome double_transitivity() {
  Outcome o;
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> cases{
      {3, 1, 2}, {5, 1, 2}, {5, 1, 3}, {7, 1, 3}, {3, 2, 2}};
  for (const auto& [p, n, u] : cases) {
    FiniteGroup g = make_abelian(std::vector<std::uint32_t>(n, p));
    Quandle x = alexander(g, power_map(g, u));
    PermGroup aut = automorphism_group_backtrack(x);
    const auto elements = element_set(aut);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(u) + ")";
    bool all_auts = true;
    for (const auto& f : elements) all_auts = all_auts && oracle::quandle_hom(x, f);
    o.require(all_auts && elements.size() == aut.order(), tag + ": chain elements are not automorphisms");
    o.require(oracle::k_transitive(x.order(), elements, 2), tag + ": Aut not doubly transitive (oracle)");
    o.require(aut_is_doubly_transitive(x), tag + ": Aut not doubly transitive");
    if (p == 3 && n == 2) {
      const std::size_t gl = oracle::abelian_automorphisms(g, {3, 3}).size();
      o.require(gl == 48, "oracle |Aut((Z/3)^2)| = " + std::to_string(gl));
      o.require(aut.order() == 432 && aut.order() == BigOrder(9 * gl), tag + ": |Aut| = " + aut.order().str());
      o.require(!oracle::k_transitive(x.order(), inn_closure(x), 2), tag + ": Inn is 2-transitive (oracle)");
      o.require(!is_two_point_homogeneous(x), tag + ": Inn is 2-transitive");
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::vector<Quandle> corpus;
  for (std::uint32_t n = 1; n <= 6; ++n) corpus.push_back(dihedral(n));
  for (const auto& e : group_catalog(6)) {
    const FiniteGroup& g = e.group;
    for (std::uint32_t m = 1; m <= g.order(); ++m) corpus.push_back(conj_quandle(g, m));
    for (const auto& f : automorphism_group(g)) corpus.push_back(gen_alexander(g, f));
    if (g.is_abelian()) corpus.push_back(takasaki(g));
  }
  std::mt19937 rng(20240611);
  std::vector<std::vector<Quandle>> by_order;
  for (std::size_t n = 1; n <= 5; ++n) by_order.push_back(enumerate_quandles(n));
  for (int i = 0; i < 100; ++i) {
    const auto& pool = by_order[rng() % by_order.size()];
    corpus.push_back(pool[rng() % pool.size()]);
  }
  for (const auto& x : corpus) {
    auto brute = oracle::quandle_automorphisms(x);
    const std::set<oracle::Map> want(brute.begin(), brute.end());
    std::set<oracle::Map> library_brute;
    for (const auto& p : brute_force_aut(x)) library_brute.insert(images(p));
    const auto got = element_set(automorphism_group_backtrack(x));
    o.require(got == want, "backtracking Aut differs from brute force for " + x.describe());
    o.require(library_brute == want, "library brute force differs from oracle for " + x.describe());
  }
  o.require(corpus.size() >= 100, "corpus too small");
  return o;
}

Outcome embedding() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& e : abelian_catalog(15)) {
    const FiniteGroup& g = e.group;
    if (g.order() % 2 == 0) continue;
    ++groups;
    Quandle x = gen_alexander(g, inversion_map(g));
    auto report = embed_in_conj_inn(x);
    o.require(report.is_homomorphism() && report.is_injective(), e.name + ": a -> S_a is not an embedding");
    // S_(a*b) = S_b^-1 S_a S_b, applying S_b^-1 first; columns pairwise distinct.
    const auto cols = oracle::columns(x);
    o.require(std::set<oracle::Map>(cols.begin(), cols.end()).size() == x.order(), e.name + ": S_a repeat");
    bool hom = true;
    for (Element a = 0; a < x.order(); ++a) {
      for (Element b = 0; b < x.order(); ++b) {
        for (Element y = 0; y < x.order(); ++y) {
          Element pre = 0;
          while (cols[b][pre] != y) ++pre;
          hom = hom && cols[x.op(a, b)][y] == cols[b][cols[a][pre]];
        }
      }
    }
    o.require(hom, e.name + ": S_(a*b) != S_b^-1 S_a S_b");
  }
  o.require(groups == 9, "expected 9 abelian groups of odd order <= 15");
  FiniteGroup z4 = make_cyclic(4);
  Quandle x4 = gen_alexander(z4, inversion_map(z4));
  auto r4 = embed_in_conj_inn(x4);
  o.require(r4.is_homomorphism(), "Z/4: not a homomorphism");
  o.require(!r4.is_injective() && r4.injectivity_witness == std::make_pair(Element{0}, Element{2}),
            "Z/4: expected witness S_0 = S_2");
  o.require(oracle::column(x4, 0) == oracle::column(x4, 2), "Z/4: oracle columns S_0, S_2 differ");
  return o;
}

Outcome known_values() {
  Outcome o;
  Quandle conj_s3 = conj_quandle(make_symmetric(3), 1);
  o.require(automorphism_group_backtrack(conj_s3).order() == 6, "|Aut(Conj(S3))| != 6");
  o.require(oracle::quandle_automorphisms(conj_s3).size() == 6, "oracle |Aut(Conj(S3))| != 6");

  FiniteGroup q8 = make_quaternion8();
  const auto z = oracle::center(q8);
  std::size_t central = 0;
  for (const auto& f : oracle::group_automorphisms(q8)) {
    bool ok = true;
    for (Element a = 0; a < 8; ++a) ok = ok && std::binary_search(z.begin(), z.end(), q8.mul(q8.inverse(a), f[a]));
    central += ok;
  }
  o.require(central == 4, "oracle |Autcent(Q8)| = " + std::to_string(central));
  std::size_t lib_central = 0;
  for (const auto& f : automorphism_group(q8)) lib_central += is_central_automorphism(q8, f);
  o.require(lib_central == 4, "|Autcent(Q8)| = " + std::to_string(lib_central));

  o.require(inner_group(dihedral(3)).is_k_transitive(3), "R_3 not 3-transitive");
  o.require(oracle::k_transitive(3, inn_closure(dihedral(3)), 3), "R_3 not 3-transitive (oracle)");

  auto report = check_mccarron_bound(3, 6);
  o.require(report.passed(), report.passed() ? "" : report.failures[0].input + ": " + report.failures[0].clause);
  for (std::size_t n = 4; n <= 6; ++n) {
    o.require(report.fact("3-transitive classes of order " + std::to_string(n)) == "0",
              "3-transitive quandle of order " + std::to_string(n));
    for (const auto& q : enumerate_quandle_classes(n)) {
      o.require(!oracle::k_transitive(n, inn_closure(q), 3), "oracle: 3-transitive quandle of order " + std::to_string(n));
    }
  }
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "dihedral orders", 10, dihedral_orders);
  ok &= run_criterion(2, "Takasaki structure", 120, takasaki_structure);
  ok &= run_criterion(3, "connected / fixed-point free / twisted map bijective", 60, bae_choe);
  ok &= run_criterion(4, "connected implies abelian", 60, connected_implies_abelian);
  ok &= run_criterion(5, "double transitivity", 120, double_transitivity);
  ok &= run_criterion(6, "backtracking Aut equals brute force", 120, oracle_equivalence);
  ok &= run_criterion(7, "embedding into Conj(Inn)", 30, embedding);
  ok &= run_criterion(8, "known values", 600, known_values);
  std::printf("%s\n", ok ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: failures");
  return ok ? 0 : 1;
}
