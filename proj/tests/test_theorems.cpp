#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quandlekit/report.hpp"
#include "quandlekit/theorems.hpp"

using namespace quandlekit;

namespace {

std::string fact(const TheoremReport& r, const std::string& key) {
  auto v = r.fact(key);
  return v ? *v : "<missing " + key + ">";
}

void expect_pass(const TheoremReport& r) {
  EXPECT_TRUE(r.passed()) << r.theorem_id << ": " << (r.failures.empty() ? "" : r.failures[0].input + ": " + r.failures[0].clause);
  EXPECT_GT(r.instances_tested, 0u) << r.theorem_id;
}

Element first_of_order(const FiniteGroup& g, std::size_t k) {
  for (Element a = 0; a < g.order(); ++a) {
    if (oracle::element_order(g, a) == k) return a;
  }
  throw std::logic_error("no element of that order");
}

}  // namespace

TEST(EmbeddingZCaut, Examples) {
  FiniteGroup z5 = make_cyclic(5);
  auto r = check_prop_embedding_zg_caut(z5, inversion_map(z5));
  expect_pass(r);
  EXPECT_EQ(fact(r, "image order [Z/5, phi=[0 4 3 2 1]]"), "20");
  EXPECT_EQ(fact(r, "|Aut(Alex)| [Z/5, phi=[0 4 3 2 1]]"), "20");

  FiniteGroup s3 = make_symmetric(3);
  auto rs = check_prop_embedding_zg_caut(s3, identity_map(s3));
  expect_pass(rs);
  EXPECT_EQ(rs.facts[0].second, "6");

  FiniteGroup z1 = make_cyclic(1);
  expect_pass(check_prop_embedding_zg_caut(z1, identity_map(z1)));
  EXPECT_THROW(check_prop_embedding_zg_caut(s3, inversion_map(s3)), PreconditionError);
}

TEST(EmbeddingZCaut, NonabelianCatalog) {
  for (const auto& e : nonabelian_catalog(12)) {
    for (const auto& phi : automorphism_group(e.group)) expect_pass(check_prop_embedding_zg_caut(e.group, phi));
  }
}

TEST(TakasakiAut, Examples) {
  auto r9 = check_thm_takasaki_aut(make_cyclic(9));
  expect_pass(r9);
  EXPECT_EQ(fact(r9, "|Aut(T(Z/9))|"), "54");
  EXPECT_EQ(fact(r9, "|Inn(T(Z/9))|"), "18");
  auto r33 = check_thm_takasaki_aut(make_abelian({3, 3}));
  expect_pass(r33);
  EXPECT_EQ(fact(r33, "|Aut(T(Z/3 x Z/3))|"), "432");
  EXPECT_EQ(fact(r33, "|Aut(Z/3 x Z/3)|"), std::to_string(oracle::group_automorphisms(make_abelian({3, 3})).size()));
  EXPECT_EQ(fact(r33, "|Inn(T(Z/3 x Z/3))|"), "18");
  auto r1 = check_thm_takasaki_aut(make_cyclic(1));
  expect_pass(r1);
  EXPECT_EQ(fact(r1, "|Aut(T(Z/1))|"), "1");
  EXPECT_THROW(check_thm_takasaki_aut(make_cyclic(4)), PreconditionError);
  EXPECT_THROW(check_thm_takasaki_aut(make_symmetric(3)), PreconditionError);
}

TEST(DihedralCorollary, Examples) {
  const std::vector<std::tuple<std::uint32_t, std::string, std::string>> cases{
      {3, "6", "6"}, {5, "20", "10"}, {7, "42", "14"}, {1, "1", "1"}};
  for (const auto& [n, aut, inn] : cases) {
    auto r = check_corollary_dihedral(n);
    expect_pass(r);
    EXPECT_EQ(fact(r, "|Aut(R_" + std::to_string(n) + ")|"), aut);
    EXPECT_EQ(fact(r, "|Inn(R_" + std::to_string(n) + ")|"), inn);
  }
  for (std::uint32_t n = 1; n <= 31; n += 2) {
    auto r = check_corollary_dihedral(n);
    expect_pass(r);
    EXPECT_EQ(fact(r, "|Aut(R_" + std::to_string(n) + ")|"), std::to_string(n * oracle::euler_phi(n)));
  }
  EXPECT_THROW(check_corollary_dihedral(4), PreconditionError);
  EXPECT_THROW(check_corollary_dihedral(0), PreconditionError);
}

TEST(ConjEmbedding, Examples) {
  auto s3 = check_prop_conj_embedding(make_symmetric(3));
  expect_pass(s3);
  EXPECT_EQ(fact(s3, "|Z(G) x| Aut(G)| [S3]"), "6");
  EXPECT_EQ(fact(s3, "|Aut(Conj(S3))|"), "6");
  EXPECT_EQ(fact(s3, "Aut(Conj) = Z x| Aut [S3]"), "true");
  auto z4 = check_prop_conj_embedding(make_cyclic(4));
  expect_pass(z4);
  EXPECT_EQ(fact(z4, "|Aut(Conj(Z/4))|"), "24");
  EXPECT_EQ(fact(z4, "|Z(G) x| Aut(G)| [Z/4]"), "8");
  EXPECT_EQ(fact(z4, "Aut(Conj) = Z x| Aut [Z/4]"), "false");
  auto q8 = check_prop_conj_embedding(make_quaternion8());
  expect_pass(q8);
  EXPECT_EQ(fact(q8, "|Inn(Conj(Q8))|"), "4");
  auto s4 = check_prop_conj_embedding(make_symmetric(4));
  expect_pass(s4);
  EXPECT_TRUE(s4.fact("Aut(Conj) = Z x| Aut [S4]"));
  EXPECT_THROW(check_prop_conj_embedding(make_cyclic(65)), BoundExceeded);
}

TEST(Commutativity, Criterion) {
  expect_pass(check_commutativity_criterion(16));
  FiniteGroup z5 = make_cyclic(5), z3 = make_cyclic(3), z4 = make_cyclic(4);
  EXPECT_TRUE(is_commutative(alexander(z5, power_map(z5, 3))));
  EXPECT_TRUE(is_commutative(alexander(z3, power_map(z3, 2))));
  for (long long u : {1, 3}) EXPECT_FALSE(is_commutative(alexander(z4, power_map(z4, u))));
}

TEST(CentralLemma, Values) {
  auto r = check_lemma_central(16);
  expect_pass(r);
  EXPECT_EQ(fact(r, "|Autcent(Q8)|"), "4");
  EXPECT_EQ(fact(r, "|Autcent(S3)|"), "1");
  // Independent count for Q8 over every bijection fixing 1.
  FiniteGroup q8 = make_quaternion8();
  const auto z = oracle::center(q8);
  std::size_t central = 0;
  for (const auto& f : oracle::group_automorphisms(q8)) {
    bool ok = true;
    for (Element a = 0; a < 8; ++a) ok = ok && std::count(z.begin(), z.end(), q8.mul(q8.inverse(a), f[a]));
    central += ok;
  }
  EXPECT_EQ(central, 4u);
}

TEST(ConnectedAbelian, NoConnectedInstances) {
  expect_pass(check_thm_connected_abelian(16));
  FiniteGroup q8 = make_quaternion8();
  std::size_t central = 0;
  for (const auto& f : automorphism_group(q8)) {
    if (!is_central_automorphism(q8, f)) continue;
    ++central;
    EXPECT_EQ(compose(compose(f, f), identity_map(q8)), identity_map(q8));
    EXPECT_FALSE(is_connected(gen_alexander(q8, f)));
  }
  EXPECT_EQ(central, 4u);
  FiniteGroup s3 = make_symmetric(3);
  EXPECT_FALSE(is_connected(gen_alexander(s3, identity_map(s3))));
}

TEST(BaeChoe, Equivalence) {
  expect_pass(check_thm_bae_choe(16));
  FiniteGroup z5 = make_cyclic(5), z4 = make_cyclic(4), v4 = make_abelian({2, 2});
  GroupMap two = power_map(z5, 2);
  EXPECT_TRUE(is_connected(alexander(z5, two)));
  EXPECT_TRUE(is_fixed_point_free(z5, two));
  EXPECT_TRUE(is_bijective(twisted_map(z5, two).map));
  GroupMap neg = inversion_map(z4);
  EXPECT_FALSE(is_connected(alexander(z4, neg)));
  EXPECT_FALSE(is_fixed_point_free(z4, neg));
  EXPECT_FALSE(is_bijective(twisted_map(z4, neg).map));
  GroupMap swap = matrix_map(v4, {{0, 1}, {1, 0}});
  EXPECT_FALSE(is_connected(alexander(v4, swap)));
  EXPECT_FALSE(is_fixed_point_free(v4, swap));
  EXPECT_FALSE(is_bijective(twisted_map(v4, swap).map));
}

TEST(FpfStructure, Examples) {
  FiniteGroup z5 = make_cyclic(5);
  auto r5 = check_thm_fpf_structure(z5, power_map(z5, 2));
  expect_pass(r5);
  EXPECT_EQ(fact(r5, "|Aut(Alex)| [Z/5, phi=[0 2 4 1 3]]"), "20");
  EXPECT_EQ(fact(r5, "|Inn(Alex)| [Z/5, phi=[0 2 4 1 3]]"), "20");
  FiniteGroup z9 = make_cyclic(9);
  auto r9 = check_thm_fpf_structure(z9, inversion_map(z9));
  expect_pass(r9);
  EXPECT_EQ(fact(r9, "|Inn(Alex)| [Z/9, phi=" + describe(inversion_map(z9)) + "]"), "18");
  FiniteGroup z33 = make_abelian({3, 3});
  GroupMap two = power_map(z33, 2);
  auto r33 = check_thm_fpf_structure(z33, two);
  expect_pass(r33);
  EXPECT_EQ(fact(r33, "|Aut(Alex)| [Z/3 x Z/3, phi=" + describe(two) + "]"), "432");
  EXPECT_EQ(fact(r33, "|Inn(Alex)| [Z/3 x Z/3, phi=" + describe(two) + "]"), "18");
  FiniteGroup z4 = make_cyclic(4);
  EXPECT_THROW(check_thm_fpf_structure(z4, inversion_map(z4)), PreconditionError);
  FiniteGroup s3 = make_symmetric(3);
  EXPECT_THROW(check_thm_fpf_structure(s3, conjugation_map(s3, first_of_order(s3, 3))), PreconditionError);
}

TEST(TransitiveAut, Lemma) {
  expect_pass(check_lemma_transitive_aut(32));
  auto orbit_of_one = [](const FiniteGroup& g) {
    std::set<Element> seen;
    for (const auto& f : automorphism_group(g)) seen.insert(f(1));
    return seen.size();
  };
  EXPECT_EQ(orbit_of_one(make_abelian({3, 3})), 8u);
  EXPECT_LT(orbit_of_one(make_cyclic(4)), 3u);
  EXPECT_LT(orbit_of_one(make_symmetric(3)), 5u);
}

TEST(Fnt, Examples) {
  for (auto [p, n, u] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {3, 1, 2}, {3, 2, 2}, {5, 1, 3}, {5, 1, 2}, {7, 1, 3}, {2, 3, 1}}) {
    if (p == 2) {
      EXPECT_THROW(check_thm_fnt(p, n, u), PreconditionError);
      continue;
    }
    auto r = check_thm_fnt(p, n, u);
    expect_pass(r);
  }
  auto r = check_thm_fnt(3, 2, 2);
  EXPECT_EQ(fact(r, "Inn 2-transitive [(Z/3)^2, u=2]"), "false");
  EXPECT_EQ(fact(r, "|Aut| [(Z/3)^2, u=2]"), "432");
  EXPECT_THROW(check_thm_fnt(4, 1, 3), PreconditionError);
  EXPECT_THROW(check_thm_fnt(5, 1, 6), PreconditionError);
  EXPECT_THROW(check_thm_fnt(5, 1, 0), PreconditionError);
  EXPECT_THROW(check_thm_fnt(3, 5, 2), BoundExceeded);
}

TEST(Mccarron, SmallOrders) {
  auto r = check_mccarron_bound(1, 5);
  expect_pass(r);
  EXPECT_EQ(fact(r, "3-transitive classes of order 3"), "1");
  EXPECT_EQ(fact(r, "3-transitive classes of order 4"), "0");
  EXPECT_EQ(fact(r, "classes of order 1"), "1");
  EXPECT_FALSE(r.fact("3-transitive classes of order 1"));
  EXPECT_THROW(check_mccarron_bound(1, 7), BoundExceeded);
  EXPECT_THROW(check_mccarron_bound(0, 3), PreconditionError);
  EXPECT_THROW(check_mccarron_bound(4, 3), PreconditionError);
}

TEST(ConjInnEmbedding, Check) { expect_pass(check_prop_conj_inn_embedding(16)); }

TEST(DoublyTransitiveCriterion, Check) { expect_pass(check_lemma_doubly_transitive(12)); }

TEST(Registry, EveryIdRunsAndPassesAtOrderTwelve) {
  VerifyOptions opt;
  opt.max_order = 12;
  std::set<std::string> ids;
  for (const auto& e : theorem_registry()) {
    ids.insert(e.id);
    auto r = e.run(opt);
    EXPECT_EQ(r.theorem_id, e.id);
    expect_pass(r);
  }
  EXPECT_EQ(ids.size(), theorem_registry().size());
  EXPECT_EQ(ids.size(), 14u);
  EXPECT_EQ(find_theorem("nope"), nullptr);
}

TEST(Reports, Deterministic) {
  VerifyOptions opt;
  opt.max_order = 10;
  for (const auto& e : theorem_registry()) {
    auto a = e.run(opt), b = e.run(opt);
    EXPECT_EQ(a.instances_tested, b.instances_tested) << e.id;
    EXPECT_EQ(a.facts, b.facts) << e.id;
    EXPECT_EQ(a.failures.size(), b.failures.size()) << e.id;
  }
}

TEST(Reports, Serialization) {
  TheoremReport r{"demo"};
  r.instances_tested = 3;
  r.fail("Z/4, phi=[0 3 2 1]", "clause");
  r.note("k", 5);
  auto j = to_json(std::vector<TheoremReport>{r});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["reports"][0]["theorem_id"], "demo");
  EXPECT_EQ(j["reports"][0]["instances_tested"], 3);
  EXPECT_EQ(j["reports"][0]["failures"][0]["input"], "Z/4, phi=[0 3 2 1]");
  EXPECT_EQ(j["reports"][0]["facts"][0]["value"], "5");
  std::ostringstream text;
  write_text(text, r, true);
  EXPECT_NE(text.str().find("FAIL demo"), std::string::npos);
  EXPECT_NE(text.str().find("counterexample: Z/4"), std::string::npos);
}
