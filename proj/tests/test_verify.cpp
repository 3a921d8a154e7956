#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "action_helpers.hpp"
#include "mckn/verify.hpp"

using namespace mckn;
using namespace mckn::test_support;

TEST(Verify, MatchTrivialVersusSwap) {
  ActingGroup A = ActingGroup::make(2, 3, 1);
  ActionOnSet X{A, 3, {{0, 1, 2}, {0, 1, 2}}};
  ActionOnSet Y{A, 3, {{0, 1, 2}, {1, 0, 2}}};
  MatchResult m = match_actions(X, Y);
  EXPECT_FALSE(m.ok);
  EXPECT_FALSE(m.reason.empty());
  MatchResult self = match_actions(Y, Y);
  ASSERT_TRUE(self.ok);
  for (auto [x, y] : self.pairs) EXPECT_EQ(x, y);
}

TEST(Verify, RejectsBrokenRelations) {
  ActingGroup A = ActingGroup::make(3, 2, 1);
  ActionOnSet X{A, 2, {{0, 1}, {1, 0}, {0, 1}}};
  EXPECT_THROW(X.validate(), UnsupportedAction);
}

TEST(VerifyProperty, MatchAgreesWithBruteForce) {
  std::mt19937 rng(20261016);
  int agree_yes = 0, agree_no = 0;
  for (auto [k, p, m] : std::vector<std::tuple<long, long, long>>{{2, 2, 5}, {3, 2, 7}, {2, 3, 8}, {4, 5, 1}, {2, 5, 24}}) {
    ActingGroup A = ActingGroup::make(k, p, m);
    for (int trial = 0; trial < 25; ++trial) {
      ActionOnSet X = random_action(A, rng, 8);
      ActionOnSet Y = trial % 2 ? random_action(A, rng, 8) : X;
      if (Y.n != X.n) continue;
      std::vector<int> sigma(Y.n);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      Y = relabel(Y, sigma);
      MatchResult res = match_actions(X, Y);
      bool brute = brute_force_match(X, Y);
      ASSERT_EQ(res.ok, brute) << "k=" << k << " m=" << m << " trial " << trial;
      if (res.ok) {
        std::vector<int> to(X.n);
        for (auto [x, y] : res.pairs) to[static_cast<std::size_t>(x)] = y;
        EXPECT_TRUE(equivariant(X, Y, to));
        ++agree_yes;
      } else {
        ++agree_no;
      }
    }
  }
  EXPECT_GT(agree_yes, 0);
  EXPECT_GT(agree_no, 0);
}

TEST(Verify, TablesEquivalentUpToPermutation) {
  Table t = dixon_schneider(torus_normalizer("2B2", 1, 13).group);
  CharacterTable u = *t;
  std::reverse(u.rows.begin(), u.rows.end());
  // Swap two columns with the same class size and element order.
  bool swapped = false;
  for (int a = 1; a < u.num_classes() && !swapped; ++a)
    for (int b = a + 1; b < u.num_classes() && !swapped; ++b) {
      auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b);
      if (u.classes.sizes[A] != u.classes.sizes[B] || u.classes.element_orders[A] != u.classes.element_orders[B]) continue;
      for (auto& r : u.rows) std::swap(r[A], r[B]);
      swapped = true;
    }
  ASSERT_TRUE(swapped);
  EXPECT_TRUE(tables_equivalent(*t, u));
  u.rows[1][1] = Cyclotomic(7);
  EXPECT_FALSE(tables_equivalent(*t, u));
  EXPECT_FALSE(tables_equivalent(*t, *dixon_schneider(torus_normalizer("2B2", 1, 5).group)));
}

TEST(VerifyProperty, CrossModelSuzuki) {
  for (long p : {5, 7, 13}) EXPECT_TRUE(cross_model_check("2B2", 1, p)) << p;
  EXPECT_TRUE(cross_model_check("2G2", 0, 2));
  EXPECT_TRUE(cross_model_check("2G2", 0, 7));
}

TEST(Verify, SuzukiTargets) {
  std::map<long, std::size_t> counts{{5, 5}, {7, 5}, {13, 7}};
  for (auto [p, n] : counts) {
    VerificationReport rep = verify_target("2B2", 1, p);
    ASSERT_TRUE(rep.count_global.has_value());
    EXPECT_EQ(*rep.count_global, n) << p;
    EXPECT_EQ(rep.count_local, n) << p;
    EXPECT_EQ(rep.count_model, std::optional<std::size_t>(n)) << p;
    EXPECT_EQ(rep.model_equivalent, std::optional<bool>(true));
    EXPECT_EQ(rep.part1, std::optional<bool>(true)) << rep.failure;
    EXPECT_EQ(rep.part2, std::optional<bool>(true));
    EXPECT_EQ(rep.bijection.size(), n);
    EXPECT_EQ(rep.extensions.size(), 2 * n);
    EXPECT_EQ(rep.outer_order, 3);
  }
}

TEST(Verify, Psl28Targets) {
  VerificationReport r2 = verify_target("2G2", 0, 2);
  EXPECT_EQ(r2.count_global, std::optional<std::size_t>(8));
  EXPECT_EQ(r2.count_local, 8u);
  EXPECT_EQ(r2.part1, std::optional<bool>(true));
  EXPECT_EQ(r2.part2, std::optional<bool>(true));
  VerificationReport r7 = verify_target("2G2", 0, 7);
  EXPECT_EQ(r7.count_global, std::optional<std::size_t>(r7.count_local));
  EXPECT_EQ(r7.part1, std::optional<bool>(true));
  EXPECT_EQ(r7.part2, std::optional<bool>(true));
}

TEST(Verify, McKayCountEquality) {
  for (const auto& t : list_targets()) {
    if (t.scope != Scope::Global) continue;
    VerificationReport rep = verify_target(t.family, t.f, t.p);
    EXPECT_EQ(rep.count_global, std::optional<std::size_t>(rep.count_local)) << t.label << " p=" << t.p;
  }
}

TEST(Verify, AffineLocalExtensions) {
  // The Frobenius acts on the 168-group by conjugation, so every row is invariant.
  Group M = agl18_normalizer();
  Table t = dixon_schneider(M);
  Side s{"local", t, std::make_shared<const Extender>(t, GroupMap::conjugation(M, M->generators()[2]), 3)};
  auto entries = condition_two(s, 2);
  EXPECT_EQ(entries.size(), 8u);
  for (const auto& e : entries) {
    EXPECT_TRUE(e.invariant) << "row " << e.row;
    EXPECT_EQ(e.stabilizer_order, 3);
  }
}

TEST(Verify, ScopeClassification) {
  EXPECT_EQ(classify_target("2B2", 1, 5).scope, Scope::Global);
  EXPECT_EQ(classify_target("2B2", 2, 41).scope, Scope::LocalOnly);
  EXPECT_EQ(classify_target("G2", 2, 0).scope, Scope::OutOfScope);
  EXPECT_EQ(classify_target("2F4", 1, 3).scope, Scope::OutOfScope);
  EXPECT_THROW(classify_target("M11", 1, 2), UnknownTarget);
  EXPECT_THROW(verify_target("G2", 2, 3), UnsupportedAction);
  VerificationReport loc = verify_target("2B2", 2, 41);
  EXPECT_FALSE(loc.part1.has_value());
  EXPECT_FALSE(loc.failed());
  EXPECT_GT(loc.count_local, 0u);
}

TEST(Verify, TorusOrderCongruenceExamples) {
  Lemma32Report r = lemma32_check(1, 1);
  ASSERT_TRUE(r.ok());
  std::map<std::string, std::uint64_t> v;
  for (const auto& e : r.entries) v[e.name] = e.value;
  EXPECT_EQ(v["T1"], 7u);
  EXPECT_EQ(v["T2+"], 13u);
  EXPECT_EQ(v["T2-"], 5u);
  EXPECT_EQ(v["T3"], 57u);
  EXPECT_EQ(v["T4+"], 109u);
  EXPECT_EQ(v["T4-"], 37u);
  for (const auto& e : r.entries) EXPECT_TRUE(e.name != "T3" || (e.odd_primes == std::vector<std::uint64_t>{3, 19}));
  EXPECT_EQ(lemma32_check(2, 2).entries.front().value, 31u);
  EXPECT_THROW(lemma32_check(0, 3), InvalidArgument);
}

TEST(VerifyProperty, TorusOrderCongruencesSmallF) {
  Lemma32Report r = lemma32_check(1, 8);
  EXPECT_TRUE(r.identities_ok);
  for (const auto& e : r.entries) EXPECT_TRUE(e.ok) << "f=" << e.f << " " << e.name;
}

TEST(VerifyProperty, ReportsAreDeterministic) {
  EXPECT_EQ(verify_target("2B2", 1, 7).to_json().dump(), verify_target("2B2", 1, 7).to_json().dump());
}
