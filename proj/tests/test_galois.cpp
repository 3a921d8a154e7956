#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "mckn/galois.hpp"

using namespace mckn;

namespace {

Table sz8_table() {
  static Table t = dixon_schneider(suzuki_group(1).group);
  return t;
}

// b with b = r_i mod m_i for pairwise coprime moduli, by search.
long crt(const std::vector<std::pair<long, long>>& conds, long m) {
  for (long b = 1; b < m; ++b) {
    bool ok = true;
    for (auto [r, mi] : conds) ok = ok && nt::mod(b - r, mi) == 0;
    if (ok) return b;
  }
  return -1;
}

int moved_points(const std::vector<int>& perm) {
  int n = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) n += perm[i] != static_cast<int>(i);
  return n;
}

}  // namespace

TEST(Galois, HGroupExamples) {
  EXPECT_EQ(h_group(5, 20).elements, (std::vector<long>{1, 9, 13, 17}));
  EXPECT_EQ(h_group(5, 1820).size(), 48u);
  EXPECT_EQ(h_group(7, 1).elements, (std::vector<long>{1}));
  // p does not divide m: H is the cyclic group generated by p.
  EXPECT_EQ(h_group(2, 7).elements, (std::vector<long>{1, 2, 4}));
  EXPECT_THROW(h_group(6, 10), InvalidArgument);
  EXPECT_EQ(galois_group(12), (std::vector<long>{1, 5, 7, 11}));
}

TEST(GaloisProperty, HGroupIsSubgroup) {
  for (long p : {2, 3, 5, 7, 13})
    for (long m : {1, 4, 9, 20, 24, 56, 91, 168, 1820}) {
      HGroup H = h_group(p, m);
      EXPECT_TRUE(H.contains(1));
      for (long a : H.elements) {
        EXPECT_EQ(std::gcd(a, m), 1);
        for (long b : H.elements) EXPECT_TRUE(H.contains(a * b)) << p << " " << m;
        bool has_inverse = false;
        for (long b : H.elements) has_inverse |= nt::mod(a * b, m) == 1 % m;
        EXPECT_TRUE(has_inverse);
      }
    }
}

TEST(Galois, ActOnSuzukiTable) {
  Table t = sz8_table();
  ASSERT_EQ(t->exponent(), 1820);
  auto id = act_on_table(*t, {1820, 1});
  EXPECT_EQ(moved_points(id), 0);
  // i -> -i fixing the 5-, 7- and 13-power roots of unity swaps the two degree-14 rows only.
  long b = crt({{3, 4}, {1, 455}}, 1820);
  auto perm = act_on_table(*t, {1820, b});
  EXPECT_EQ(moved_points(perm), 2);
  for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_TRUE(perm[i] == static_cast<int>(i) || t->degree(i) == 14);
  EXPECT_THROW(act_on_table(*t, {20, 1}), InvalidArgument);
}

TEST(Galois, ActOnAffineTable) {
  Table t = dixon_schneider(agl18_normalizer());
  long m = t->exponent();
  ASSERT_EQ(m % 21, 0);
  // A cube root of unity goes to its square; the 7- and 2-power roots are fixed.
  long b = crt({{2, 3}, {1, m / 3}}, m);
  auto perm = act_on_table(*t, {m, b});
  EXPECT_EQ(moved_points(perm), 4);
  for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_EQ(perm[static_cast<std::size_t>(perm[i])], static_cast<int>(i));
}

TEST(GaloisProperty, ActionIsHomomorphism) {
  for (Table t : {sz8_table(), dixon_schneider(agl18_normalizer())}) {
    long m = t->exponent();
    for (long p : {2, 3, 5, 7, 13}) {
      HGroup H = h_group(p, m);
      std::map<long, std::vector<int>> act;
      for (std::size_t i = 0; i < H.size(); ++i) act[H.elements[i]] = act_on_table(*t, H[i]);
      for (long a : H.elements)
        for (long c : H.elements) {
          const auto& pa = act[a];
          const auto& pc = act[c];
          const auto& pac = act[nt::mod(a * c, m)];
          for (std::size_t r = 0; r < pa.size(); ++r) EXPECT_EQ(pc[static_cast<std::size_t>(pa[r])], pac[r]);
        }
      // Degrees are Galois-invariant, so p'-rows go to p'-rows.
      for (const auto& [b, perm] : act)
        for (std::size_t r = 0; r < perm.size(); ++r) EXPECT_EQ(t->degree(r), t->degree(static_cast<std::size_t>(perm[r])));
    }
  }
}

TEST(GaloisProperty, PowerCompatibility) {
  std::vector<Table> tables{sz8_table(), dixon_schneider(agl18_normalizer()),
                            dixon_schneider(small_group("psl2_8").group),
                            dixon_schneider(torus_normalizer("2B2", 1, 13).group)};
  for (const auto& t : tables) {
    EXPECT_TRUE(power_compatibility_check(*t, 1));
    for (long b : galois_group(t->exponent())) EXPECT_TRUE(power_compatibility_check(*t, b)) << t->name << " b=" << b;
  }
  for (long b : h_group(5, 1820).elements) EXPECT_TRUE(power_compatibility_check(*sz8_table(), b));
}

TEST(Galois, CorruptedTableFailsPowerCheck) {
  CharacterTable bad = *sz8_table();
  long b = crt({{3, 4}, {1, 455}}, 1820);
  ASSERT_TRUE(power_compatibility_check(bad, b));
  // Make one degree-14 row real on one of the two classes of order 4.
  for (auto& row : bad.rows) {
    if (row.degree() != Cyclotomic(14)) continue;
    for (int c = 0; c < bad.num_classes(); ++c) {
      if (bad.classes.element_orders[static_cast<std::size_t>(c)] != 4) continue;
      row[static_cast<std::size_t>(c)] = Cyclotomic(2);
      break;
    }
    break;
  }
  EXPECT_FALSE(power_compatibility_check(bad, b));
}

TEST(Galois, CliffordLabels) {
  auto count = [](const std::vector<McKayLabel>& ls) {
    std::map<std::size_t, int> by_size;
    for (const auto& l : ls) by_size[l.orbit_size]++;
    return by_size;
  };
  TorusModel m13 = torus_normalizer("2B2", 1, 13);
  auto l13 = clifford_label(m13, *dixon_schneider(m13.group));
  EXPECT_EQ(count(l13), (std::map<std::size_t, int>{{1, 4}, {4, 3}}));
  for (const auto& l : l13) EXPECT_EQ(l.eta_degree, 1);

  TorusModel m5 = torus_normalizer("2B2", 1, 5);
  EXPECT_EQ(count(clifford_label(m5, *dixon_schneider(m5.group))), (std::map<std::size_t, int>{{1, 4}, {4, 1}}));

  // D16 on F_7^2: the trivial orbit carries Irr(D16); each of the six 8-orbits
  // has stabilizer of order 2 and carries two degree-8 rows.
  TorusModel d7 = torus_normalizer(torus_normalizer_spec("2F4", 1, "q2-1"));
  Table t = dixon_schneider(d7.group);
  auto l7 = clifford_label(d7, *t);
  EXPECT_EQ(count(l7), (std::map<std::size_t, int>{{1, 7}, {8, 12}}));
  long sum = 0;
  for (std::size_t i = 0; i < l7.size(); ++i) sum += t->degree(i) * t->degree(i);
  EXPECT_EQ(static_cast<std::uint64_t>(sum), d7.group->order());
  std::set<std::size_t> reps;
  for (const auto& l : l7) reps.insert(l.orbit_rep);
  EXPECT_EQ(reps.size(), 7u);
}

TEST(GaloisProperty, CliffordLabelsBijective) {
  for (const auto& r : torus_rows("2B2", 1)) {
    TorusModel m = torus_normalizer(torus_normalizer_spec("2B2", 1, r.row));
    Table t = dixon_schneider(m.group);
    auto ls = clifford_label(m, *t);
    std::set<std::tuple<std::size_t, int>> keys;
    for (const auto& l : ls) keys.emplace(l.orbit_rep, l.eta_index);
    EXPECT_EQ(keys.size(), t->rows.size()) << r.row;
  }
  for (const auto& r : torus_rows("2G2", 1)) {
    TorusModel m = torus_normalizer(torus_normalizer_spec("2G2", 1, r.row));
    EXPECT_NO_THROW(clifford_label(m, *dixon_schneider(m.group))) << r.row;
  }
}
