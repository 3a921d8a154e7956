#include <gtest/gtest.h>

#include <map>
#include <algorithm>
#include <set>

#include "mckn/chartab.hpp"
#include "mckn/zoo.hpp"

using namespace mckn;

namespace {

// Polynomial product over GF(p) reduced by the field's modulus, on coefficient vectors.
int slow_mul(const gf::Field& F, int a, int b) {
  long p = F.p();
  int k = F.degree();
  std::vector<long> x(static_cast<std::size_t>(k)), y(static_cast<std::size_t>(k)), m(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i, a /= static_cast<int>(p), b /= static_cast<int>(p)) {
    x[static_cast<std::size_t>(i)] = a % p;
    y[static_cast<std::size_t>(i)] = b % p;
  }
  long low = F.modulus_low();
  for (int i = 0; i < k; ++i, low /= p) m[static_cast<std::size_t>(i)] = low % p;
  std::vector<long> z(static_cast<std::size_t>(2 * k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) z[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
  for (int d = 2 * k - 1; d >= k; --d) {
    long c = z[static_cast<std::size_t>(d)] % p;
    z[static_cast<std::size_t>(d)] = 0;
    for (int i = 0; i < k; ++i) z[static_cast<std::size_t>(d - k + i)] -= c * m[static_cast<std::size_t>(i)];
  }
  long r = 0, pw = 1;
  for (int i = 0; i < k; ++i, pw *= p) r += nt::mod(z[static_cast<std::size_t>(i)], p) * pw;
  return static_cast<int>(r);
}

std::multiset<std::uint64_t> class_sizes(const Group& G) {
  std::multiset<std::uint64_t> s;
  for (const auto& c : G->classes()) s.insert(c.size);
  return s;
}

std::multiset<std::size_t> orbit_sizes(const TorusModel& tm) {
  std::multiset<std::size_t> s;
  for (const auto& o : tm.torus_orbits()) s.insert(o.size());
  return s;
}

std::set<std::size_t> orbit_size_set(const TorusModel& tm) {
  std::set<std::size_t> s;
  for (const auto& o : tm.torus_orbits()) s.insert(o.size());
  return s;
}

}  // namespace

TEST(Field, MatchesPolynomialArithmetic) {
  for (auto [p, k] : std::vector<std::pair<long, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 5}, {7, 1}}) {
    gf::Field F(p, k);
    for (int a = 0; a < F.size(); ++a)
      for (int b = 0; b < F.size(); ++b) ASSERT_EQ(F.mul(a, b), slow_mul(F, a, b)) << p << "^" << k;
    for (int a = 1; a < F.size(); ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
  }
  EXPECT_EQ(gf::Field(2, 3).modulus_low(), 3);  // x^3 + x + 1
}

TEST(Zoo, SuzukiSmall) {
  ZooGroup S = suzuki_group(1);
  EXPECT_EQ(S.group->degree(), 65u);
  EXPECT_EQ(S.group->order(), 29120u);
  // 2-transitive: the point stabilizer is transitive on the other 64 points.
  const auto& lv = S.group->chain().levels();
  ASSERT_GE(lv.size(), 2u);
  EXPECT_EQ(lv[0].orbit.size(), 65u);
  EXPECT_EQ(lv[1].orbit.size(), 64u);
  EXPECT_EQ(S.group->num_classes(), 11);
}

TEST(Zoo, SuzukiLarge) {
  ZooGroup S = suzuki_group(2);
  EXPECT_EQ(S.group->degree(), 1025u);
  EXPECT_EQ(S.group->order(), 32537600u);
  EXPECT_THROW(S.group->require_enumerable(), TooLargeForEnumeration);
  EXPECT_THROW(suzuki_group(0), InvalidArgument);
}

TEST(Zoo, SmallGroups) {
  std::map<std::string, std::uint64_t> orders{{"psl2_8", 504},  {"sl3_4", 60480}, {"psl3_4", 20160}, {"su3_2", 216},
                                              {"su3_2_ext", 432}, {"su3_3", 6048}, {"g2_2", 12096}};
  for (const auto& [tag, n] : orders) EXPECT_EQ(small_group(tag).group->order(), n) << tag;
  EXPECT_EQ(small_group("psl2_8").group->num_classes(), 9);
  EXPECT_THROW(small_group("m11"), UnknownTarget);

  ZooGroup ext = small_group("su3_2_ext");
  ZooGroup base = small_group("su3_2");
  ASSERT_EQ(ext.group->degree(), base.group->degree());
  for (const auto& g : base.group->generators()) EXPECT_TRUE(ext.group->contains(g));
  for (const auto& g : ext.group->generators()) EXPECT_TRUE(normalizes(g, base.group));

  ZooGroup g2 = small_group("g2_2");
  ZooGroup u33 = small_group("su3_3");
  for (const auto& g : u33.group->generators()) EXPECT_TRUE(g2.group->contains(g));
}

TEST(Zoo, Agl18) {
  Group N = agl18_normalizer();
  EXPECT_EQ(N->order(), 168u);
  Table t = dixon_schneider(N);
  std::multiset<long> deg;
  for (std::size_t i = 0; i < t->rows.size(); ++i) deg.insert(t->degree(i));
  EXPECT_EQ(deg, (std::multiset<long>{1, 1, 1, 3, 3, 7, 7, 7}));
  Group R = sylow_subgroup(N, 2);
  EXPECT_EQ(R->order(), 8u);
  for (const auto& g : N->generators()) EXPECT_TRUE(normalizes(g, R));
  for (const auto& c : R->classes()) EXPECT_LE(c.element_order, 2);
}

TEST(Zoo, FieldAutomorphism) {
  for (auto zg : {suzuki_group(1), small_group("psl2_8")}) {
    GroupMap a = field_automorphism(zg);
    EXPECT_EQ(a.order(), 3);
    auto perm = induced_class_permutation(a);
    bool moved = false;
    for (std::size_t c = 0; c < perm.size(); ++c) moved |= perm[c] != static_cast<int>(c);
    EXPECT_TRUE(moved) << "inner automorphisms fix every class";
    GroupMap a2 = a.compose(a);
    for (Index i = 0; i < zg.group->order(); i += 97) EXPECT_EQ(a2.apply(i), a.apply(a.apply(i)));
  }
  ZooGroup bare{agl18_normalizer(), nullptr};
  EXPECT_THROW(field_automorphism(bare), InvalidArgument);
}

TEST(Zoo, SuzukiTorusRows) {
  TorusModel m13 = torus_normalizer("2B2", 1, 13);
  EXPECT_EQ(m13.group->order(), 52u);
  EXPECT_EQ(orbit_sizes(m13), (std::multiset<std::size_t>{4, 4, 4}));
  TorusModel m7 = torus_normalizer("2B2", 1, 7);
  EXPECT_EQ(m7.group->order(), 14u);
  EXPECT_EQ(orbit_sizes(m7), (std::multiset<std::size_t>{2, 2, 2}));
  TorusModel m5 = torus_normalizer("2B2", 1, 5);
  EXPECT_EQ(m5.group->order(), 20u);
  EXPECT_EQ(orbit_sizes(m5), (std::multiset<std::size_t>{4}));
  EXPECT_THROW(torus_normalizer("2B2", 1, 2), InvalidArgument);
  EXPECT_THROW(torus_normalizer("2B2", 1, 11), InvalidArgument);
}

TEST(ZooProperty, SuzukiNormalizersMatchModels) {
  Group G = suzuki_group(1).group;
  for (long p : {5, 7, 13}) {
    Group N = normalizer(G, sylow_subgroup(G, p));
    TorusModel m = torus_normalizer("2B2", 1, p);
    EXPECT_EQ(N->order(), m.group->order()) << p;
    EXPECT_EQ(class_sizes(N), class_sizes(m.group)) << p;
  }
}

TEST(ZooProperty, OrbitSizesMatchTables) {
  for (long f : {1, 2}) {
    for (const auto& r : torus_rows("2B2", f)) {
      TorusModel m = torus_normalizer(torus_normalizer_spec("2B2", f, r.row));
      std::set<std::size_t> want(m.spec.orbit_sizes.begin(), m.spec.orbit_sizes.end());
      EXPECT_EQ(orbit_size_set(m), want) << r.row << " f=" << f;
    }
  }
  for (const auto& r : torus_rows("2G2", 1)) {
    TorusModel m = torus_normalizer(torus_normalizer_spec("2G2", 1, r.row));
    EXPECT_EQ(m.group->order(), m.size() * static_cast<std::uint64_t>(m.spec.complement_order));
    std::set<std::size_t> want(m.spec.orbit_sizes.begin(), m.spec.orbit_sizes.end());
    // q^2-1 = 2 mod 4: the involution of the cyclic torus is fixed by inversion.
    if (r.row == "q2-1") want.insert(1);
    EXPECT_EQ(orbit_size_set(m), want) << r.row;
  }
}

TEST(ZooProperty, TwistedF4Complements) {
  std::map<std::string, long> order{{"q2-1", 16},         {"q2+1", 48},          {"q2+r+1", 96},
                                    {"q2-r+1", 96},       {"q4-q2+1", 6},        {"q4-r3+q2-r+1", 12},
                                    {"q4+r3+q2+r+1", 12}};
  for (const auto& r : torus_rows("2F4", 1)) {
    TorusModel m = torus_normalizer(torus_normalizer_spec("2F4", 1, r.row));
    EXPECT_EQ(m.complement->order(), static_cast<std::uint64_t>(order[r.row])) << r.row;
    auto got = orbit_size_set(m);
    std::set<std::size_t> table(m.spec.orbit_sizes.begin(), m.spec.orbit_sizes.end());
    for (auto s : got) EXPECT_TRUE(table.count(s)) << r.row << " orbit " << s;
  }
  // Over F_7 every line is a reflection line of D16, so only the 8-orbits occur;
  // at d = 31 all four element types are present.
  TorusModel d7 = torus_normalizer(torus_normalizer_spec("2F4", 1, "q2-1"));
  EXPECT_EQ(orbit_size_set(d7), (std::set<std::size_t>{8}));
  TorusModel d31 = torus_normalizer(torus_normalizer_spec("2F4", 2, "q2-1"));
  EXPECT_EQ(orbit_size_set(d31), (std::set<std::size_t>{8, 16}));
  // Likewise at d = 9 every element of order 9 lies on a reflection line.
  TorusModel d9 = torus_normalizer(torus_normalizer_spec("2F4", 1, "q2+1"));
  EXPECT_EQ(orbit_sizes(d9), (std::multiset<std::size_t>{8, 24, 24, 24}));
  TorusModel d33 = torus_normalizer(torus_normalizer_spec("2F4", 2, "q2+1"));
  EXPECT_EQ(orbit_size_set(d33), (std::set<std::size_t>{8, 24, 48}));
  for (const auto& o : d33.torus_orbits()) {
    EXPECT_TRUE(!std::binary_search(o.begin(), o.end(), d33.index({1, 1})) || o.size() == 24u) << "t5 representative";
    EXPECT_TRUE(!std::binary_search(o.begin(), o.end(), d33.index({11, 22})) || o.size() == 8u) << "t4 representative";
  }
  for (const auto& o : d31.torus_orbits()) {
    EXPECT_TRUE(!std::binary_search(o.begin(), o.end(), d31.index({0, 1})) || o.size() == 8u) << "t1 representative";
    EXPECT_TRUE(!std::binary_search(o.begin(), o.end(), d31.index({1, 9})) || o.size() == 8u) << "t2 representative";
  }
  TorusModel d13 = torus_normalizer(torus_normalizer_spec("2F4", 1, "q2+r+1"));
  EXPECT_EQ(orbit_size_set(d13), (std::set<std::size_t>{24, 96}));
}
