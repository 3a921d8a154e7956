#include <gtest/gtest.h>

#include <random>

#include "mckn/cyclo.hpp"

using mckn::Cyclotomic;
using mckn::Rational;
using mckn::zeta;

namespace {

// Independent oracle: the power basis of Q[x]/(Phi_n).
using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& m) {
  trim(a);
  while (a.size() >= m.size()) {
    Rational c = a.back() / m.back();
    std::size_t sh = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[sh + i] -= c * m[i];
    trim(a);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& m) {
  trim(a);
  Poly q(a.size() - m.size() + 1);
  while (a.size() >= m.size()) {
    Rational c = a.back() / m.back();
    std::size_t sh = a.size() - m.size();
    q[sh] = c;
    for (std::size_t i = 0; i < m.size(); ++i) a[sh + i] -= c * m[i];
    trim(a);
  }
  return q;
}

Poly cyclotomic_poly(long n) {
  Poly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
  return num;
}

// Residue of an element, embedded at order L, in the power basis mod Phi_L.
Poly power_basis(const Cyclotomic& a, long L) {
  Poly p(L);
  long s = L / a.order();
  for (const auto& [e, c] : a.terms()) p[e * s] += c;
  return poly_rem(p, cyclotomic_poly(L));
}

Cyclotomic random_element(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> ex(0, n - 1), co(-5, 5), nt(1, 4);
  std::vector<Cyclotomic::Term> t;
  int k = static_cast<int>(nt(rng));
  for (int i = 0; i < k; ++i) t.emplace_back(ex(rng), Rational(co(rng), 1 + (i % 3)));
  return Cyclotomic::from_terms(n, t);
}

const long kOrders[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 16, 20, 21, 24, 27, 28, 36, 45, 60};

}  // namespace

TEST(Cyclo, MakeRoot) {
  EXPECT_EQ(zeta(1, 0), Cyclotomic(1));
  EXPECT_EQ(zeta(4, 1) * zeta(4, 1), Cyclotomic(-1));
  EXPECT_EQ(zeta(3, 1) + zeta(3, 2), Cyclotomic(-1));
  EXPECT_EQ(zeta(2, 1), Cyclotomic(-1));
  EXPECT_EQ(zeta(6, 1), -zeta(3, 2));
  EXPECT_EQ(zeta(12, 3), zeta(4, 1));
}

TEST(Cyclo, FieldOps) {
  EXPECT_EQ(zeta(5, 1) * zeta(5, 4), Cyclotomic(1));
  EXPECT_EQ(zeta(8, 1).inv(), zeta(8, 7));
  Cyclotomic a = zeta(7, 1) + zeta(7, 6);
  EXPECT_EQ(a + a.conj(), a.scaled(2));
  EXPECT_THROW(Cyclotomic().inv(), mckn::DivisionByZero);
  Cyclotomic b = Cyclotomic(2) + zeta(5, 1).scaled(Rational(1, 3));
  EXPECT_EQ(b * b.inv(), Cyclotomic(1));
}

TEST(Cyclo, Galois) {
  EXPECT_EQ((zeta(5, 1) + zeta(5, 4)).galois(2), zeta(5, 2) + zeta(5, 3));
  EXPECT_EQ(zeta(4, 1).galois(3), -zeta(4, 1));
  EXPECT_EQ(Cyclotomic(Rational(7, 2)).galois(6), Cyclotomic(Rational(7, 2)));
  EXPECT_THROW(zeta(5, 1).galois(10), mckn::NonCoprimeExponent);
  EXPECT_EQ(zeta(3, 1).conj(), zeta(3, 2));
  Cyclotomic z = Cyclotomic(2) + zeta(4, 1).scaled(3);
  EXPECT_EQ(z.conj(), Cyclotomic(2) - zeta(4, 1).scaled(3));
}

TEST(Cyclo, Predicates) {
  EXPECT_TRUE((zeta(3, 1) + zeta(3, 2)).is_rational());
  Cyclotomic s2 = zeta(8, 1) + zeta(8, 7);
  EXPECT_TRUE(s2.is_real());
  EXPECT_FALSE(s2.is_rational());
  EXPECT_EQ(s2 * s2, Cyclotomic(2));
  EXPECT_FALSE(zeta(8, 1).is_real());
}

TEST(Cyclo, Approx) {
  EXPECT_NEAR(zeta(4, 1).approx().real(), 0.0, 1e-12);
  EXPECT_NEAR(zeta(4, 1).approx().imag(), 1.0, 1e-12);
  EXPECT_NEAR((zeta(8, 1) + zeta(8, 7)).approx().real(), 1.41421356237, 1e-9);
  EXPECT_NEAR(Cyclotomic(-1).approx().real(), -1.0, 1e-12);
}

TEST(Cyclo, ConductorIsMinimal) {
  EXPECT_EQ((zeta(15, 5)).order(), 3);
  EXPECT_EQ((zeta(20, 4) + zeta(20, 16)).order(), 5);
  EXPECT_EQ((zeta(9, 3) + zeta(9, 6)).order(), 1);
  EXPECT_EQ((zeta(24, 8) * zeta(24, 6)).order(), 12);
  // sqrt(-3) has conductor 3, sqrt(5) has conductor 5.
  EXPECT_EQ((zeta(3, 1) - zeta(3, 2)).order(), 3);
  EXPECT_EQ((zeta(5, 1) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)).order(), 5);
}

TEST(CycloProperty, CanonicalFormUniqueness) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kOrders) - 1);
  int equal_pairs = 0;
  for (int it = 0; it < 1000; ++it) {
    long na = kOrders[pick(rng)], nb = kOrders[pick(rng)];
    Cyclotomic a = random_element(rng, na);
    // Every fifth pair is built to coincide through a different expression.
    Cyclotomic b = random_element(rng, nb);
    if (it % 5 == 0) b = (a + b) - b;
    bool canon_eq = a == b;
    bool approx_eq = std::abs(a.approx() - b.approx()) < 1e-9;
    long L = std::lcm(std::max(a.order(), 1L), std::max(b.order(), 1L));
    Poly d = power_basis(a - b, L);
    Poly pa = power_basis(a, L), pb = power_basis(b, L);
    trim(pa);
    trim(pb);
    bool oracle_eq = pa == pb;
    EXPECT_EQ(canon_eq, approx_eq) << a.str() << " vs " << b.str();
    EXPECT_EQ(canon_eq, oracle_eq) << a.str() << " vs " << b.str();
    EXPECT_EQ(canon_eq, d.empty());
    equal_pairs += canon_eq;
  }
  EXPECT_GE(equal_pairs, 200);
}

TEST(CycloProperty, GaloisIsRingHomomorphism) {
  std::mt19937 rng(777);
  for (long n : {5L, 8L, 12L, 15L, 21L, 24L, 36L}) {
    for (int it = 0; it < 30; ++it) {
      Cyclotomic a = random_element(rng, n), b = random_element(rng, n);
      for (long s = 1; s < n; ++s) {
        if (std::gcd(s, n) != 1) continue;
        EXPECT_EQ((a + b).galois(s), a.galois(s) + b.galois(s));
        EXPECT_EQ((a * b).galois(s), a.galois(s) * b.galois(s));
        for (long t = 1; t < n; t += 2) {
          if (std::gcd(t, n) != 1) continue;
          EXPECT_EQ(a.galois(t).galois(s), a.galois(s * t % n));
        }
      }
    }
  }
}

TEST(CycloProperty, ConjIsInvolution) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kOrders) - 1);
  for (int it = 0; it < 100; ++it) {
    Cyclotomic a = random_element(rng, kOrders[pick(rng)]);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ(a.conj(), a.galois(-1));
  }
}

TEST(CycloProperty, FullExponentRewriteAgrees) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> co(-3, 3);
  for (long n : kOrders) {
    for (int it = 0; it < 10; ++it) {
      std::vector<Cyclotomic::Term> t;
      Cyclotomic sum;
      for (long e = 0; e < n; ++e) {
        Rational c(co(rng));
        t.emplace_back(e, c);
        sum += zeta(n, e).scaled(c);
      }
      Cyclotomic whole = Cyclotomic::from_terms(n, t);
      EXPECT_EQ(whole, sum);
      Poly pw = power_basis(whole, n), ps = power_basis(sum, n);
      EXPECT_EQ(pw, ps);
    }
  }
}

TEST(CycloProperty, InverseOracle) {
  std::mt19937 rng(5);
  for (long n : {3L, 5L, 8L, 9L, 12L, 20L}) {
    for (int it = 0; it < 10; ++it) {
      Cyclotomic a = random_element(rng, n);
      if (a.is_zero()) continue;
      EXPECT_EQ(a * a.inv(), Cyclotomic(1));
    }
  }
}
