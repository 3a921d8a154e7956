#ifndef MCKN_CHARTAB_HPP
#define MCKN_CHARTAB_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mckn/cyclo.hpp"
#include "mckn/errors.hpp"
#include "mckn/group.hpp"
#include "mckn/modp.hpp"
#include "mckn/numtheory.hpp"

namespace mckn {

/// One value per class, in the class order of the owning group or table.
struct ClassFunction {
  std::vector<Cyclotomic> values;

  const Cyclotomic& operator[](std::size_t c) const { return values[c]; }
  Cyclotomic& operator[](std::size_t c) { return values[c]; }
  std::size_t size() const { return values.size(); }
  const Cyclotomic& degree() const { return values.front(); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
  friend bool operator<(const ClassFunction& a, const ClassFunction& b) { return a.values < b.values; }

  ClassFunction galois(long b) const {
    ClassFunction r;
    for (const auto& v : values) r.values.push_back(v.galois(b));
    return r;
  }
};

inline ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r = a;
  for (std::size_t c = 0; c < r.size(); ++c) r[c] += b[c];
  return r;
}

inline ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r = a;
  for (std::size_t c = 0; c < r.size(); ++c) r[c] *= b[c];
  return r;
}

/// Class data shared by a group and its table.
struct ClassData {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<long> element_orders;
  std::vector<std::vector<int>> powers;  // powers[c][k] for 0 <= k < element_orders[c]

  int num_classes() const { return static_cast<int>(sizes.size()); }
  int power(int c, long k) const {
    return powers[static_cast<std::size_t>(c)][static_cast<std::size_t>(nt::mod(k, element_orders[c]))];
  }
  int inverse(int c) const { return power(c, -1); }
  std::uint64_t centralizer_order(int c) const { return order / sizes[static_cast<std::size_t>(c)]; }
  long exponent() const {
    long e = 1;
    for (long o : element_orders) e = std::lcm(e, o);
    return e;
  }

  static ClassData of(const FiniteGroup& G) {
    ClassData d;
    d.order = G.order();
    for (const auto& c : G.classes()) {
      d.sizes.push_back(c.size);
      d.element_orders.push_back(c.element_order);
      d.powers.push_back(c.powers);
    }
    return d;
  }
};

/// Complete table of irreducible characters.
///
/// Rows are sorted by degree, with the trivial character first and ties
/// broken by the canonical order of the value vectors.
struct CharacterTable {
  std::string name;
  Group group;  // may be null for tables loaded from data
  ClassData classes;
  std::vector<ClassFunction> rows;
  std::uint64_t prime = 0;  // the auxiliary prime used by the construction

  std::uint64_t order() const { return classes.order; }
  int num_classes() const { return classes.num_classes(); }
  long exponent() const { return classes.exponent(); }

  long degree(std::size_t row) const { return rows[row].degree().rational().get_num().get_si(); }
};

using Table = std::shared_ptr<const CharacterTable>;

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
inline Cyclotomic inner_product(const ClassData& cd, const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic s;
  for (int c = 0; c < cd.num_classes(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    s += (a[c] * b[c].conj()).scaled(Rational(static_cast<unsigned long>(cd.sizes[c])));
  }
  return s.scaled(Rational(1, static_cast<unsigned long>(cd.order)));
}

inline Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b) {
  return inner_product(t.classes, a, b);
}

/// Multiplicities of each irreducible row in f.
inline std::vector<Rational> decompose(const CharacterTable& t, const ClassFunction& f) {
  std::vector<Rational> m;
  for (const auto& r : t.rows) m.push_back(inner_product(t, f, r).rational());
  return m;
}

/// Class fusion from a subgroup H into G: fusion[d] is the G-class
/// containing the image of the representative of H-class d.
using ClassFusion = std::vector<int>;

inline ClassFusion class_fusion(const Group& H, const Group& G, const std::function<Perm(const Perm&)>& embed) {
  ClassFusion f;
  for (const auto& c : H->classes()) f.push_back(G->class_of_perm(embed(H->element(c.representative))));
  return f;
}

/// Fusion for H given on the same points as G.
inline ClassFusion class_fusion(const Group& H, const Group& G) {
  return class_fusion(H, G, [](const Perm& p) { return p; });
}

inline ClassFusion class_fusion(const GroupMap& inj) {
  const Group& H = inj.source();
  const Group& G = inj.target();
  ClassFusion f;
  for (const auto& c : H->classes()) f.push_back(G->class_of(inj.apply(c.representative)));
  return f;
}

/// Ind_H^G tau, with Ind(g_c) = |C_G(g_c)|/|H| sum_{d -> c} |d| tau(d).
inline ClassFunction induce(const ClassData& H, const ClassData& G, const ClassFusion& fusion,
                            const ClassFunction& tau) {
  ClassFunction r;
  r.values.assign(static_cast<std::size_t>(G.num_classes()), Cyclotomic());
  for (int d = 0; d < H.num_classes(); ++d)
    r[fusion[d]] += tau[d].scaled(Rational(static_cast<unsigned long>(H.sizes[d])));
  for (int c = 0; c < G.num_classes(); ++c)
    r[c] = r[c].scaled(Rational(static_cast<unsigned long>(G.centralizer_order(c)), static_cast<unsigned long>(H.order)));
  return r;
}

inline ClassFunction restrict(const ClassFusion& fusion, const ClassFunction& chi) {
  ClassFunction r;
  for (int g : fusion) r.values.push_back(chi[g]);
  return r;
}

inline std::vector<int> p_prime_rows(const CharacterTable& t, long p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.degree(i) % p != 0) out.push_back(static_cast<int>(i));
  return out;
}

inline ClassFunction trivial_character(int num_classes) {
  return ClassFunction{std::vector<Cyclotomic>(static_cast<std::size_t>(num_classes), Cyclotomic(1))};
}

inline ClassFunction regular_character(const ClassData& cd) {
  ClassFunction r;
  r.values.assign(static_cast<std::size_t>(cd.num_classes()), Cyclotomic());
  r[0] = Cyclotomic(static_cast<long>(cd.order));
  return r;
}

/// Smallest prime p = 1 mod m with p > 2 sqrt(n), searched below `bound`.
inline std::uint64_t dixon_prime(std::uint64_t n, long m, std::uint64_t bound = 100'000'000) {
  auto lo = static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<long double>(n))) + 1;
  auto mm = static_cast<std::uint64_t>(m);
  for (std::uint64_t p = (lo / mm) * mm + 1; p < bound; p += mm) {
    if (p >= lo && nt::is_prime(p)) return p;
  }
  throw NoAdmissiblePrime("no prime = 1 mod " + std::to_string(m) + " above 2 sqrt(" + std::to_string(n) +
                          ") below " + std::to_string(bound));
}

/// Checks sum deg^2 = |G|, integrality of degrees and exact row orthogonality.
inline void validate_table(const CharacterTable& t) {
  if (static_cast<int>(t.rows.size()) != t.num_classes()) throw TableInconsistency("row count != class count");
  Integer s = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (!t.rows[i].degree().is_integer()) throw TableInconsistency("non-integral degree");
    long d = t.degree(i);
    if (d <= 0 || t.order() % static_cast<std::uint64_t>(d) != 0) throw TableInconsistency("degree does not divide |G|");
    s += Integer(d) * d;
  }
  if (s != Integer(std::to_string(t.order()))) throw TableInconsistency("sum of squared degrees != |G|");
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i; j < t.rows.size(); ++j) {
      Cyclotomic ip = inner_product(t, t.rows[i], t.rows[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0)) throw TableInconsistency("row orthogonality fails");
    }
}

struct DixonOptions {
  std::uint64_t prime = 0;  // 0 selects the smallest admissible prime
  bool validate = true;
};

/// Irreducible characters by the Dixon-Schneider method.
inline Table dixon_schneider(const Group& G, const DixonOptions& opt = {}) {
  using modp::u64;
  G->require_enumerable();
  ClassData cd = ClassData::of(*G);
  const int r = cd.num_classes();
  const long m = cd.exponent();
  const u64 n = cd.order;
  u64 p = opt.prime;
  if (p == 0) {
    p = dixon_prime(n, m);
  } else if (!nt::is_prime(p) || (p - 1) % static_cast<u64>(m) != 0 ||
             static_cast<long double>(p) <= 2.0L * std::sqrt(static_cast<long double>(n))) {
    throw NoAdmissiblePrime("prime " + std::to_string(p) + " is not admissible");
  }

  std::vector<std::vector<Index>> members(static_cast<std::size_t>(r));
  for (Index i = 0; i < n; ++i) members[static_cast<std::size_t>(G->class_of(i))].push_back(i);

  // N_j[i][k] = #{x in C_j : x^-1 z_i in C_k}; central characters are
  // row vectors w with w N_j = w_j w.
  auto class_matrix = [&](int j) {
    modp::Mat N(static_cast<std::size_t>(r), modp::Vec(static_cast<std::size_t>(r), 0));
    std::vector<Perm> inv_members;
    for (Index x : members[j]) inv_members.push_back(perm_inv(G->element(x)));
    for (int i = 0; i < r; ++i) {
      Perm z = G->element(G->classes()[i].representative);
      for (const auto& xi : inv_members) ++N[i][G->class_of_perm(perm_mul(xi, z))];
    }
    for (auto& row : N)
      for (auto& v : row) v %= p;
    return N;
  };

  std::vector<int> order_by_size(static_cast<std::size_t>(r));
  std::iota(order_by_size.begin(), order_by_size.end(), 0);
  std::stable_sort(order_by_size.begin(), order_by_size.end(),
                   [&](int a, int b) { return cd.sizes[a] < cd.sizes[b]; });

  // Spaces are row bases in reduced echelon form.
  std::vector<modp::Mat> pending;
  {
    modp::Mat I(static_cast<std::size_t>(r), modp::Vec(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) I[i][i] = 1;
    pending.push_back(I);
  }
  std::vector<modp::Vec> eigen;
  for (int j : order_by_size) {
    if (pending.empty()) break;
    if (j == 0) continue;
    modp::Mat N = class_matrix(j);
    std::vector<modp::Mat> next;
    for (auto& S : pending) {
      std::size_t d = S.size();
      std::vector<std::size_t> piv;
      for (const auto& row : S) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        piv.push_back(c);
      }
      modp::Mat R(d, modp::Vec(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
          u64 acc = 0;
          for (int i = 0; i < r; ++i)
            if (S[s][i]) acc = (acc + nt::mulmod(S[s][i], N[i][piv[t]], p)) % p;
          R[s][t] = acc;
        }
      }
      auto lambdas = modp::roots(modp::charpoly(R, p), p);
      for (u64 lam : lambdas) {
        modp::Mat A = modp::transpose(R);
        for (std::size_t s = 0; s < d; ++s) A[s][s] = modp::sub(A[s][s], lam, p);
        modp::Mat coords = modp::nullspace(A, d, p);
        modp::Mat sub;
        for (const auto& c : coords) {
          modp::Vec v(static_cast<std::size_t>(r), 0);
          for (std::size_t s = 0; s < d; ++s)
            if (c[s])
              for (int i = 0; i < r; ++i) v[i] = (v[i] + nt::mulmod(c[s], S[s][i], p)) % p;
          sub.push_back(std::move(v));
        }
        modp::rref(sub, p);
        if (sub.size() == 1) {
          eigen.push_back(sub[0]);
        } else {
          next.push_back(std::move(sub));
        }
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty() || static_cast<int>(eigen.size()) != r)
    throw TableInconsistency("class matrices failed to split the centre");

  u64 w = nt::primitive_root(p);
  u64 zeta_m = nt::powmod(w, (p - 1) / static_cast<u64>(m), p);
  auto table = std::make_shared<CharacterTable>();
  table->name = G->name();
  table->group = G;
  table->classes = cd;
  table->prime = p;
  auto isqrt_n = nt::isqrt(n);
  for (auto& v : eigen) {
    if (v[0] == 0) throw TableInconsistency("central character vanishes at the identity");
    u64 s = modp::inv(v[0], p);
    for (auto& x : v) x = nt::mulmod(x, s, p);
    u64 denom = 0;
    for (int k = 0; k < r; ++k) {
      u64 t = nt::mulmod(v[k], v[cd.inverse(k)], p);
      denom = (denom + nt::mulmod(t, modp::inv(cd.sizes[k] % p, p), p)) % p;
    }
    if (denom == 0) throw TableInconsistency("degenerate degree equation");
    u64 d2 = nt::mulmod(n % p, modp::inv(denom, p), p);
    u64 deg = 0;
    for (u64 d = 1; d <= isqrt_n; ++d)
      if (d * d % p == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw TableInconsistency("no degree solves the degree equation");
    std::vector<u64> chi(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) chi[k] = nt::mulmod(nt::mulmod(v[k], deg, p), modp::inv(cd.sizes[k] % p, p), p);

    ClassFunction row;
    for (int c = 0; c < r; ++c) {
      long o = cd.element_orders[c];
      u64 z = nt::powmod(zeta_m, static_cast<u64>(m / o), p);
      u64 oinv = modp::inv(static_cast<u64>(o) % p, p);
      std::vector<Cyclotomic::Term> terms;
      for (long l = 0; l < o; ++l) {
        u64 acc = 0, zl = nt::powmod(z, static_cast<u64>((o - l) % o), p), zt = 1;
        for (long t = 0; t < o; ++t) {
          acc = (acc + nt::mulmod(chi[cd.power(c, t)], zt, p)) % p;
          zt = nt::mulmod(zt, zl, p);
        }
        u64 mult = nt::mulmod(acc, oinv, p);
        if (mult > deg) throw TableInconsistency("eigenvalue multiplicity out of range");
        if (mult) terms.emplace_back(l, Rational(static_cast<unsigned long>(mult)));
      }
      row.values.push_back(Cyclotomic::from_terms(o, terms));
    }
    table->rows.push_back(std::move(row));
  }
  ClassFunction triv = trivial_character(r);
  std::sort(table->rows.begin(), table->rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    long da = a.degree().rational().get_num().get_si(), db = b.degree().rational().get_num().get_si();
    if (da != db) return da < db;
    bool ta = a == triv, tb = b == triv;
    if (ta != tb) return ta;
    return a < b;
  });
  if (opt.validate) validate_table(*table);
  return table;
}

}  // namespace mckn

#endif  // MCKN_CHARTAB_HPP
