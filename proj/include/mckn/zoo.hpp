#ifndef MCKN_ZOO_HPP
#define MCKN_ZOO_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mckn/gf.hpp"
#include "mckn/group.hpp"

/// Concrete groups: Suzuki groups, small classical groups, the affine
/// semilinear group of F_8, and the abstract torus normalizers T x| W.
namespace mckn {

/// Target description addressable from the command line.
struct GroupSpec {
  std::string family;  // 2B2 | 2G2 | 2F4 | PSL2 | SL3 | SU3 | PSL3 | local-model | explicit
  long f = -1;
  long q = -1;
  long p = 0;
  std::string row;  // local-model row identifier or explicit tag
};

/// A group together with the orbit of vectors it was transported from, when
/// it came from a matrix group.
struct ZooGroup {
  Group group;
  std::shared_ptr<const gf::Transport> provenance;
};

namespace zoo_detail {

inline Group checked(std::size_t degree, const std::vector<Perm>& elems, std::uint64_t order, const std::string& name) {
  Group G = generated_by(degree, elems, order, name);
  if (G->order() != order) {
    throw TableInconsistency(name + ": constructed order " + std::to_string(G->order()) + " != " +
                             std::to_string(order));
  }
  return G;
}

inline ZooGroup from_matrices(const gf::FieldPtr& F, const std::vector<gf::Mat>& mats, const gf::Vec& start,
                              bool projective, std::uint64_t order, const std::string& name) {
  auto t = std::make_shared<gf::Transport>(gf::transport(F, mats, start, projective));
  Group G = checked(t->points.size(), t->perms, order, name);
  return ZooGroup{G, t};
}

/// Adjoins the entrywise Frobenius x -> x^p, acting on the transported points.
inline ZooGroup with_frobenius(const ZooGroup& base, std::uint64_t order, const std::string& name) {
  const auto& t = *base.provenance;
  const auto& F = *t.field;
  Perm phi = t.induced([&](const gf::Vec& v) {
    gf::Vec w = v;
    for (auto& x : w) x = F.frob(x);
    return w;
  });
  std::vector<Perm> gens = base.group->generators();
  gens.push_back(phi);
  return ZooGroup{checked(t.points.size(), gens, order, name), base.provenance};
}

inline gf::Mat elementary(std::size_t n, std::size_t i, std::size_t j, int t) {
  gf::Mat m = gf::identity(n);
  m[i][j] = t;
  return m;
}

/// Generators of SU_3(q) for the hermitian form with antidiagonal Gram
/// matrix over GF(q^2): unitary upper unitriangular, diagonal and
/// antidiagonal matrices of determinant 1.
inline std::vector<gf::Mat> su3_generators(const gf::Field& F, long q) {
  auto bar = [&](int x) { return F.pow(x, q); };
  auto preserves = [&](const gf::Mat& M) {
    // M J conj(M)^T = J with J antidiagonal: entry (i,j) is sum_k M[i][k] conj(M[j][2-k]).
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(M[i][k], bar(M[j][2 - k])));
        if (s != (i + j == 2 ? 1 : 0)) return false;
      }
    return gf::det(F, M) == 1;
  };
  std::vector<gf::Mat> out;
  int Q = static_cast<int>(F.size());
  for (int a = 0; a < Q; ++a)
    for (int b = 0; b < Q; ++b)
      for (int c = 0; c < Q; ++c) {
        gf::Mat u{{1, a, b}, {0, 1, c}, {0, 0, 1}};
        if (preserves(u)) out.push_back(u);
        if (a && b && c) {
          gf::Mat d{{a, 0, 0}, {0, b, 0}, {0, 0, c}};
          if (preserves(d)) out.push_back(d);
          gf::Mat w{{0, 0, a}, {0, b, 0}, {c, 0, 0}};
          if (preserves(w)) out.push_back(w);
        }
      }
  return out;
}

}  // namespace zoo_detail

/// Sz(2^{2f+1}) on the q^4+1 points of its ovoid in PG(3, q^2).
inline ZooGroup suzuki_group(long f) {
  if (f < 1 || f > 5) throw InvalidArgument("suzuki_group needs 1 <= f <= 5");
  auto F = std::make_shared<const gf::Field>(2, static_cast<int>(2 * f + 1));
  const gf::Field& K = *F;
  long e = 1L << f;
  auto th = [&](int x) { return K.pow(x, 2 * e); };
  auto S = [&](int a, int b) {
    int c30 = K.add(K.add(K.pow(a, 2 + 2 * e), K.mul(a, b)), th(b));
    int c31 = K.add(K.mul(a, th(a)), b);
    return gf::Mat{{1, 0, 0, 0}, {a, 1, 0, 0}, {b, th(a), 1, 0}, {c30, c31, a, 1}};
  };
  auto M = [&](int k) {
    return gf::Mat{{K.pow(k, 1 + e), 0, 0, 0}, {0, K.pow(k, e), 0, 0}, {0, 0, K.pow(k, -e), 0}, {0, 0, 0, K.pow(k, -1 - e)}};
  };
  gf::Mat T{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  auto Q = static_cast<std::uint64_t>(K.size());
  std::uint64_t order = Q * Q * (Q * Q + 1) * (Q - 1);
  return zoo_detail::from_matrices(F, {S(1, 0), S(0, 1), M(K.generator()), T}, {1, 0, 0, 0}, true, order,
                                   "Sz(" + std::to_string(Q) + ")");
}

inline const std::vector<std::string>& small_group_tags() {
  static const std::vector<std::string> tags{"psl2_8", "sl3_4", "psl3_4", "su3_2", "su3_2_ext", "su3_3", "g2_2"};
  return tags;
}

inline ZooGroup small_group(const std::string& tag) {
  using zoo_detail::elementary;
  if (tag == "psl2_8") {
    auto F = std::make_shared<const gf::Field>(2, 3);
    std::vector<gf::Mat> g;
    for (int t : {1, F->pow(F->generator(), 1), F->pow(F->generator(), 2)}) {
      g.push_back(elementary(2, 0, 1, t));
      g.push_back(elementary(2, 1, 0, t));
    }
    return zoo_detail::from_matrices(F, g, {1, 0}, true, 504, "L2(8)");
  }
  if (tag == "sl3_4" || tag == "psl3_4") {
    auto F = std::make_shared<const gf::Field>(2, 2);
    std::vector<gf::Mat> g;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j)
          for (int t : {1, F->generator()}) g.push_back(elementary(3, i, j, t));
    bool proj = tag == "psl3_4";
    return zoo_detail::from_matrices(F, g, {1, 0, 0}, proj, proj ? 20160 : 60480, proj ? "L3(4)" : "SL3(4)");
  }
  if (tag == "su3_2" || tag == "su3_2_ext") {
    auto F = std::make_shared<const gf::Field>(2, 2);
    // The centre has order 3, so SU_3(2) is faithful only on vectors.
    ZooGroup base = zoo_detail::from_matrices(F, zoo_detail::su3_generators(*F, 2), {1, 0, 0}, false, 216, "U3(2)");
    if (tag == "su3_2") return base;
    return zoo_detail::with_frobenius(base, 432, "U3(2).2");
  }
  if (tag == "su3_3" || tag == "g2_2") {
    auto F = std::make_shared<const gf::Field>(3, 2);
    ZooGroup base = zoo_detail::from_matrices(F, zoo_detail::su3_generators(*F, 3), {1, 0, 0}, true, 6048, "U3(3)");
    if (tag == "su3_3") return base;
    return zoo_detail::with_frobenius(base, 12096, "G2(2)");
  }
  std::string known;
  for (const auto& t : small_group_tags()) known += (known.empty() ? "" : ", ") + t;
  throw UnknownTarget("unknown small group tag '" + tag + "' (known: " + known + ")");
}

/// The affine group of F_8, optionally extended by the Frobenius x -> x^2.
inline Group affine_group_f8(bool semilinear) {
  gf::Field F(2, 3);
  Perm t(8), m(8), s(8);
  for (int x = 0; x < 8; ++x) {
    t[static_cast<std::size_t>(x)] = static_cast<Point>(F.add(x, 1));
    m[static_cast<std::size_t>(x)] = static_cast<Point>(F.mul(x, F.generator()));
    s[static_cast<std::size_t>(x)] = static_cast<Point>(F.mul(x, x));
  }
  std::vector<Perm> gens{t, m};
  if (semilinear) gens.push_back(s);
  return zoo_detail::checked(8, gens, semilinear ? 168 : 56, semilinear ? "2^3:7:3" : "2^3:7");
}

/// (C_2^3 x| C_7) x| C_3 of order 168.
inline Group agl18_normalizer() { return affine_group_f8(true); }

/// Automorphism induced by x -> x^p on matrix entries, carried to the points.
inline GroupMap field_automorphism(const ZooGroup& zg) {
  if (!zg.provenance) throw InvalidArgument("field automorphism requires a group built from matrices");
  const auto& t = *zg.provenance;
  const auto& F = *t.field;
  Perm phi = t.induced([&](const gf::Vec& v) {
    gf::Vec w = v;
    for (auto& x : w) x = F.frob(x);
    return w;
  });
  return GroupMap::conjugation(zg.group, phi);
}

// ---------------------------------------------------------------------------
// Torus normalizers.

using IntMat = std::vector<std::vector<long>>;

struct TorusNormalizerSpec {
  std::string family;
  long f = 0;
  long p = 0;
  std::string row;           // e.g. "q2-1", "q2+r+1"
  std::vector<long> moduli;  // T = Z_{n_1} x ... x Z_{n_k}
  std::string complement;    // C2, C4, C6, C12, D16, GL2(3), ST8
  long complement_order = 1;
  std::vector<IntMat> action;        // generators of W, acting on row vectors
  std::vector<long> orbit_sizes;     // advertised |s^N| for s != 1, one entry per element type
  std::string note;
};

struct TorusModel {
  Group group;  // T x| W on the |T| elements of T, acting affinely
  Group torus;
  Group complement;
  TorusNormalizerSpec spec;

  std::size_t size() const { return group->degree(); }
  std::vector<long> coords(std::size_t idx) const {
    std::vector<long> v(spec.moduli.size());
    for (std::size_t i = spec.moduli.size(); i-- > 0;) {
      v[i] = static_cast<long>(idx % static_cast<std::size_t>(spec.moduli[i]));
      idx /= static_cast<std::size_t>(spec.moduli[i]);
    }
    return v;
  }
  std::size_t index(const std::vector<long>& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx = idx * static_cast<std::size_t>(spec.moduli[i]) + static_cast<std::size_t>(nt::mod(v[i], spec.moduli[i]));
    return idx;
  }
  std::vector<long> apply(const std::vector<long>& v, const IntMat& A) const {
    std::vector<long> r(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      long s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s = nt::mod(s + v[i] * A[i][j], spec.moduli[j]);
      r[j] = s;
    }
    return r;
  }

  /// Orbits of W on the nonidentity elements of T, each as a sorted list of point indices.
  std::vector<std::vector<std::size_t>> torus_orbits() const {
    std::vector<char> seen(size(), 0);
    std::vector<std::vector<std::size_t>> out;
    seen[0] = 1;
    for (std::size_t s = 1; s < size(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> orb{s};
      seen[s] = 1;
      for (std::size_t q = 0; q < orb.size(); ++q)
        for (const auto& A : spec.action) {
          std::size_t y = index(apply(coords(orb[q]), A));
          if (!seen[y]) {
            seen[y] = 1;
            orb.push_back(y);
          }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }
};

namespace zoo_detail {

inline long mat_order(const IntMat& A, long d, long cap = 1000) {
  std::size_t n = A.size();
  IntMat X = A;
  for (long k = 1; k <= cap; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < n && id; ++i)
      for (std::size_t j = 0; j < n && id; ++j) id = nt::mod(X[i][j], d) == (i == j ? 1 : 0);
    if (id) return k;
    IntMat Y(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) Y[i][j] = nt::mod(Y[i][j] + X[i][l] * A[l][j], d);
    X = std::move(Y);
  }
  return 0;
}

inline IntMat mat2(long a, long b, long c, long e, long d) {
  return {{nt::mod(a, d), nt::mod(b, d)}, {nt::mod(c, d), nt::mod(e, d)}};
}

/// Reflection group D16 = <diag(-1,1), s2> with s2 fixing (1, k) and s1 s2 of order 8.
inline IntMat dihedral_partner(long d, long k) {
  for (long w0 = 0; w0 < d; ++w0)
    for (long w1 = 0; w1 < d; ++w1) {
      long dt = nt::mod(w1 - k * w0, d);  // det [[1,k],[w0,w1]]
      if (std::gcd(dt, d) != 1) continue;
      long iv = static_cast<long>(nt::invmod(static_cast<nt::u64>(dt), static_cast<nt::u64>(d)));
      // P = [[1,k],[w0,w1]], s2 = P^-1 diag(1,-1) P.
      long a = w1 * iv, b = -k * iv, c = -w0 * iv, e = iv;  // P^-1
      // P^-1 diag(1,-1) = [[a, -b],[c, -e]]; times P.
      IntMat s2 = mat2(a * 1 + (-b) * w0, a * k + (-b) * w1, c * 1 + (-e) * w0, c * k + (-e) * w1, d);
      IntMat s1 = mat2(-1, 0, 0, 1, d);
      IntMat prod = mat2(s1[0][0] * s2[0][0] + s1[0][1] * s2[1][0], s1[0][0] * s2[0][1] + s1[0][1] * s2[1][1],
                         s1[1][0] * s2[0][0] + s1[1][1] * s2[1][0], s1[1][0] * s2[0][1] + s1[1][1] * s2[1][1], d);
      if (mat_order(s2, d) == 2 && mat_order(prod, d, 16) == 8) return s2;
    }
  throw NumberTheoreticInconsistency("no dihedral reflection pair of order 16 modulo " + std::to_string(d));
}

inline TorusModel realize(TorusNormalizerSpec spec) {
  long size = 1;
  for (long n : spec.moduli) {
    if (n < 2) throw InvalidArgument("torus factor of order < 2");
    size *= n;
    if (size > 65536) throw TooLargeForEnumeration("torus of order > 65536 is beyond the permutation degree limit");
  }
  TorusModel tm;
  tm.spec = std::move(spec);
  auto sz = static_cast<std::size_t>(size);
  std::vector<Perm> trans, comp;
  for (std::size_t i = 0; i < tm.spec.moduli.size(); ++i) {
    std::vector<long> e(tm.spec.moduli.size(), 0);
    e[i] = 1;
    Perm t(sz);
    for (std::size_t x = 0; x < sz; ++x) {
      auto v = tm.coords(x);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += e[j];
      t[x] = static_cast<Point>(tm.index(v));
    }
    trans.push_back(std::move(t));
  }
  for (const auto& A : tm.spec.action) {
    Perm w(sz);
    for (std::size_t x = 0; x < sz; ++x) w[x] = static_cast<Point>(tm.index(tm.apply(tm.coords(x), A)));
    if (!perm_valid(w)) throw InvalidArgument("complement matrix is not invertible on the torus");
    comp.push_back(std::move(w));
  }
  std::string name = tm.spec.family + ":" + tm.spec.row;
  tm.torus = FiniteGroup::make(sz, trans, "T");
  tm.complement = FiniteGroup::make(sz, comp, tm.spec.complement);
  if (tm.torus->order() != static_cast<std::uint64_t>(size))
    throw TableInconsistency("torus translations do not have the expected order");
  if (tm.complement->order() != static_cast<std::uint64_t>(tm.spec.complement_order)) {
    throw NumberTheoreticInconsistency(name + ": complement has order " + std::to_string(tm.complement->order()) +
                                       ", expected " + std::to_string(tm.spec.complement_order));
  }
  std::vector<Perm> all = trans;
  all.insert(all.end(), comp.begin(), comp.end());
  tm.group = FiniteGroup::make(sz, all, name);
  return tm;
}

inline std::uint64_t pow_u(std::uint64_t b, long e) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

inline TorusNormalizerSpec cyclic_row(std::string family, long f, long p, std::string row, long d, long mult,
                                      long order, std::vector<long> sizes) {
  TorusNormalizerSpec s;
  s.family = std::move(family);
  s.f = f;
  s.p = p;
  s.row = std::move(row);
  s.moduli = {d};
  s.complement = "C" + std::to_string(order);
  s.complement_order = order;
  s.action = {IntMat{{nt::mod(mult, d)}}};
  s.orbit_sizes = std::move(sizes);
  if (mult == -1) s.note = "inversion";
  else s.note = "x -> x^" + std::to_string(nt::mod(mult, d));
  return s;
}

}  // namespace zoo_detail

/// Named torus-order values for a family at parameter f, in table order.
struct TorusRow {
  std::string row;
  std::uint64_t value;
};

inline std::vector<TorusRow> torus_rows(const std::string& family, long f) {
  using zoo_detail::pow_u;
  if (family == "2B2" || family == "2F4") {
    if (f < 1 || f > 14) throw InvalidArgument(family + " needs 1 <= f <= 14");
    std::uint64_t q2 = pow_u(2, 2 * f + 1), r = pow_u(2, f + 1), q4 = q2 * q2;
    if (family == "2B2") return {{"q2-1", q2 - 1}, {"q2+r+1", q2 + r + 1}, {"q2-r+1", q2 - r + 1}};
    std::uint64_t r3 = pow_u(2, 3 * f + 2);
    return {{"q2-1", q2 - 1},
            {"q2-r+1", q2 - r + 1},
            {"q2+r+1", q2 + r + 1},
            {"q2+1", q2 + 1},
            {"q4-q2+1", q4 - q2 + 1},
            {"q4-r3+q2-r+1", q4 - r3 + q2 - r + 1},
            {"q4+r3+q2+r+1", q4 + r3 + q2 + r + 1}};
  }
  if (family == "2G2") {
    if (f < 0 || f > 9) throw InvalidArgument("2G2 needs 0 <= f <= 9");
    std::uint64_t q2 = pow_u(3, 2 * f + 1), r = pow_u(3, f + 1);
    return {{"q2-1", q2 - 1}, {"q2+r+1", q2 + r + 1}, {"q2-r+1", q2 - r + 1}, {"q2+1", q2 + 1}};
  }
  throw UnknownTarget("no torus table for family '" + family + "'");
}

/// The row of the torus table a prime falls into (first match in table order).
inline std::string torus_row_for(const std::string& family, long f, long p) {
  if (!nt::is_prime(static_cast<nt::u64>(p))) throw InvalidArgument("p must be prime");
  if ((family == "2B2" || family == "2F4") && p == 2) throw InvalidArgument("p = 2 is the defining characteristic");
  if (family == "2G2" && p == 3) throw InvalidArgument("p = 3 is the defining characteristic");
  if (family == "2G2" && p == 2) return "2-local";
  for (const auto& r : torus_rows(family, f)) {
    if (family == "2F4" && p == 3 && r.row.rfind("q4", 0) == 0 && r.row != "q4-q2+1") continue;
    if (r.value % static_cast<std::uint64_t>(p) == 0) return r.row;
  }
  throw InvalidArgument("p = " + std::to_string(p) + " divides no torus order of " + family + " at f = " +
                        std::to_string(f));
}

/// Specification of T x| W for (family, f, row); the row must come from torus_rows.
inline TorusNormalizerSpec torus_normalizer_spec(const std::string& family, long f, const std::string& row, long p = 0) {
  using zoo_detail::cyclic_row;
  using zoo_detail::pow_u;
  std::uint64_t value = 0;
  for (const auto& r : torus_rows(family, f))
    if (r.row == row) value = r.value;
  if (value == 0) throw UnknownTarget("unknown torus row '" + row + "' for " + family);
  if (value > 65536) throw TooLargeForEnumeration("torus order " + std::to_string(value) + " beyond the size cap");
  auto d = static_cast<long>(value);
  if (family == "2B2") {
    long q2 = static_cast<long>(pow_u(2, 2 * f + 1));
    if (row == "q2-1") return cyclic_row(family, f, p, row, d, -1, 2, {2});
    // q^4 = -1 mod q^2 +- r + 1, so x -> x^{q^2} has order 4.
    return cyclic_row(family, f, p, row, d, q2, 4, {4});
  }
  if (family == "2G2") {
    long q2 = static_cast<long>(pow_u(3, 2 * f + 1));
    if (row == "q2-1") return cyclic_row(family, f, p, row, d, -1, 2, {2});
    // q^6 = -1 mod q^2 +- r + 1, so x -> x^{q^2} has order 6.
    if (row != "q2+1") return cyclic_row(family, f, p, row, d, q2, 6, {6});
    // T = C_{(q^2+1)/2} x C_2 = V_4 x C_m; W = C_6 permutes the involutions of
    // V_4 cyclically and acts on C_m by a primitive sixth root of unity u.
    long m = d / 4;
    if (m < 1 || d % 4 != 0) throw NumberTheoreticInconsistency("q^2+1 not of the form 4m");
    long u = 0;
    for (long c = 2; c < m && u == 0; ++c) {
      long c2 = nt::mod(c * c, m), c3 = nt::mod(c2 * c, m);
      if (c3 == m - 1 && std::gcd(c - 1, m) == 1 && std::gcd(c2 - 1, m) == 1 && std::gcd(c3 - 1, m) == 1 &&
          std::gcd(c + 1, m) == 1)
        u = c;
    }
    if (m == 1) u = 0;
    else if (u == 0)
      throw NumberTheoreticInconsistency("no fixed-point-free sixth root of unity modulo " + std::to_string(m));
    TorusNormalizerSpec s;
    s.family = family;
    s.f = f;
    s.p = p;
    s.row = row;
    s.moduli = m > 1 ? std::vector<long>{2, 2, m} : std::vector<long>{2, 2};
    s.complement = "C6";
    s.complement_order = m > 1 ? 6 : 3;
    IntMat A = m > 1 ? IntMat{{0, 1, 0}, {1, 1, 0}, {0, 0, u}} : IntMat{{0, 1}, {1, 1}};
    s.action = {A};
    s.orbit_sizes = m > 1 ? std::vector<long>{3, 6} : std::vector<long>{3};
    s.note = "V4 x C" + std::to_string(m) + ", generator (x,y) -> (y, x+y) on V4 and z -> z^" + std::to_string(u);
    return s;
  }
  if (family != "2F4") throw UnknownTarget("no torus table for family '" + family + "'");
  long q2 = static_cast<long>(pow_u(2, 2 * f + 1)), r = static_cast<long>(pow_u(2, f + 1));
  if (row == "q4-q2+1") return cyclic_row(family, f, p, row, d, q2, 6, {2, 6});
  if (row.rfind("q4", 0) == 0) return cyclic_row(family, f, p, row, d, q2, 12, {12});
  TorusNormalizerSpec s;
  s.family = family;
  s.f = f;
  s.p = p;
  s.row = row;
  s.moduli = {d, d};
  using zoo_detail::mat2;
  if (row == "q2-1") {
    // s1 fixes the t1 line {(0,i)}, s2 the t2 line {(i, i(r+1))}.
    s.complement = "D16";
    s.complement_order = 16;
    s.action = {mat2(-1, 0, 0, 1, d), zoo_detail::dihedral_partner(d, r + 1)};
    s.orbit_sizes = {8, 8, 16};
    s.note = "reflections fixing (0,1) and (1," + std::to_string(nt::mod(r + 1, d)) + ")";
    return s;
  }
  if (row == "q2+1") {
    // r^2 = -2 mod q^2+1; order-2 reflections over Z[sqrt(-2)] reduced mod d.
    long w = r;
    if (nt::mod(w * w + 2, d) != 0) throw NumberTheoreticInconsistency("no square root of -2 modulo " + std::to_string(d));
    s.complement = "GL2(3)";
    s.complement_order = 48;
    s.action = {mat2(-1, -1 - w, 0, 1, d), mat2(-1, 0, 1 - w, 1, d), mat2(-w, 1 - w, 1 + w, w, d)};
    s.orbit_sizes = {8, 24, 48};
    s.note = "sqrt(-2) = " + std::to_string(nt::mod(w, d));
    return s;
  }
  // q^4 = -1 mod q^2 +- r + 1, so q^2 is a square root of -1; order-4 reflections over Z[i].
  long i = nt::mod(q2, d);
  if (nt::mod(i * i + 1, d) != 0) throw NumberTheoreticInconsistency("no fourth root of unity modulo " + std::to_string(d));
  s.complement = "ST8";
  s.complement_order = 96;
  s.action = {mat2(-i, -1, 0, 1, d), mat2(-i, 0, i, 1, d)};
  s.orbit_sizes = {24, 96};
  s.note = "i = " + std::to_string(i);
  return s;
}

/// T x| W for the Sylow torus of `family` at parameter f containing a Sylow p-subgroup.
inline TorusModel torus_normalizer(const std::string& family, long f, long p) {
  std::string row = torus_row_for(family, f, p);
  if (row == "2-local") throw InvalidArgument("the 2-local subgroup is agl18_normalizer(), not a torus normalizer");
  return zoo_detail::realize(torus_normalizer_spec(family, f, row, p));
}

inline TorusModel torus_normalizer(const TorusNormalizerSpec& spec) { return zoo_detail::realize(spec); }

}  // namespace mckn

#endif  // MCKN_ZOO_HPP
