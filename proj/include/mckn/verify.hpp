#ifndef MCKN_VERIFY_HPP
#define MCKN_VERIFY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mckn/extend.hpp"
#include "mckn/serialize.hpp"

namespace mckn {

/// C_k x H(p) mod m; element (j, h[i]) has index j * |h| + i.
struct ActingGroup {
  long k = 1;
  long p = 2;
  long m = 1;
  std::vector<long> h;

  static ActingGroup make(long k, long p, long m) { return {k, p, m, h_group(p, m).elements}; }

  std::size_t size() const { return static_cast<std::size_t>(k) * h.size(); }
  std::pair<long, long> element(std::size_t i) const {
    return {static_cast<long>(i / h.size()), h[i % h.size()]};
  }
  std::size_t index(long j, long b) const {
    auto it = std::lower_bound(h.begin(), h.end(), m == 1 ? 1 : nt::mod(b, m));
    if (it == h.end() || (m > 1 && *it != nt::mod(b, m))) throw InvalidArgument("residue outside H");
    return static_cast<std::size_t>(nt::mod(j, k)) * h.size() + static_cast<std::size_t>(it - h.begin());
  }
  std::size_t mul(std::size_t x, std::size_t y) const {
    auto [j1, b1] = element(x);
    auto [j2, b2] = element(y);
    return index(j1 + j2, b1 * b2);
  }
  bool operator==(const ActingGroup& o) const { return k == o.k && m == o.m && h == o.h; }
};

/// A acting on {0..n-1}; perms[x] is the image permutation of element x.
struct ActionOnSet {
  ActingGroup group;
  std::size_t n = 0;
  std::vector<std::vector<int>> perms;

  int apply(std::size_t x, int point) const { return perms[x][static_cast<std::size_t>(point)]; }

  /// Throws UnsupportedAction unless x -> perms[x] is a homomorphism with commuting images.
  void validate() const {
    if (perms.size() != group.size()) throw UnsupportedAction("one permutation per group element required");
    for (std::size_t x = 0; x < perms.size(); ++x)
      for (std::size_t y = 0; y < perms.size(); ++y) {
        const auto& pxy = perms[group.mul(x, y)];
        for (std::size_t s = 0; s < n; ++s) {
          int a = apply(y, apply(x, static_cast<int>(s)));
          if (a != pxy[s]) throw UnsupportedAction("generator images violate the group relations");
          if (apply(x, apply(y, static_cast<int>(s))) != a) throw UnsupportedAction("acting group is not abelian");
        }
      }
  }
};

/// Action of C_k x H on chosen rows: outer[j] and galois[i] are row permutations of the whole table.
inline ActionOnSet row_action(const ActingGroup& A, const std::vector<int>& rows,
                              const std::vector<std::vector<int>>& outer, const std::vector<std::vector<int>>& galois) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<int>(i);
  ActionOnSet X{A, rows.size(), {}};
  for (std::size_t x = 0; x < A.size(); ++x) {
    std::size_t j = x / A.h.size(), i = x % A.h.size();
    std::vector<int> perm;
    for (int r : rows) {
      int img = galois[i][static_cast<std::size_t>(outer[j][static_cast<std::size_t>(r)])];
      auto it = pos.find(img);
      if (it == pos.end()) throw TableInconsistency("row set is not stable under the acting group");
      perm.push_back(it->second);
    }
    X.perms.push_back(std::move(perm));
  }
  return X;
}

struct StabilizerClass {
  std::vector<std::size_t> stabilizer;  // element indices, ascending
  std::vector<std::pair<long, long>> generators;
  std::size_t orbit_size = 0;
  int count_x = 0;  // points with exactly this stabilizer
  int count_y = 0;
};

struct MatchResult {
  bool ok = false;
  std::string reason;
  std::vector<std::pair<int, int>> pairs;  // (x, y), sorted by x
  std::vector<StabilizerClass> classes;
};

namespace verify_detail {

inline std::vector<std::size_t> stabilizer(const ActionOnSet& X, int s) {
  std::vector<std::size_t> st;
  for (std::size_t x = 0; x < X.group.size(); ++x)
    if (X.apply(x, s) == s) st.push_back(x);
  return st;
}

inline std::vector<std::pair<long, long>> generators_of(const ActingGroup& A, const std::vector<std::size_t>& sub) {
  std::set<std::size_t> span{A.index(0, 1)};
  std::vector<std::pair<long, long>> gens;
  for (std::size_t g : sub) {
    if (span.count(g)) continue;
    gens.push_back(A.element(g));
    // A is abelian, so the new span is span * <g>.
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t x : std::vector<std::size_t>(span.begin(), span.end())) grew |= span.insert(A.mul(x, g)).second;
    }
  }
  return gens;
}

}  // namespace verify_detail

/// Equivariant bijection X -> Y, or the reason none exists.
///
/// For abelian A two actions are isomorphic iff every subgroup occurs as a
/// point stabilizer equally often on both sides.
inline MatchResult match_actions(const ActionOnSet& X, const ActionOnSet& Y) {
  if (!(X.group == Y.group)) throw InvalidArgument("actions of different groups");
  X.validate();
  Y.validate();
  MatchResult res;
  std::map<std::vector<std::size_t>, StabilizerClass> cls;
  std::vector<std::vector<std::size_t>> sx, sy;
  for (std::size_t s = 0; s < X.n; ++s) {
    sx.push_back(verify_detail::stabilizer(X, static_cast<int>(s)));
    auto& c = cls[sx.back()];
    c.stabilizer = sx.back();
    c.count_x++;
  }
  for (std::size_t s = 0; s < Y.n; ++s) {
    sy.push_back(verify_detail::stabilizer(Y, static_cast<int>(s)));
    auto& c = cls[sy.back()];
    c.stabilizer = sy.back();
    c.count_y++;
  }
  res.ok = X.n == Y.n;
  for (auto& [key, c] : cls) {
    c.orbit_size = X.group.size() / key.size();
    c.generators = verify_detail::generators_of(X.group, key);
    if (c.count_x != c.count_y) res.ok = false;
    res.classes.push_back(c);
  }
  if (!res.ok) {
    res.reason = X.n != Y.n ? "sets have different sizes" : "stabilizer multiplicities differ";
    return res;
  }
  std::vector<int> to(X.n, -1);
  std::vector<char> used(Y.n, 0);
  for (std::size_t s = 0; s < X.n; ++s) {
    if (to[s] >= 0) continue;
    std::size_t t = 0;
    while (used[t] || sy[t] != sx[s]) ++t;
    for (std::size_t g = 0; g < X.group.size(); ++g) {
      int a = X.apply(g, static_cast<int>(s)), b = Y.apply(g, static_cast<int>(t));
      to[static_cast<std::size_t>(a)] = b;
      used[static_cast<std::size_t>(b)] = 1;
    }
  }
  for (std::size_t s = 0; s < X.n; ++s) res.pairs.emplace_back(static_cast<int>(s), to[s]);
  return res;
}

/// One side of a condition check: a table with the cyclic outer action on it.
struct Side {
  std::string name;
  Table table;
  std::shared_ptr<const Extender> ext;
};

struct ConditionOne {
  ActingGroup group;
  std::vector<int> rows_global, rows_local;
  MatchResult match;
};

/// p'-rows of both sides, the C_k x H actions on them, and the matching.
inline ConditionOne condition_one(const Side& g, const Side& n, long p) {
  if (g.ext->k() != n.ext->k()) throw InvalidArgument("sides carry different outer groups");
  ConditionOne c;
  long m = std::lcm(g.table->exponent(), n.table->exponent());
  c.group = ActingGroup::make(g.ext->k(), p, m);
  auto build = [&](const Side& s, std::vector<int>& rows) {
    rows = p_prime_rows(*s.table, p);
    std::vector<std::vector<int>> outer, gal;
    for (long j = 0; j < c.group.k; ++j) outer.push_back(s.ext->row_action(j));
    for (long b : c.group.h) gal.push_back(act_on_table(*s.table, {m, b}));
    return row_action(c.group, rows, outer, gal);
  };
  ActionOnSet X = build(g, c.rows_global);
  ActionOnSet Y = build(n, c.rows_local);
  c.match = match_actions(X, Y);
  return c;
}

struct ExtensionEntry {
  std::string side;
  int row = 0;
  long degree = 0;
  long stabilizer_order = 1;
  int witness_row = -1;
  bool vacuous = false;
  bool invariant = false;
};

/// Invariant-extension witnesses for every p'-row of one side.
inline std::vector<ExtensionEntry> condition_two(const Side& s, long p) {
  std::vector<ExtensionEntry> out;
  for (int r : p_prime_rows(*s.table, p)) {
    ExtensionWitness w = s.ext->invariant_extension(r, p);
    out.push_back({s.name, r, s.table->degree(static_cast<std::size_t>(r)), w.stabilizer_order, w.witness_row, w.vacuous,
                   w.found()});
  }
  return out;
}

// ---- targets ----------------------------------------------------------------

enum class Scope { Global, LocalOnly, OutOfScope };

struct TargetInfo {
  std::string family;
  long f = 0;
  long p = 0;
  Scope scope = Scope::OutOfScope;
  std::string label;
  std::string note;
};

inline std::string scope_name(Scope s) {
  switch (s) {
    case Scope::Global: return "in-scope";
    case Scope::LocalOnly: return "local-only";
    default: return "out-of-scope";
  }
}

namespace verify_detail {

inline bool has_global(const std::string& family, long f) {
  return (family == "2B2" && f == 1) || (family == "2G2" && f == 0);
}

inline ZooGroup global_group(const std::string& family, long f) {
  if (family == "2B2" && f == 1) return suzuki_group(1);
  if (family == "2G2" && f == 0) return small_group("psl2_8");
  throw TooLargeForEnumeration(family + " at f = " + std::to_string(f) + " exceeds the enumeration cap");
}

inline std::string label(const std::string& family, long f) {
  auto pw = [](long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
  };
  if (family == "2B2") return "Sz(" + std::to_string(pw(2, 2 * f + 1)) + ")";
  if (family == "2G2") return f == 0 ? "2G2(3)' = PSL2(8)" : "2G2(" + std::to_string(pw(3, 2 * f + 1)) + ")";
  if (family == "2F4") return f == 0 ? "2F4(2)'" : "2F4(" + std::to_string(pw(2, 2 * f + 1)) + ")";
  return family + "(" + std::to_string(f) + ")";
}

}  // namespace verify_detail

/// Scope of (family, f, p); unknown families raise UnknownTarget.
inline TargetInfo classify_target(const std::string& family, long f, long p) {
  TargetInfo t{family, f, p, Scope::OutOfScope, "", ""};
  static const std::set<std::string> nonabelian{"A2", "2A2", "G2"};
  if (nonabelian.count(family)) {
    t.label = family + " (f = " + std::to_string(f) + ")";
    t.note = "outer automorphism data is nonabelian; only the local H-invariance instance is checked";
    return t;
  }
  if (family != "2B2" && family != "2G2" && family != "2F4")
    throw UnknownTarget("unknown family '" + family + "'; known: 2B2, 2G2, 2F4, A2, 2A2, G2");
  t.label = verify_detail::label(family, f);
  if (family == "2F4" && f == 0) {
    t.note = "Tits group: global check is a stretch goal";
    return t;
  }
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) throw InvalidArgument("p must be prime");
  if (verify_detail::has_global(family, f)) {
    Group G = verify_detail::global_group(family, f).group;
    if (G->order() % static_cast<std::uint64_t>(p) != 0) throw InvalidArgument("p does not divide the group order");
    t.scope = Scope::Global;
    if (family == "2B2") t.note = "checked at the level of the simple group; the Schur cover 2^2.Sz(8) is not built";
    return t;
  }
  if (family == "2F4" && p == 3) {
    long q2mod9 = 1;
    for (long i = 0; i < 2 * f + 1; ++i) q2mod9 = q2mod9 * 2 % 9;
    if (q2mod9 != 2 && q2mod9 != 5) {
      t.note = "p = 3 with q^2 not 2 or 5 mod 9 is treated separately";
      return t;
    }
  }
  torus_row_for(family, f, p);  // throws when p divides no torus order
  t.scope = Scope::LocalOnly;
  t.note = "global group exceeds the enumeration cap; only the local model is computed";
  return t;
}

/// Local model standing in for N_G(R): the torus normalizer, 2^3:7:3 for
/// p = 2 in 2G2, or for PSL2(8) the index-3 subgroup of the 2G2(3) model.
inline Group local_model(const std::string& family, long f, long p) {
  if (family == "2G2" && f == 0) {
    if (p == 2) return affine_group_f8(false);
    if (p == 7) {
      TorusModel tm = torus_normalizer(family, f, p);
      std::vector<Perm> gens = tm.torus->generators();
      const Perm& c = tm.complement->generators().front();
      gens.push_back(perm_pow(c, perm_order(c) / 2));
      Group D = subgroup(tm.group, gens, "7:2");
      if (D->order() != 14) throw TableInconsistency("7:2 model has the wrong order");
      return D;
    }
    throw InvalidArgument("no local model for PSL2(8) at p = " + std::to_string(p));
  }
  if (family == "2G2" && p == 2) return agl18_normalizer();
  return torus_normalizer(family, f, p).group;
}

/// Character tables equal up to simultaneous row and column permutations.
inline bool tables_equivalent(const CharacterTable& A, const CharacterTable& B) {
  if (A.order() != B.order() || A.num_classes() != B.num_classes()) return false;
  const int n = A.num_classes();
  std::vector<int> to(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto key = [](const CharacterTable& t, int c) {
    return std::make_pair(t.classes.sizes[static_cast<std::size_t>(c)], t.classes.element_orders[static_cast<std::size_t>(c)]);
  };
  // Multisets of partial rows over the first `len` assigned columns.
  auto prefix_ok = [&](int len) {
    std::vector<std::vector<Cyclotomic>> ra, rb;
    for (const auto& r : A.rows) ra.emplace_back(r.values.begin(), r.values.begin() + len);
    for (const auto& r : B.rows) {
      std::vector<Cyclotomic> v;
      for (int c = 0; c < len; ++c) v.push_back(r[static_cast<std::size_t>(to[static_cast<std::size_t>(c)])]);
      rb.push_back(std::move(v));
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  };
  auto rec = [&](auto&& self, int c) -> bool {
    if (c == n) return true;
    for (int d = 0; d < n; ++d) {
      if (used[static_cast<std::size_t>(d)] || key(A, c) != key(B, d)) continue;
      to[static_cast<std::size_t>(c)] = d;
      used[static_cast<std::size_t>(d)] = 1;
      if (prefix_ok(c + 1) && self(self, c + 1)) return true;
      used[static_cast<std::size_t>(d)] = 0;
    }
    to[static_cast<std::size_t>(c)] = -1;
    return false;
  };
  return rec(rec, 0);
}

/// Table of N_G(R) against the table of the local model.
inline bool cross_model_check(const std::string& family, long f, long p) {
  Group G = verify_detail::global_group(family, f).group;
  Group N = normalizer(G, sylow_subgroup(G, p));
  return tables_equivalent(*dixon_schneider(N), *dixon_schneider(local_model(family, f, p)));
}

// ---- reports ----------------------------------------------------------------

struct VerificationReport {
  TargetInfo target;
  std::optional<std::size_t> count_global;
  std::size_t count_local = 0;
  std::optional<std::size_t> count_model;  // p'-rows of the local model, a second path to the local count
  std::optional<bool> model_equivalent;
  long outer_order = 1;
  long galois_modulus = 1;
  std::vector<StabilizerClass> orbits;
  std::vector<std::pair<int, int>> bijection;  // (global row, local row)
  std::string failure;
  std::vector<ExtensionEntry> extensions;
  std::optional<bool> part1, part2;

  bool failed() const { return (part1 && !*part1) || (part2 && !*part2); }

  Json to_json() const {
    auto opt = [](const auto& o) { return o ? Json(*o) : Json(nullptr); };
    Json orb = Json::array();
    for (const auto& c : orbits) {
      Json gens = Json::array();
      for (auto [j, b] : c.generators) gens.push_back(Json::array({j, b}));
      orb.push_back({{"stabilizer_generators", gens},
                     {"size", c.orbit_size},
                     {"count_global", target.scope == Scope::Global ? Json(c.count_x) : Json(nullptr)},
                     {"count_local", c.count_y}});
    }
    Json bij = Json::array();
    for (auto [g, l] : bijection) bij.push_back(Json::array({g, l}));
    Json ext = Json::array();
    for (const auto& e : extensions)
      ext.push_back({{"side", e.side},
                     {"row", e.row},
                     {"degree", e.degree},
                     {"stabilizer_order", e.stabilizer_order},
                     {"witness_row", e.witness_row},
                     {"vacuous", e.vacuous},
                     {"invariant", e.invariant}});
    return Json{{"target", target.label},
                {"family", target.family},
                {"f", target.f},
                {"p", target.p},
                {"mode", scope_name(target.scope)},
                {"note", target.note},
                {"acting_group", {{"outer_order", outer_order}, {"galois_modulus", galois_modulus}}},
                {"counts", {{"global", opt(count_global)}, {"local", count_local}, {"model", opt(count_model)}}},
                {"model_equivalent", opt(model_equivalent)},
                {"orbits", orb},
                {"bijection", bij},
                {"failure", failure.empty() ? Json(nullptr) : Json(failure)},
                {"extensions", ext},
                {"lemma32", nullptr},
                {"verdict", {{"part1", opt(part1)}, {"part2", opt(part2)}}}};
  }
};

/// Global and Gamma-stable local sides for an enumerable target.
inline std::pair<Side, Side> make_sides(const std::string& family, long f, long p) {
  ZooGroup zg = verify_detail::global_group(family, f);
  const Group& G = zg.group;
  GroupMap a = field_automorphism(zg);
  long k = a.order();
  Group N = normalizer(G, sylow_subgroup(G, p), "N(R)");
  GroupMap b = stabilizing_automorphism(G, a, k, N);
  std::vector<Perm> im;
  for (const auto& g : N->generators()) im.push_back(b.apply(g));
  GroupMap bn = GroupMap::from_images(N, N, im, GroupMap::Kind::Automorphism);
  Table tg = dixon_schneider(G), tn = dixon_schneider(N);
  return {Side{"global", tg, std::make_shared<const Extender>(tg, b, k)},
          Side{"local", tn, std::make_shared<const Extender>(tn, bn, k)}};
}

/// Both condition parts for one target; never throws for a failed check.
inline VerificationReport verify_target(const std::string& family, long f, long p) {
  VerificationReport rep;
  rep.target = classify_target(family, f, p);
  if (rep.target.scope == Scope::OutOfScope) throw UnsupportedAction("out of scope: " + rep.target.note);
  if (rep.target.scope == Scope::LocalOnly) {
    Group N = local_model(family, f, p);
    Table tn = dixon_schneider(N);
    rep.galois_modulus = tn->exponent();
    Side s{"local", tn, std::make_shared<const Extender>(tn, GroupMap::identity(N), 1)};
    auto rows = p_prime_rows(*tn, p);
    rep.count_local = rows.size();
    ActingGroup A = ActingGroup::make(1, p, rep.galois_modulus);
    std::vector<std::vector<int>> gal;
    for (long b : A.h) gal.push_back(act_on_table(*tn, {A.m, b}));
    ActionOnSet Y = row_action(A, rows, {s.ext->row_action(0)}, gal);
    MatchResult self = match_actions(Y, Y);
    rep.orbits = self.classes;
    return rep;
  }
  auto [g, n] = make_sides(family, f, p);
  rep.outer_order = g.ext->k();
  ConditionOne c1 = condition_one(g, n, p);
  rep.galois_modulus = c1.group.m;
  rep.count_global = c1.rows_global.size();
  rep.count_local = c1.rows_local.size();
  rep.orbits = c1.match.classes;
  rep.failure = c1.match.reason;
  for (auto [x, y] : c1.match.pairs)
    rep.bijection.emplace_back(c1.rows_global[static_cast<std::size_t>(x)], c1.rows_local[static_cast<std::size_t>(y)]);
  rep.part1 = c1.match.ok;
  try {
    Table tm = dixon_schneider(local_model(family, f, p));
    rep.count_model = p_prime_rows(*tm, p).size();
    rep.model_equivalent = tables_equivalent(*n.table, *tm);
    if (!*rep.model_equivalent || *rep.count_model != rep.count_local) rep.part1 = false;
  } catch (const InvalidArgument&) {
    // No local model at this prime; the computed normalizer is the only path.
  }
  rep.extensions = condition_two(g, p);
  auto loc = condition_two(n, p);
  rep.extensions.insert(rep.extensions.end(), loc.begin(), loc.end());
  rep.part2 = std::all_of(rep.extensions.begin(), rep.extensions.end(), [](const auto& e) { return e.invariant; });
  return rep;
}

// ---- congruences on torus orders -------------------------------------------

struct Lemma32Entry {
  long f = 0;
  std::string name;  // T1, T2+, T2-, T3, T4+, T4-
  char part = 'a';
  std::uint64_t value = 0;
  std::vector<std::uint64_t> odd_primes;
  bool ok = true;
};

struct Lemma32Report {
  long f_min = 1, f_max = 1;
  std::vector<Lemma32Entry> entries;
  bool identities_ok = true;
  bool ok() const {
    return identities_ok && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
  }

  Json to_json() const {
    Json es = Json::array();
    for (const auto& e : entries)
      es.push_back({{"f", e.f}, {"name", e.name}, {"part", std::string(1, e.part)}, {"value", e.value},
                    {"odd_primes", e.odd_primes}, {"ok", e.ok}});
    return Json{{"f_min", f_min}, {"f_max", f_max}, {"identities_ok", identities_ok}, {"entries", es}, {"ok", ok()}};
  }
};

/// With q^2 = 2^(2f+1), r = 2^(f+1), r3 = 2^(3f+2): every odd prime factor
/// of T1 = q^2-1 is 1,7 mod 8; of T3 = q^4-q^2+1 (p != 3) is 1 mod 3; of
/// T4+- = q^4 +- r3 + q^2 +- r + 1 (p != 3) is 1,11 mod 12; of T2+- = q^2 +- r + 1 is 1 mod 4.
inline Lemma32Report lemma32_check(long f_min, long f_max) {
  if (f_min < 1 || f_max > 12 || f_min > f_max) throw InvalidArgument("need 1 <= f_min <= f_max <= 12");
  Lemma32Report rep;
  rep.f_min = f_min;
  rep.f_max = f_max;
  for (long f = f_min; f <= f_max; ++f) {
    using u64 = std::uint64_t;
    u64 q2 = u64{1} << (2 * f + 1), r = u64{1} << (f + 1), r3 = u64{1} << (3 * f + 2), q4 = q2 * q2;
    std::vector<std::pair<std::string, u64>> vals{{"T1", q2 - 1},
                                                  {"T2+", q2 + r + 1},
                                                  {"T2-", q2 - r + 1},
                                                  {"T3", q4 - q2 + 1},
                                                  {"T4+", q4 + r3 + q2 + r + 1},
                                                  {"T4-", q4 - r3 + q2 - r + 1}};
    Integer Q4 = Integer(std::to_string(q4)), one = 1;
    auto z = [](u64 v) { return Integer(std::to_string(v)); };
    Integer q12 = Q4 * Q4 * Q4;
    if (z(vals[1].second) * z(vals[2].second) != Q4 + one) rep.identities_ok = false;
    if (z(vals[4].second) * z(vals[5].second) * (Q4 + one) != q12 + one) rep.identities_ok = false;
    for (const auto& [name, v] : vals) {
      Lemma32Entry e;
      e.f = f;
      e.name = name;
      e.value = v;
      e.part = name == "T1" ? 'a' : name == "T3" ? 'b' : name[1] == '4' ? 'c' : 'd';
      for (const auto& [pr, mult] : nt::factorize(v)) {
        if (pr == 2) continue;
        e.odd_primes.push_back(pr);
        bool good = true;
        switch (e.part) {
          case 'a': good = pr % 8 == 1 || pr % 8 == 7; break;
          case 'b': good = pr == 3 || pr % 3 == 1; break;
          case 'c': good = pr == 3 || pr % 12 == 1 || pr % 12 == 11; break;
          default: good = pr % 4 == 1;
        }
        e.ok = e.ok && good;
      }
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

/// The supported (family, f, p) grid.
inline std::vector<TargetInfo> list_targets() {
  std::vector<TargetInfo> out;
  auto add_primes = [&](const std::string& family, long f, std::set<long> primes) {
    for (long p : primes) {
      try {
        out.push_back(classify_target(family, f, p));
      } catch (const InvalidArgument&) {
      }
    }
  };
  for (long f : {1, 2, 3}) {
    std::set<long> ps;
    for (const auto& r : torus_rows("2B2", f))
      for (long p : nt::prime_divisors(static_cast<long>(r.value))) ps.insert(p);
    if (f == 1) ps.insert(2);
    add_primes("2B2", f, ps);
  }
  add_primes("2G2", 0, {2, 3, 7});
  {
    std::set<long> ps{2};
    for (const auto& r : torus_rows("2G2", 1))
      for (long p : nt::prime_divisors(static_cast<long>(r.value))) ps.insert(p);
    ps.erase(3);
    add_primes("2G2", 1, ps);
  }
  {
    std::set<long> ps;
    for (const auto& r : torus_rows("2F4", 1))
      for (long p : nt::prime_divisors(static_cast<long>(r.value))) ps.insert(p);
    add_primes("2F4", 1, ps);
  }
  out.push_back(classify_target("2F4", 0, 0));
  out.push_back(classify_target("A2", 2, 0));
  out.push_back(classify_target("2A2", 1, 0));
  out.push_back(classify_target("G2", 2, 0));
  return out;
}

}  // namespace mckn

#endif  // MCKN_VERIFY_HPP
