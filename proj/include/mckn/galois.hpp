#ifndef MCKN_GALOIS_HPP
#define MCKN_GALOIS_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "mckn/chartab.hpp"
#include "mckn/zoo.hpp"

namespace mckn {

/// sigma_b : zeta_m -> zeta_m^b on Q(zeta_m).
struct GaloisElement {
  long m = 1;
  long b = 1;

  GaloisElement operator*(const GaloisElement& o) const {
    if (m != o.m) throw InvalidArgument("Galois elements with different moduli");
    return {m, m == 1 ? 1 : nt::mod(b * o.b, m)};
  }
  Cyclotomic operator()(const Cyclotomic& x) const { return x.galois(b); }
  bool operator==(const GaloisElement& o) const { return m == o.m && nt::mod(b, m) == nt::mod(o.b, m); }
};

/// Image of the Galois group H(p) in (Z/m)^*: residues b with b = p^k mod the
/// p'-part of m and b an arbitrary unit mod the p-part.
struct HGroup {
  long p = 2;
  long m = 1;
  std::vector<long> elements;  // ascending; 1 first

  std::size_t size() const { return elements.size(); }
  GaloisElement operator[](std::size_t i) const { return {m, elements[i]}; }
  bool contains(long b) const { return m == 1 || std::binary_search(elements.begin(), elements.end(), nt::mod(b, m)); }
};

inline HGroup h_group(long p, long m) {
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) throw InvalidArgument("h_group needs a prime");
  if (m < 1) throw InvalidArgument("h_group needs m >= 1");
  HGroup H;
  H.p = p;
  H.m = m;
  if (m == 1) {
    H.elements = {1};
    return H;
  }
  long mp = nt::p_part(m, p), mq = m / mp;
  std::vector<char> allowed(static_cast<std::size_t>(mq), 0);
  long x = 1 % mq;
  do {
    allowed[static_cast<std::size_t>(x)] = 1;
    x = nt::mod(x * p, mq);
  } while (x != 1 % mq);
  for (long b = 1; b < m; ++b)
    if (std::gcd(b, m) == 1 && allowed[static_cast<std::size_t>(b % mq)]) H.elements.push_back(b);
  return H;
}

/// Full Galois group of Q(zeta_m), as residues.
inline std::vector<long> galois_group(long m) {
  std::vector<long> r;
  for (long b = 1; b <= std::max(1L, m - 1); ++b)
    if (std::gcd(b, m) == 1) r.push_back(b);
  return r;
}

/// Row permutation i -> j with chi_j = sigma(chi_i).
inline std::vector<int> act_on_table(const CharacterTable& t, const GaloisElement& s) {
  if (s.m % t.exponent() != 0) throw InvalidArgument("Galois modulus must be a multiple of the table exponent");
  std::map<std::vector<Cyclotomic>, int> where;
  for (std::size_t i = 0; i < t.rows.size(); ++i) where.emplace(t.rows[i].values, static_cast<int>(i));
  std::vector<int> perm;
  for (const auto& row : t.rows) {
    auto it = where.find(row.galois(s.b).values);
    if (it == where.end()) throw TableInconsistency("Galois image of a row is not a row");
    perm.push_back(it->second);
  }
  return perm;
}

/// Row permutation i -> j with chi_j = chi_i o a, for a class permutation c -> pi(c).
inline std::vector<int> act_by_class_permutation(const CharacterTable& t, const std::vector<int>& pi) {
  std::map<std::vector<Cyclotomic>, int> where;
  for (std::size_t i = 0; i < t.rows.size(); ++i) where.emplace(t.rows[i].values, static_cast<int>(i));
  std::vector<int> perm;
  for (const auto& row : t.rows) {
    std::vector<Cyclotomic> v;
    for (int c : pi) v.push_back(row[c]);
    auto it = where.find(v);
    if (it == where.end()) throw TableInconsistency("automorphism image of a row is not a row");
    perm.push_back(it->second);
  }
  return perm;
}

/// sigma_b(chi(c)) = chi(c^b) for every row and class.
inline bool power_compatibility_check(const CharacterTable& t, long b) {
  const auto& cd = t.classes;
  for (const auto& row : t.rows)
    for (int c = 0; c < cd.num_classes(); ++c)
      if (row[c].galois(b) != row[cd.power(c, b)]) return false;
  return true;
}

/// Clifford label of a row of Irr(T x| W): the W-orbit of torus characters in
/// its restriction to T, and the multiplicity e with chi|_T = e * (orbit sum).
struct McKayLabel {
  std::size_t orbit_rep = 0;  // smallest torus-character index in the orbit (0 = trivial)
  std::size_t orbit_size = 1;
  int eta_index = 0;          // position among rows over the same orbit
  long eta_degree = 1;        // e = chi(1) / orbit size
};

/// Labels every row of the model's table; validates the Clifford counts.
inline std::vector<McKayLabel> clifford_label(const TorusModel& tm, const CharacterTable& t) {
  const Group& N = tm.group;
  std::size_t n = tm.size();
  // Class of each torus element (translation by v).
  std::vector<int> cls(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto cv = tm.coords(v);
    Perm tr(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto cx = tm.coords(x);
      for (std::size_t j = 0; j < cx.size(); ++j) cx[j] += cv[j];
      tr[x] = static_cast<Point>(tm.index(cx));
    }
    cls[v] = N->class_of_perm(tr);
  }
  std::vector<McKayLabel> labels(t.rows.size());
  std::map<std::vector<std::size_t>, int> seen_orbit;  // support -> rows so far
  std::vector<char> covered(n, 0);
  long sum_sq = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::complex<double>> val(static_cast<std::size_t>(t.num_classes()));
    for (int c = 0; c < t.num_classes(); ++c) val[static_cast<std::size_t>(c)] = t.rows[i][c].approx();
    std::vector<std::size_t> support;
    long e = 0;
    for (std::size_t y = 0; y < n; ++y) {
      auto cy = tm.coords(y);
      std::complex<double> s = 0;
      for (std::size_t v = 0; v < n; ++v) {
        auto cv = tm.coords(v);
        double ph = 0;
        for (std::size_t j = 0; j < cv.size(); ++j)
          ph += static_cast<double>(cv[j] * cy[j] % tm.spec.moduli[j]) / static_cast<double>(tm.spec.moduli[j]);
        s += val[static_cast<std::size_t>(cls[v])] * std::polar(1.0, -2 * std::numbers::pi * ph);
      }
      s /= static_cast<double>(n);
      long mult = std::lround(s.real());
      if (std::abs(s - std::complex<double>(static_cast<double>(mult), 0)) > 1e-6)
        throw TableInconsistency("non-integral torus multiplicity");
      if (mult == 0) continue;
      if (e != 0 && mult != e) throw ObstructionError("unequal multiplicities over one orbit");
      e = mult;
      support.push_back(y);
    }
    if (support.empty()) throw TableInconsistency("row vanishes on the torus");
    long deg = t.degree(i);
    if (deg != e * static_cast<long>(support.size())) throw ObstructionError("degree is not e times the orbit size");
    McKayLabel& L = labels[i];
    L.orbit_rep = support.front();
    L.orbit_size = support.size();
    L.eta_degree = e;
    L.eta_index = seen_orbit[support]++;
    for (auto y : support) covered[y] = 1;
    sum_sq += deg * deg;
  }
  if (static_cast<std::uint64_t>(sum_sq) != N->order()) throw TableInconsistency("labels do not exhaust Irr(N)");
  for (char c : covered)
    if (!c) throw ObstructionError("a torus character lies under no row");
  // Over each orbit the eta-degrees square-sum to |W_s| = |W| / |orbit|.
  std::map<std::size_t, long> sq;
  for (const auto& L : labels) sq[L.orbit_rep] += L.eta_degree * L.eta_degree;
  for (const auto& L : labels)
    if (sq[L.orbit_rep] * static_cast<long>(L.orbit_size) != tm.spec.complement_order)
      throw ObstructionError("extension missing over an orbit");
  return labels;
}

}  // namespace mckn

#endif  // MCKN_GALOIS_HPP
