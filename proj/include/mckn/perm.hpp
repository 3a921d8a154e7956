#ifndef MCKN_PERM_HPP
#define MCKN_PERM_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mckn/errors.hpp"

namespace mckn {

using Point = std::uint16_t;

/// Permutation as an image array; acts on the right, so (a*b)[x] = b[a[x]].
using Perm = std::vector<Point>;

inline Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Point{0});
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<Point>(i);
  return r;
}

/// a^-1 * x * a.
inline Perm perm_conj(const Perm& x, const Perm& a) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[a[i]] = a[x[i]];
  return r;
}

inline Perm perm_pow(const Perm& a, long k) {
  Perm base = k < 0 ? perm_inv(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Perm r = perm_identity(a.size());
  while (e) {
    if (e & 1) r = perm_mul(r, base);
    base = perm_mul(base, base);
    e >>= 1;
  }
  return r;
}

/// Order as lcm of cycle lengths.
inline long perm_order(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  long o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

inline bool perm_valid(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (Point x : a) {
    if (x >= a.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

/// Disjoint-cycle notation with 1-based points, "()" for the identity.
inline std::string perm_cycles(const Perm& a) {
  std::ostringstream os;
  std::vector<char> seen(a.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    any = true;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      if (j != i) os << ",";
      os << j + 1;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

/// Parses disjoint or non-disjoint cycle notation on 1-based points.
/// Cycles are composed left to right.
inline Perm perm_parse(const std::string& s, std::size_t degree) {
  Perm r = perm_identity(degree);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw InvalidArgument("bad cycle notation: " + s);
    std::size_t j = s.find(')', i);
    if (j == std::string::npos) throw InvalidArgument("bad cycle notation: " + s);
    std::vector<std::size_t> cyc;
    std::stringstream ss(s.substr(i + 1, j - i - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.find_first_not_of(' ') == std::string::npos) continue;
      std::size_t v = std::stoul(tok);
      if (v < 1 || v > degree) throw InvalidArgument("cycle point out of range: " + s);
      cyc.push_back(v - 1);
    }
    Perm c = perm_identity(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    if (!perm_valid(c)) throw InvalidArgument("repeated point in cycle: " + s);
    r = perm_mul(r, c);
    i = j + 1;
  }
  return r;
}

/// Stabilizer chain built by deterministic Schreier-Sims.
///
/// Level i stores base point b_i, the basic orbit and a transversal with
/// trans[u][b_i] = orbit[u] and trans[0] the identity. Group elements are
/// in bijection with digit vectors (u_0, ..., u_{L-1}) via
/// g = trans_{L-1}[u_{L-1}] * ... * trans_0[u_0].
class StabChain {
 public:
  struct Level {
    Point base;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Perm> trans;
    std::vector<Perm> trans_inv;
  };

  StabChain() = default;

  StabChain(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
    for (const auto& g : gens) {
      if (g.size() != degree || !perm_valid(g)) throw InvalidArgument("invalid permutation generator");
      if (!perm_is_identity(g)) strong_.push_back(g);
    }
    build();
    if (levels_.size() > 64) throw InvalidArgument("stabilizer chain deeper than 64 levels");
  }

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  bool contains(const Perm& g) const {
    if (g.size() != degree_) return false;
    auto [res, lvl] = sift(g, 0);
    return lvl == levels_.size() && perm_is_identity(res);
  }

  /// Mixed-radix index of g; g must lie in the group.
  std::uint64_t index_of(const Perm& g) const {
    std::uint64_t idx = 0;
    std::array<std::int32_t, 64> digits{};
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      Point x = g[levels_[k].base];
      for (std::size_t j = 0; j < k; ++j) x = levels_[j].trans_inv[digits[j]][x];
      std::int32_t u = levels_[k].pos[x];
      if (u < 0) throw InvalidArgument("element not in group");
      digits[k] = u;
      idx = idx * levels_[k].orbit.size() + static_cast<std::uint64_t>(u);
    }
    return idx;
  }

  Perm element_at(std::uint64_t idx) const {
    std::vector<std::size_t> dig(levels_.size());
    for (std::size_t k = levels_.size(); k-- > 0;) {
      dig[k] = idx % levels_[k].orbit.size();
      idx /= levels_[k].orbit.size();
    }
    Perm g = perm_identity(degree_);
    for (std::size_t k = levels_.size(); k-- > 0;) g = perm_mul(g, levels_[k].trans[dig[k]]);
    return g;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;

  // Residue of g after stripping from level `from`; second is the level where it stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t k = from; k < levels_.size(); ++k) {
      std::int32_t u = levels_[k].pos[g[levels_[k].base]];
      if (u < 0) return {std::move(g), k};
      g = perm_mul(g, levels_[k].trans_inv[u]);
    }
    return {std::move(g), levels_.size()};
  }

  bool fixes_prefix(const Perm& s, std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j)
      if (s[levels_[j].base] != levels_[j].base) return false;
    return true;
  }

  void add_level_for(const Perm& s) {
    for (std::size_t x = 0; x < degree_; ++x) {
      if (s[x] != x) {
        Level l;
        l.base = static_cast<Point>(x);
        levels_.push_back(std::move(l));
        return;
      }
    }
  }

  void rebuild_level(std::size_t i) {
    Level& l = levels_[i];
    std::vector<const Perm*> gens;
    for (const auto& s : strong_)
      if (fixes_prefix(s, i)) gens.push_back(&s);
    l.orbit.assign(1, l.base);
    l.pos.assign(degree_, -1);
    l.pos[l.base] = 0;
    l.trans.assign(1, perm_identity(degree_));
    l.trans_inv.assign(1, perm_identity(degree_));
    for (std::size_t q = 0; q < l.orbit.size(); ++q) {
      Point x = l.orbit[q];
      for (const Perm* s : gens) {
        Point y = (*s)[x];
        if (l.pos[y] >= 0) continue;
        l.pos[y] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(y);
        l.trans.push_back(perm_mul(l.trans[q], *s));
        l.trans_inv.push_back(perm_inv(l.trans.back()));
      }
    }
  }

  void build() {
    for (const auto& s : strong_)
      if (fixes_prefix(s, levels_.size())) add_level_for(s);
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      Level& l = levels_[i];
      std::vector<std::size_t> gens;
      for (std::size_t s = 0; s < strong_.size(); ++s)
        if (fixes_prefix(strong_[s], i)) gens.push_back(s);
      for (std::size_t q = 0; !restarted && q < l.orbit.size(); ++q) {
        for (std::size_t s : gens) {
          const Perm& gen = strong_[s];
          Point y = gen[l.orbit[q]];
          Perm h = perm_mul(perm_mul(levels_[i].trans[q], gen), levels_[i].trans_inv[levels_[i].pos[y]]);
          auto [res, j] = sift(std::move(h), i + 1);
          if (j == levels_.size() && perm_is_identity(res)) continue;
          strong_.push_back(std::move(res));
          if (j == levels_.size()) add_level_for(strong_.back());
          for (std::size_t k = i + 1; k <= j; ++k) rebuild_level(k);
          i = j + 1;  // the loop decrement resumes checking at level j
          restarted = true;
          break;
        }
      }
    }
  }
};

}  // namespace mckn

#endif  // MCKN_PERM_HPP
