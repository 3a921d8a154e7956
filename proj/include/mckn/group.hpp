#ifndef MCKN_GROUP_HPP
#define MCKN_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mckn/errors.hpp"
#include "mckn/numtheory.hpp"
#include "mckn/perm.hpp"

namespace mckn {

class FiniteGroup;
using Group = std::shared_ptr<const FiniteGroup>;
using Index = std::uint64_t;

struct ConjClass {
  Index representative = 0;  // minimal element index in the class
  std::uint64_t size = 0;
  long element_order = 1;
  std::vector<int> powers;  // powers[k] = class of rep^k for 0 <= k < element_order

  int power(long k) const { return powers[static_cast<std::size_t>(nt::mod(k, element_order))]; }
};

/// Permutation group with lazily enumerated elements and classes.
///
/// Elements are indexed by the mixed-radix digits of the stabilizer chain;
/// index 0 is the identity. Classes are sorted by (element order, size,
/// representative index), so class 0 is the identity class.
class FiniteGroup {
 public:
  static constexpr std::uint64_t kDefaultCap = 20'000'000;

  FiniteGroup(std::size_t degree, std::vector<Perm> gens, std::string name, std::uint64_t cap)
      : degree_(degree), gens_(std::move(gens)), name_(std::move(name)), cap_(cap), chain_(degree, gens_) {}

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  static Group make(std::size_t degree, std::vector<Perm> gens, std::string name = "",
                    std::uint64_t cap = kDefaultCap) {
    if (degree == 0 || degree > 65536) throw InvalidArgument("degree must lie in [1, 65536]");
    return std::make_shared<const FiniteGroup>(degree, std::move(gens), std::move(name), cap);
  }

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return chain_; }
  std::uint64_t order() const { return chain_.order(); }
  std::uint64_t cap() const { return cap_; }
  bool contains(const Perm& g) const { return chain_.contains(g); }

  Index index_of(const Perm& g) const { return chain_.index_of(g); }

  /// Pointer to the image array of element i (enumerates on first use).
  const Point* element_data(Index i) const {
    enumerate();
    return elements_.data() + i * degree_;
  }

  Perm element(Index i) const {
    const Point* p = element_data(i);
    return Perm(p, p + degree_);
  }

  Index mul(Index a, Index b) const {
    const Point* pa = element_data(a);
    const Point* pb = element_data(b);
    Perm r(degree_);
    for (std::size_t x = 0; x < degree_; ++x) r[x] = pb[pa[x]];
    return index_of(r);
  }

  Index inv(Index a) const { return index_of(perm_inv(element(a))); }

  Index pow(Index a, long k) const { return index_of(perm_pow(element(a), k)); }

  long element_order(Index a) const { return perm_order(element(a)); }

  const std::vector<ConjClass>& classes() const {
    std::call_once(classes_once_, [this] { compute_classes(); });
    return classes_;
  }

  int num_classes() const { return static_cast<int>(classes().size()); }

  int class_of(Index i) const {
    classes();
    return class_of_[i];
  }

  int class_of_perm(const Perm& g) const { return class_of(index_of(g)); }

  /// Class of g^k for g in class c.
  int power_map(int c, long k) const { return classes()[static_cast<std::size_t>(c)].power(k); }

  std::uint64_t centralizer_order(int c) const { return order() / classes()[static_cast<std::size_t>(c)].size; }

  /// lcm of element orders.
  long exponent() const {
    long e = 1;
    for (const auto& c : classes()) e = std::lcm(e, c.element_order);
    return e;
  }

  void require_enumerable() const {
    if (order() > cap_) {
      throw TooLargeForEnumeration("group order " + std::to_string(order()) + " exceeds enumeration cap " +
                                   std::to_string(cap_));
    }
  }

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::string name_;
  std::uint64_t cap_;
  StabChain chain_;

  mutable std::once_flag elements_once_, classes_once_;
  mutable std::vector<Point> elements_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<std::int32_t> class_of_;

  void enumerate() const {
    std::call_once(elements_once_, [this] {
      require_enumerable();
      const auto& lv = chain_.levels();
      std::uint64_t n = order();
      elements_.resize(n * degree_);
      // Depth-first over digits, u_0 most significant; prefix products are shared.
      std::size_t L = lv.size();
      std::vector<Perm> partial(L + 1);
      partial[0] = perm_identity(degree_);
      std::vector<std::size_t> dig(L, 0);
      // partial[k] = trans_{k-1}[u_{k-1}] ... trans_0[u_0] is built right to left,
      // so we prepend: partial[k+1] = trans_k[u_k] * partial[k].
      Index idx = 0;
      auto emit = [&](const Perm& g) {
        std::copy(g.begin(), g.end(), elements_.begin() + static_cast<std::ptrdiff_t>(idx * degree_));
        ++idx;
      };
      if (L == 0) {
        emit(partial[0]);
        return;
      }
      std::size_t k = 0;
      while (true) {
        partial[k + 1] = perm_mul(lv[k].trans[dig[k]], partial[k]);
        if (k + 1 == L) {
          emit(partial[L]);
          while (k != static_cast<std::size_t>(-1) && ++dig[k] == lv[k].orbit.size()) {
            dig[k] = 0;
            --k;
          }
          if (k == static_cast<std::size_t>(-1)) break;
        } else {
          ++k;
        }
      }
    });
  }

  void compute_classes() const {
    require_enumerable();
    enumerate();
    std::uint64_t n = order();
    std::vector<std::int32_t> raw(n, -1);
    struct Raw {
      Index rep;
      std::uint64_t size;
      long ord;
    };
    std::vector<Raw> found;
    std::vector<Index> queue;
    for (Index i = 0; i < n; ++i) {
      if (raw[i] >= 0) continue;
      auto id = static_cast<std::int32_t>(found.size());
      raw[i] = id;
      queue.assign(1, i);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Perm x = element(queue[q]);
        for (const auto& s : gens_) {
          Index y = index_of(perm_conj(x, s));
          if (raw[y] < 0) {
            raw[y] = id;
            queue.push_back(y);
          }
        }
      }
      found.push_back({i, queue.size(), element_order(i)});
    }
    std::vector<int> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return std::tie(found[a].ord, found[a].size, found[a].rep) < std::tie(found[b].ord, found[b].size, found[b].rep);
    });
    std::vector<int> relabel(found.size());
    for (std::size_t c = 0; c < perm.size(); ++c) relabel[perm[c]] = static_cast<int>(c);
    class_of_.resize(n);
    for (Index i = 0; i < n; ++i) class_of_[i] = relabel[raw[i]];
    classes_.resize(found.size());
    for (std::size_t c = 0; c < perm.size(); ++c) {
      const Raw& r = found[perm[c]];
      ConjClass& cc = classes_[c];
      cc.representative = r.rep;
      cc.size = r.size;
      cc.element_order = r.ord;
      cc.powers.resize(static_cast<std::size_t>(r.ord));
      Perm g = element(r.rep), cur = perm_identity(degree_);
      for (long k = 0; k < r.ord; ++k) {
        cc.powers[k] = class_of_[index_of(cur)];
        cur = perm_mul(cur, g);
      }
    }
  }
};

/// Subgroup of G (same point set) generated by the given permutations.
inline Group subgroup(const Group& G, std::vector<Perm> gens, std::string name = "") {
  for (const auto& g : gens)
    if (!G->contains(g)) throw InvalidArgument("subgroup generator not in the ambient group");
  return FiniteGroup::make(G->degree(), std::move(gens), std::move(name), G->cap());
}

/// Group generated by a greedy selection from `elems` (in the given order),
/// stopping once the generated order reaches `target_order`.
inline Group generated_by(std::size_t degree, const std::vector<Perm>& elems, std::uint64_t target_order,
                          std::string name, std::uint64_t cap = FiniteGroup::kDefaultCap) {
  std::vector<Perm> gens;
  StabChain ch(degree, gens);
  for (const auto& e : elems) {
    if (ch.order() >= target_order) break;
    if (ch.contains(e)) continue;
    gens.push_back(e);
    ch = StabChain(degree, gens);
  }
  return FiniteGroup::make(degree, std::move(gens), std::move(name), cap);
}

inline bool normalizes(const Perm& x, const Group& H) {
  for (const auto& h : H->generators())
    if (!H->contains(perm_conj(h, x))) return false;
  return true;
}

/// N_G(H) by filtering the elements of G.
inline Group normalizer(const Group& G, const Group& H, std::string name = "") {
  G->require_enumerable();
  std::vector<Perm> keep;
  for (Index i = 0; i < G->order(); ++i) {
    Perm x = G->element(i);
    if (normalizes(x, H)) keep.push_back(std::move(x));
  }
  return generated_by(G->degree(), keep, keep.size(), std::move(name), G->cap());
}

/// C_G(x) by filtering the elements of G.
inline Group centralizer(const Group& G, const Perm& x, std::string name = "") {
  G->require_enumerable();
  std::vector<Perm> keep;
  for (Index i = 0; i < G->order(); ++i) {
    Perm g = G->element(i);
    if (perm_mul(g, x) == perm_mul(x, g)) keep.push_back(std::move(g));
  }
  return generated_by(G->degree(), keep, keep.size(), std::move(name), G->cap());
}

/// A Sylow p-subgroup: repeatedly adjoins a p-element of N_G(P) outside P.
inline Group sylow_subgroup(const Group& G, long p, std::string name = "") {
  std::uint64_t n = G->order();
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p)) || n % static_cast<std::uint64_t>(p) != 0) {
    throw InvalidArgument("p must be a prime dividing the group order");
  }
  G->require_enumerable();
  auto target = static_cast<std::uint64_t>(nt::p_part(static_cast<long>(n), p));
  std::vector<Perm> gens;
  Group P = FiniteGroup::make(G->degree(), gens, name, G->cap());
  while (P->order() < target) {
    bool grown = false;
    for (Index i = 1; i < n && !grown; ++i) {
      long o = G->element_order(i);
      long pp = nt::p_part(o, p);
      if (pp == 1) continue;
      Perm x = perm_pow(G->element(i), o / pp);
      if (P->contains(x) || !normalizes(x, P)) continue;
      gens.push_back(std::move(x));
      P = FiniteGroup::make(G->degree(), gens, name, G->cap());
      grown = true;
    }
    if (!grown) throw TableInconsistency("Sylow search stalled");
  }
  return P;
}

/// Homomorphism given by generator images, validated on the element level.
class GroupMap {
 public:
  enum class Kind { Homomorphism, Automorphism };

  GroupMap() = default;

  static GroupMap from_images(Group src, Group tgt, std::vector<Perm> images, Kind kind) {
    if (images.size() != src->generators().size()) throw NotAHomomorphism("one image per generator required");
    for (const auto& im : images)
      if (!tgt->contains(im)) throw NotAHomomorphism("generator image outside the target group");
    if (kind == Kind::Automorphism && src.get() != tgt.get() &&
        (src->degree() != tgt->degree() || src->order() != tgt->order())) {
      throw NotAHomomorphism("automorphism requires source = target");
    }
    GroupMap m;
    m.src_ = std::move(src);
    m.tgt_ = std::move(tgt);
    m.images_ = std::move(images);
    m.kind_ = kind;
    m.build();
    return m;
  }

  static GroupMap identity(const Group& G) { return from_images(G, G, G->generators(), Kind::Automorphism); }

  /// y -> x^-1 y x for a permutation x normalizing G.
  static GroupMap conjugation(const Group& G, const Perm& x) {
    std::vector<Perm> im;
    for (const auto& g : G->generators()) im.push_back(perm_conj(g, x));
    return from_images(G, G, std::move(im), Kind::Automorphism);
  }

  static GroupMap inner(const Group& G, const Perm& x) {
    if (!G->contains(x)) throw InvalidArgument("inner automorphism needs an element of the group");
    return conjugation(G, x);
  }

  const Group& source() const { return src_; }
  const Group& target() const { return tgt_; }
  const std::vector<Perm>& images() const { return images_; }
  Kind kind() const { return kind_; }

  Index apply(Index i) const { return map_[i]; }
  Perm apply(const Perm& g) const { return tgt_->element(map_[src_->index_of(g)]); }

  /// this o inner: x -> this(inner(x)).
  GroupMap compose(const GroupMap& inner) const {
    if (inner.tgt_->order() != src_->order() || inner.tgt_->degree() != src_->degree())
      throw InvalidArgument("composition of incompatible maps");
    std::vector<Perm> im;
    for (const auto& g : inner.src_->generators()) im.push_back(apply(inner.apply(g)));
    Kind k = (kind_ == Kind::Automorphism && inner.kind_ == Kind::Automorphism) ? Kind::Automorphism
                                                                                : Kind::Homomorphism;
    return from_images(inner.src_, tgt_, std::move(im), k);
  }

  bool is_identity() const {
    for (Index i = 0; i < map_.size(); ++i)
      if (map_[i] != i) return false;
    return true;
  }

  GroupMap power(long k) const {
    GroupMap r = identity(src_);
    for (long i = 0; i < k; ++i) r = compose(r);
    return r;
  }

  long order() const {
    if (kind_ != Kind::Automorphism) throw InvalidArgument("order of a non-automorphism");
    long k = 1;
    GroupMap r = *this;
    while (!r.is_identity()) {
      r = compose(r);
      ++k;
    }
    return k;
  }

 private:
  Group src_, tgt_;
  std::vector<Perm> images_;
  Kind kind_ = Kind::Homomorphism;
  std::vector<std::uint32_t> map_;

  void build() {
    src_->require_enumerable();
    tgt_->require_enumerable();
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    std::uint64_t n = src_->order();
    map_.assign(n, kUnset);
    std::vector<Index> img_idx;
    for (const auto& im : images_) img_idx.push_back(tgt_->index_of(im));
    map_[0] = 0;
    std::vector<Index> queue{0};
    const auto& gens = src_->generators();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Index x = queue[q];
      Perm xp = src_->element(x);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Index y = src_->index_of(perm_mul(xp, gens[s]));
        auto val = static_cast<std::uint32_t>(tgt_->mul(map_[x], img_idx[s]));
        if (map_[y] == kUnset) {
          map_[y] = val;
          queue.push_back(y);
        } else if (map_[y] != val) {
          throw NotAHomomorphism("generator images do not define a homomorphism");
        }
      }
    }
    if (kind_ == Kind::Automorphism) {
      std::vector<char> hit(tgt_->order(), 0);
      for (auto v : map_) {
        if (hit[v]) throw NotAHomomorphism("map is not bijective");
        hit[v] = 1;
      }
    }
  }
};

/// Permutation of class indices c -> class of a(rep_c).
inline std::vector<int> induced_class_permutation(const GroupMap& a) {
  if (a.kind() != GroupMap::Kind::Automorphism) throw InvalidArgument("automorphism required");
  const Group& G = a.source();
  std::vector<int> perm;
  for (const auto& c : G->classes()) perm.push_back(a.target()->class_of(a.apply(c.representative)));
  return perm;
}

/// G x| <t> with t of order k acting by an automorphism a with a^k = 1.
///
/// Realized on k copies of G's points: g acts on block j as a^j(g), and t
/// shifts block j to block j-1, so t^-1 g t = a(g).
struct SemidirectProduct {
  Group group;
  Group base;
  Perm complement;
  long k = 1;
  std::vector<GroupMap> powers;  // a^0, ..., a^{k-1} on the original group
  std::size_t base_degree = 0;

  Perm embed(const Perm& g) const {
    Perm r(base_degree * static_cast<std::size_t>(k));
    for (long j = 0; j < k; ++j) {
      Perm gj = j == 0 ? g : powers[static_cast<std::size_t>(j)].apply(g);
      std::size_t off = base_degree * static_cast<std::size_t>(j);
      for (std::size_t x = 0; x < base_degree; ++x) r[off + x] = static_cast<Point>(off + gj[x]);
    }
    return r;
  }
};

inline SemidirectProduct semidirect_product(const Group& G, const GroupMap& a, long k, std::string name = "") {
  if (k < 1) throw InvalidArgument("cyclic order must be positive");
  if (a.kind() != GroupMap::Kind::Automorphism) throw InvalidArgument("automorphism required");
  SemidirectProduct sp;
  sp.k = k;
  sp.base_degree = G->degree();
  sp.powers.push_back(GroupMap::identity(G));
  for (long j = 1; j <= k; ++j) sp.powers.push_back(a.compose(sp.powers.back()));
  if (!sp.powers.back().is_identity()) throw InvalidArgument("automorphism order does not divide k");
  sp.powers.pop_back();
  std::size_t deg = G->degree() * static_cast<std::size_t>(k);
  if (deg > 65536) throw InvalidArgument("semidirect product degree too large");
  sp.complement = Perm(deg);
  for (long j = 0; j < k; ++j) {
    long to = nt::mod(j - 1, k);
    for (std::size_t x = 0; x < G->degree(); ++x)
      sp.complement[G->degree() * j + x] = static_cast<Point>(G->degree() * to + x);
  }
  std::vector<Perm> base_gens;
  for (const auto& g : G->generators()) base_gens.push_back(sp.embed(g));
  std::vector<Perm> gens = base_gens;
  gens.push_back(sp.complement);
  sp.group = FiniteGroup::make(deg, std::move(gens), std::move(name), G->cap());
  sp.base = FiniteGroup::make(deg, std::move(base_gens), G->name(), G->cap());
  return sp;
}

}  // namespace mckn

#endif  // MCKN_GROUP_HPP
