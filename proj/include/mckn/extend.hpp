#ifndef MCKN_EXTEND_HPP
#define MCKN_EXTEND_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mckn/galois.hpp"

/// Extensions of characters of M to M x| A for a cyclic group A = <a> of
/// automorphisms, found by enumerating Irr(M x| A_psi).
namespace mckn {

/// (a^j, sigma_b) in the joint stabilizer of a row, and whether the witness is fixed by it.
struct PairCheck {
  long j = 0;
  long b = 1;
  bool fixed = false;
};

struct ExtensionWitness {
  int base_row = -1;
  long stabilizer_order = 1;     // |A_psi|
  std::vector<int> extensions;   // rows of Irr(M x| A_psi) restricting to psi
  int witness_row = -1;          // invariant extension, or -1
  bool vacuous = false;          // A_psi trivial: psi extends as itself
  std::vector<PairCheck> pairs;  // joint stabilizer of psi in <a> x H
  bool found() const { return witness_row >= 0; }
};

/// M x| <a^e> together with its table and the fusion of M's classes.
struct ExtensionStage {
  long e = 1;
  SemidirectProduct sp;
  Table table;
  ClassFusion fusion;
  std::vector<std::vector<int>> outer_rows;  // row permutation of each a^j (0 <= j < k) on Irr(M x| <a^e>)
};

/// Cyclic automorphism group <a> of order dividing k acting on M with table t.
class Extender {
 public:
  Extender(Table t, GroupMap a, long k) : t_(std::move(t)), a_(std::move(a)), k_(k) {
    if (k < 1) throw InvalidArgument("cyclic order must be positive");
    if (!t_->group || t_->group.get() != a_.source().get()) throw InvalidArgument("automorphism must act on the table's group");
    powers_.push_back(GroupMap::identity(t_->group));
    for (long j = 1; j <= k_; ++j) powers_.push_back(a_.compose(powers_.back()));
    if (!powers_.back().is_identity()) throw InvalidArgument("automorphism order does not divide k");
    powers_.pop_back();
    for (const auto& p : powers_) {
      auto pi = induced_class_permutation(p);
      class_perm_.push_back(pi);
      row_perm_.push_back(act_by_class_permutation(*t_, pi));
    }
  }

  const Table& table() const { return t_; }
  long k() const { return k_; }
  const GroupMap& automorphism() const { return a_; }
  /// Row permutation of a^j on Irr(M): chi -> chi o a^j.
  const std::vector<int>& row_action(long j) const { return row_perm_[static_cast<std::size_t>(nt::mod(j, k_))]; }

  /// Smallest e | k with psi o a^e = psi.
  long stabilizer_step(int row) const {
    for (long e = 1; e < k_; ++e)
      if (k_ % e == 0 && row_action(e)[static_cast<std::size_t>(row)] == row) return e;
    return k_;
  }

  /// Irr(M x| <a^e>) with the fusion from M; built once per e.
  const ExtensionStage& stage(long e) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = stages_.find(e);
    if (it != stages_.end()) return *it->second;
    auto st = std::make_unique<ExtensionStage>();
    st->e = e;
    const GroupMap& b = powers_[static_cast<std::size_t>(e)];
    st->sp = semidirect_product(t_->group, b, k_ / e, t_->name + ":" + std::to_string(k_ / e));
    st->table = dixon_schneider(st->sp.group);
    const SemidirectProduct& sp = st->sp;
    st->fusion = class_fusion(t_->group, sp.group, [&](const Perm& g) { return sp.embed(g); });
    // a^j extends to M x| <a^e> by fixing the complement generator.
    for (long j = 0; j < k_; ++j) {
      const GroupMap& aj = powers_[static_cast<std::size_t>(j)];
      std::vector<Perm> im;
      for (const auto& g : t_->group->generators()) im.push_back(sp.embed(aj.apply(g)));
      im.push_back(sp.complement);
      GroupMap ext = GroupMap::from_images(sp.group, sp.group, im, GroupMap::Kind::Automorphism);
      st->outer_rows.push_back(act_by_class_permutation(*st->table, induced_class_permutation(ext)));
    }
    auto& ref = *st;
    stages_.emplace(e, std::move(st));
    return ref;
  }

  /// Rows of Irr(M x| A_psi) restricting to psi (psi itself when A_psi = 1).
  std::vector<int> find_extensions(int row) const {
    long e = stabilizer_step(row);
    if (e == k_) return {row};
    const auto& st = stage(e);
    std::vector<int> out;
    for (std::size_t r = 0; r < st.table->rows.size(); ++r)
      if (restrict(st.fusion, st.table->rows[r]) == t_->rows[static_cast<std::size_t>(row)]) out.push_back(static_cast<int>(r));
    return out;
  }

  /// Searches the extensions of psi for one fixed by the joint stabilizer of
  /// psi in <a> x H(p); H is taken modulo the exponent of M x| A_psi.
  ExtensionWitness invariant_extension(int row, long p) const {
    ExtensionWitness w;
    w.base_row = row;
    long e = stabilizer_step(row);
    w.stabilizer_order = k_ / e;
    const ClassFunction& psi = t_->rows[static_cast<std::size_t>(row)];
    long m = t_->exponent();
    const ExtensionStage* st = nullptr;
    if (e < k_) {
      st = &stage(e);
      m = std::lcm(m, st->table->exponent());
    }
    HGroup H = h_group(p, m);
    std::vector<std::pair<long, long>> joint;
    for (long j = 0; j < k_; ++j) {
      const auto& pi = class_perm_[static_cast<std::size_t>(j)];
      for (long b : H.elements) {
        bool fixes = true;
        for (std::size_t c = 0; c < psi.size() && fixes; ++c) fixes = psi[static_cast<std::size_t>(pi[c])].galois(b) == psi[c];
        if (fixes) joint.emplace_back(j, b);
      }
    }
    if (!st) {
      w.vacuous = true;
      w.extensions = {row};
      w.witness_row = row;
      for (auto [j, b] : joint) w.pairs.push_back({j, b, true});
      return w;
    }
    w.extensions = find_extensions(row);
    const CharacterTable& T = *st->table;
    auto image = [&](int r, long j, long b) {
      int s = st->outer_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      return T.rows[static_cast<std::size_t>(s)].galois(b);
    };
    for (int r : w.extensions) {
      bool ok = true;
      for (auto [j, b] : joint) ok = ok && image(r, j, b) == T.rows[static_cast<std::size_t>(r)];
      if (ok) {
        w.witness_row = r;
        break;
      }
    }
    for (auto [j, b] : joint) {
      bool fixed = w.witness_row >= 0 && image(w.witness_row, j, b) == T.rows[static_cast<std::size_t>(w.witness_row)];
      w.pairs.push_back({j, b, fixed});
    }
    return w;
  }

 private:
  Table t_;
  GroupMap a_;
  long k_;
  std::vector<GroupMap> powers_;
  std::vector<std::vector<int>> class_perm_, row_perm_;
  mutable std::mutex mu_;
  mutable std::map<long, std::unique_ptr<ExtensionStage>> stages_;
};

/// x -> g^-1 alpha(x) g for the first g in G (by index) with H stable and
/// order dividing k; throws ObstructionError if none exists.
inline GroupMap stabilizing_automorphism(const Group& G, const GroupMap& alpha, long k, const Group& H) {
  std::vector<Perm> ah;
  for (const auto& h : H->generators()) ah.push_back(alpha.apply(h));
  for (Index i = 0; i < G->order(); ++i) {
    Perm g = G->element(i);
    bool stable = true;
    for (std::size_t s = 0; s < ah.size() && stable; ++s) stable = H->contains(perm_conj(ah[s], g));
    if (!stable) continue;
    GroupMap b = GroupMap::conjugation(G, g).compose(alpha);
    if (b.power(k).is_identity()) return b;
  }
  throw ObstructionError("no H-stable conjugate of the automorphism with order dividing k");
}

/// The unique extension of psi occurring in Ind_{X x| A_psi}^{M x| A_psi}(tau_hat),
/// where tau_hat is an invariant extension of the A_psi-invariant row tau of X.
///
/// X must have the same point set as M and be stable under the stabilizer of psi.
inline int unique_multiplicity_one_extension(const Extender& ext, int psi_row, const Group& X, const Table& tx,
                                             int tau_row, long p) {
  const auto& tm = *ext.table();
  const Group& M = tm.group;
  ClassFusion fx = class_fusion(X, M);
  ClassFunction ind = induce(ClassData::of(*X), tm.classes, fx, tx->rows[static_cast<std::size_t>(tau_row)]);
  if (inner_product(tm, ind, tm.rows[static_cast<std::size_t>(psi_row)]) != Cyclotomic(1))
    throw InvalidArgument("psi must occur with multiplicity one in the induced character");
  long e = ext.stabilizer_step(psi_row);
  if (e == ext.k()) return psi_row;
  const auto& st = ext.stage(e);
  GroupMap b = ext.automorphism().power(e);
  std::vector<Perm> xim;
  for (const auto& g : X->generators()) {
    Perm y = b.apply(g);
    if (!X->contains(y)) throw InvalidArgument("X is not stable under the stabilizer of psi");
    xim.push_back(y);
  }
  GroupMap bx = GroupMap::from_images(X, X, xim, GroupMap::Kind::Automorphism);
  Extender ex(tx, bx, ext.k() / e);
  if (ex.k() > 1 && ex.stabilizer_step(tau_row) != 1) throw InvalidArgument("tau must be invariant under A_psi");
  ExtensionWitness wt = ex.invariant_extension(tau_row, p);
  if (!wt.found()) throw ObstructionError("tau has no invariant extension to X x| A_psi");
  const ExtensionStage& xs = ex.stage(1);
  // X x| A_psi inside M x| A_psi: same blocks and complement.
  std::vector<Perm> gens;
  for (const auto& g : X->generators()) gens.push_back(st.sp.embed(g));
  gens.push_back(st.sp.complement);
  Group XA = FiniteGroup::make(st.sp.group->degree(), gens, X->name() + ":A");
  if (XA->order() != xs.sp.group->order()) throw TableInconsistency("X x| A_psi has the wrong order");
  // Transport tau_hat from the abstract X x| A_psi to the subgroup XA through matching generators.
  std::vector<Perm> im;
  for (const auto& g : X->generators()) im.push_back(st.sp.embed(g));
  im.push_back(st.sp.complement);
  GroupMap iso = GroupMap::from_images(xs.sp.group, XA, im, GroupMap::Kind::Homomorphism);
  ClassFusion f1 = class_fusion(iso);
  Table txa = dixon_schneider(XA);
  ClassFunction that_abs = xs.table->rows[static_cast<std::size_t>(wt.witness_row)];
  ClassFunction that(std::vector<Cyclotomic>(static_cast<std::size_t>(txa->num_classes())));
  for (std::size_t c = 0; c < f1.size(); ++c) that[static_cast<std::size_t>(f1[c])] = that_abs[c];
  ClassFunction big = induce(txa->classes, st.table->classes, class_fusion(XA, st.sp.group), that);
  int found = -1;
  for (std::size_t r = 0; r < st.table->rows.size(); ++r) {
    if (restrict(st.fusion, st.table->rows[r]) != tm.rows[static_cast<std::size_t>(psi_row)]) continue;
    Cyclotomic mult = inner_product(*st.table, big, st.table->rows[r]);
    if (mult.is_zero()) continue;
    if (mult != Cyclotomic(1) || found >= 0) throw InvalidArgument("extension does not occur with multiplicity one");
    found = static_cast<int>(r);
  }
  if (found < 0) throw TableInconsistency("no extension of psi in the induced character");
  return found;
}

}  // namespace mckn

#endif  // MCKN_EXTEND_HPP
