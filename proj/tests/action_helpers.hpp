#ifndef MCKN_TESTS_ACTION_HELPERS_HPP
#define MCKN_TESTS_ACTION_HELPERS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mckn/verify.hpp"

namespace mckn::test_support {

// Appends the action of A on the cosets of <s> as new points n, n+1, ...
inline void add_coset_action(const ActingGroup& A, std::size_t s, std::vector<std::vector<int>>& perms, std::size_t& n) {
  std::vector<std::size_t> sub{A.index(0, 1)};
  for (std::size_t x = A.mul(sub[0], s); x != sub[0]; x = A.mul(x, s)) sub.push_back(x);
  std::map<std::vector<std::size_t>, int> coset_id;
  std::vector<int> point_of(A.size());
  for (std::size_t g = 0; g < A.size(); ++g) {
    std::vector<std::size_t> c;
    for (std::size_t t : sub) c.push_back(A.mul(g, t));
    std::sort(c.begin(), c.end());
    auto [it, fresh] = coset_id.emplace(c, static_cast<int>(n + coset_id.size()));
    point_of[g] = it->second;
  }
  std::size_t added = coset_id.size();
  for (std::size_t x = 0; x < A.size(); ++x) {
    perms[x].resize(n + added);
    for (std::size_t g = 0; g < A.size(); ++g) perms[x][static_cast<std::size_t>(point_of[g])] = point_of[A.mul(x, g)];
  }
  n += added;
}

inline ActionOnSet random_action(const ActingGroup& A, std::mt19937& rng, std::size_t max_points) {
  ActionOnSet X{A, 0, std::vector<std::vector<int>>(A.size())};
  std::uniform_int_distribution<std::size_t> pick(0, A.size() - 1);
  for (int tries = 0; tries < 6; ++tries) {
    ActionOnSet Y = X;
    add_coset_action(A, pick(rng), Y.perms, Y.n);
    if (Y.n <= max_points) X = Y;
  }
  return X;
}

inline ActionOnSet relabel(const ActionOnSet& X, const std::vector<int>& sigma) {
  ActionOnSet Y = X;
  for (std::size_t g = 0; g < X.group.size(); ++g)
    for (std::size_t s = 0; s < X.n; ++s)
      Y.perms[g][static_cast<std::size_t>(sigma[s])] = sigma[static_cast<std::size_t>(X.perms[g][s])];
  return Y;
}

inline bool equivariant(const ActionOnSet& X, const ActionOnSet& Y, const std::vector<int>& to) {
  for (std::size_t g = 0; g < X.group.size(); ++g)
    for (std::size_t s = 0; s < X.n; ++s)
      if (to[static_cast<std::size_t>(X.apply(g, static_cast<int>(s)))] != Y.apply(g, to[s])) return false;
  return true;
}

inline bool brute_force_match(const ActionOnSet& X, const ActionOnSet& Y) {
  if (X.n != Y.n) return false;
  std::vector<int> to(X.n);
  std::iota(to.begin(), to.end(), 0);
  do {
    if (equivariant(X, Y, to)) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

}  // namespace mckn::test_support

#endif  // MCKN_TESTS_ACTION_HELPERS_HPP
