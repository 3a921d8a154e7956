#ifndef MCKN_MODP_HPP
#define MCKN_MODP_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "mckn/numtheory.hpp"

/// Dense linear algebra and polynomial arithmetic over a prime field F_p.
namespace mckn::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;
using Poly = std::vector<u64>;  // coefficients, lowest degree first; no trailing zeros

inline u64 inv(u64 a, u64 p) { return nt::powmod(a, p - 2, p); }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

/// Reduces rows of A to reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& A, u64 p) {
  std::vector<std::size_t> piv;
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && A[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(A[sel], A[r]);
    u64 iv = inv(A[r][c], p);
    for (auto& x : A[r]) x = nt::mulmod(x, iv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      u64 f = A[i][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] = sub(A[i][j], nt::mulmod(f, A[r][j], p), p);
    }
    piv.push_back(c);
    ++r;
  }
  A.resize(r);
  return piv;
}

/// Basis of {x : A x = 0}.
inline Mat nullspace(Mat A, std::size_t cols, u64 p) {
  auto piv = rref(A, p);
  std::vector<char> is_piv(cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - A[r][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Mat transpose(const Mat& A) {
  if (A.empty()) return {};
  Mat T(A[0].size(), Vec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  u64 lead = inv(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = nt::mulmod(a.back(), lead, p);
    std::size_t sh = a.size() - b.size();
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = sub(a[sh + i], nt::mulmod(c, b[i], p), p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 iv = inv(a.back(), p);
    for (auto& c : a) c = nt::mulmod(c, iv, p);
  }
  return a;
}

inline Poly powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = divmod(base, f, p).second;
  while (e) {
    if (e & 1) r = divmod(mul(r, base, p), f, p).second;
    base = divmod(mul(base, base, p), f, p).second;
    e >>= 1;
  }
  return r;
}

namespace detail {

inline void split_roots(const Poly& g, u64 p, std::vector<u64>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(nt::mulmod(p - g[0], inv(g[1], p), p));
    return;
  }
  // Equal-degree splitting with deterministic shifts a = 0, 1, 2, ...
  for (u64 a = 0;; ++a) {
    Poly h = powmod(Poly{a % p, 1}, (p - 1) / 2, g, p);
    if (h.empty()) h = {0};
    h[0] = sub(h[0], 1, p);
    trim(h);
    Poly d = gcd(g, h, p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, p, out);
      split_roots(divmod(g, d, p).first, p, out);
      return;
    }
  }
}

}  // namespace detail

/// Distinct roots in F_p (p odd), sorted ascending.
inline std::vector<u64> roots(const Poly& f, u64 p) {
  Poly xp = powmod(Poly{0, 1}, p, f, p);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = sub(xp[1], 1, p);
  trim(xp);
  Poly g = gcd(f, xp, p);
  std::vector<u64> out;
  detail::split_roots(g, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Characteristic polynomial det(xI - A) via Hessenberg reduction.
inline Poly charpoly(Mat H, u64 p) {
  std::size_t n = H.size();
  // Hessenberg form by similarity transforms (0-based indices).
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && H[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(H[i], H[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(H[r][i], H[r][m]);
    }
    u64 tinv = inv(H[m][m - 1], p);
    for (std::size_t k = m + 1; k < n; ++k) {
      u64 u = nt::mulmod(H[k][m - 1], tinv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H[k][j] = sub(H[k][j], nt::mulmod(u, H[m][j], p), p);
      for (std::size_t r = 0; r < n; ++r) H[r][m] = (H[r][m] + nt::mulmod(u, H[r][k], p)) % p;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i (prod of subdiagonal) h_{m-i,m} p_{m-i-1}, 1-based.
  std::vector<Poly> P(n + 1);
  P[0] = {1};
  auto h = [&](std::size_t r, std::size_t c) { return H[r - 1][c - 1]; };
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = mul(P[m - 1], Poly{(p - h(m, m)) % p, 1}, p);
    if (cur.empty()) cur = {0};
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = nt::mulmod(t, h(m - i + 1, m - i), p);
      u64 c = nt::mulmod(t, h(m - i, m), p);
      if (c == 0) continue;
      const Poly& q = P[m - i - 1];
      if (cur.size() < q.size()) cur.resize(q.size(), 0);
      for (std::size_t j = 0; j < q.size(); ++j) cur[j] = sub(cur[j], nt::mulmod(c, q[j], p), p);
    }
    trim(cur);
    P[m] = std::move(cur);
  }
  return P[n];
}

}  // namespace mckn::modp

#endif  // MCKN_MODP_HPP
