#ifndef MCKN_NUMTHEORY_HPP
#define MCKN_NUMTHEORY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "mckn/errors.hpp"

namespace mckn::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Non-negative residue of a (possibly negative) integer.
inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline long invmod(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1) {
    long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InvalidArgument("invmod: argument not invertible");
  return mod(x, m);
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization as an ordered map prime -> multiplicity.
inline std::map<u64, int> factorize(u64 n) {
  std::map<u64, int> out;
  detail::factor_into(n, out);
  return out;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (auto [p, e] : factorize(static_cast<u64>(n))) ps.push_back(static_cast<long>(p));
  return ps;
}

/// Largest power of p dividing n.
inline long p_part(long n, long p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline long euler_phi(long n) {
  long r = n;
  for (long p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
inline long multiplicative_order(long a, long m) {
  if (m == 1) return 1;
  long x = mod(a, m), k = 1;
  while (x != 1) {
    x = static_cast<long>(static_cast<__int128>(x) * mod(a, m) % m);
    ++k;
  }
  return k;
}

/// Smallest primitive root modulo a prime p.
inline u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

/// Integer square root (floor).
inline u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace mckn::nt

#endif  // MCKN_NUMTHEORY_HPP
