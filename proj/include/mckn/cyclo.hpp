#ifndef MCKN_CYCLO_HPP
#define MCKN_CYCLO_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mckn/errors.hpp"
#include "mckn/numtheory.hpp"

namespace mckn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of Q(zeta_n) in the Zumbroich basis.
///
/// Invariants after every public operation: n is the minimal order of a
/// cyclotomic field containing the value (never 2 mod 4), exponents are
/// strictly increasing basis exponents in [0, n), coefficients are nonzero.
/// Zero and the rationals have order 1.
class Cyclotomic {
 public:
  using Term = std::pair<long, Rational>;

  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q) {                  // NOLINT(google-explicit-constructor)
    if (q != 0) {
      terms_.emplace_back(0, q);
      terms_.back().second.canonicalize();
    }
  }

  /// zeta_n^e.
  static Cyclotomic root(long n, long e) {
    if (n < 1) throw InvalidArgument("root of unity order must be positive");
    std::map<long, Rational> m;
    m[nt::mod(e, n)] = 1;
    return normalized(n, std::move(m));
  }

  /// Canonical form of sum coeffs[e] * zeta_n^e over arbitrary exponents.
  static Cyclotomic from_terms(long n, const std::vector<Term>& terms) {
    if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
    std::map<long, Rational> m;
    for (const auto& [e, c] : terms) {
      Rational q = c;
      q.canonicalize();
      m[nt::mod(e, n)] += q;
    }
    return normalized(n, std::move(m));
  }

  long order() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return n_ == 1; }
  bool is_real() const { return conj() == *this; }

  /// Rational value; requires is_rational().
  Rational rational() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic value is not rational");
    return terms_.empty() ? Rational(0) : terms_.front().second;
  }

  bool is_integer() const { return is_rational() && rational().get_den() == 1; }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long n = std::lcm(a.n_, b.n_);
    std::map<long, Rational> m;
    long sa = n / a.n_, sb = n / b.n_;
    for (const auto& [e, c] : a.terms_) m[e * sa] += c;
    for (const auto& [e, c] : b.terms_) m[e * sb] += c;
    return normalized(n, std::move(m));
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_rational()) return b.scaled(a.rational());
    if (b.is_rational()) return a.scaled(b.rational());
    long n = std::lcm(a.n_, b.n_);
    long sa = n / a.n_, sb = n / b.n_;
    std::map<long, Rational> m;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) m[(ea * sa + eb * sb) % n] += ca * cb;
    }
    return normalized(n, std::move(m));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  Cyclotomic scaled(Rational q) const {
    q.canonicalize();
    if (q == 0) return {};
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.second *= q;
    return r;
  }

  /// Multiplicative inverse as (product of the other conjugates) / norm.
  Cyclotomic inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Cyclotomic(Rational(1) / rational());
    Cyclotomic others(1);
    for (long b = 2; b < n_; ++b) {
      if (std::gcd(b, n_) == 1) others *= galois(b);
    }
    Cyclotomic norm = *this * others;
    return others.scaled(Rational(1) / norm.rational());
  }

  /// Image under sigma_b : zeta_n -> zeta_n^b.
  Cyclotomic galois(long b) const {
    if (n_ == 1) return *this;
    long bb = nt::mod(b, n_);
    if (std::gcd(bb, n_) != 1) throw NonCoprimeExponent("galois exponent not coprime to the element order");
    if (bb == 1) return *this;
    std::map<long, Rational> m;
    for (const auto& [e, c] : terms_) m[e * bb % n_] += c;
    return normalized(n_, std::move(m));
  }

  Cyclotomic conj() const { return galois(-1); }

  std::complex<double> approx() const {
    std::complex<double> z = 0;
    for (const auto& [e, c] : terms_) {
      double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n_);
      z += c.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Total order on canonical forms: by order, then term list.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    std::size_t k = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
      if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
    }
    return a.terms_.size() < b.terms_.size();
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = abs(c);
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << n_;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  /// Canonical form of an arbitrary exponent map in Q(zeta_n).
  static Cyclotomic normalized(long n, std::map<long, Rational> m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    if (n % 4 == 2) {
      // zeta_{2k} = -zeta_k^{(k+1)/2} for odd k.
      long k = n / 2, h = (k + 1) / 2;
      std::map<long, Rational> r;
      for (auto& [e, c] : m) r[e * h % k] += (e % 2 ? -c : c);
      std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
      m = std::move(r);
      n = k;
    }
    if (n > 1) {
      for (auto [p, k] : nt::factorize(static_cast<nt::u64>(n))) reduce_prime(n, static_cast<long>(p), k, m);
    }
    shrink(n, m);
    Cyclotomic r;
    r.n_ = n;
    r.terms_.reserve(m.size());
    for (auto& [e, c] : m) r.terms_.emplace_back(e, std::move(c));
    if (r.terms_.empty()) r.n_ = 1;
    return r;
  }

 private:
  long n_ = 1;
  std::vector<Term> terms_;

  struct PrimeData {
    long np;   // p^k
    long low;  // p^(k-1)
    long cof_inv;  // (n / p^k)^(-1) mod p^k
  };

  static PrimeData prime_data(long n, long p, int k) {
    long np = 1;
    for (int i = 0; i < k; ++i) np *= p;
    long cof = n / np;
    return {np, np / p, np == 1 ? 0 : nt::invmod(cof % np, np)};
  }

  static long crt_digit(long e, const PrimeData& d) { return (e % d.np) * d.cof_inv % d.np / d.low; }

  // Rewrites every exponent whose p-digit is forbidden; the images all have
  // admissible p-digit and unchanged digits at every other prime.
  static void reduce_prime(long n, long p, int k, std::map<long, Rational>& m) {
    PrimeData d = prime_data(n, p, k);
    long step = n / p;
    std::vector<std::pair<long, Rational>> bad;
    for (const auto& [e, c] : m) {
      long dig = crt_digit(e, d);
      if ((p == 2 && dig == 1) || (p != 2 && dig == 0)) bad.emplace_back(e, c);
    }
    for (auto& [e, c] : bad) m.erase(e);
    for (auto& [e, c] : bad) {
      if (p == 2) {
        m[(e + step) % n] -= c;
      } else {
        for (long j = 1; j < p; ++j) m[(e + j * step) % n] -= c;
      }
    }
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  }

  // Lowers n to the conductor of the value; m must be in canonical basis.
  static void shrink(long& n, std::map<long, Rational>& m) {
    if (m.empty()) {
      n = 1;
      return;
    }
    bool changed = true;
    while (changed && n > 1) {
      changed = false;
      for (auto [pu, k] : nt::factorize(static_cast<nt::u64>(n))) {
        long p = static_cast<long>(pu);
        if ((p == 2 && k >= 3) || (p != 2 && k >= 2) || (p == 2 && k == 2)) {
          long q = (p == 2 && k == 2) ? 4 : p;
          bool all = true;
          for (const auto& [e, c] : m) {
            if (e % q) {
              all = false;
              break;
            }
          }
          if (!all) continue;
          std::map<long, Rational> r;
          for (auto& [e, c] : m) r.emplace(e / q, std::move(c));
          m = std::move(r);
          n /= q;
          changed = true;
          break;
        }
        // Odd p exactly dividing n: the subfield Q(zeta_{n/p}) appears as
        // full blocks {e0 + j n/p : 1 <= j < p} with constant coefficient.
        PrimeData d = prime_data(n, p, k);
        long step = n / p;
        std::map<long, Rational> r;
        bool ok = true;
        std::map<long, bool> seen;
        for (const auto& [e, c] : m) {
          long x = crt_digit(e, d);
          long e0 = nt::mod(e - x * step, n);
          if (seen.count(e0)) continue;
          seen[e0] = true;
          for (long j = 1; j < p && ok; ++j) {
            auto it = m.find((e0 + j * step) % n);
            if (it == m.end() || it->second != c) ok = false;
          }
          if (!ok) break;
          r[e0 / p] = -c;
        }
        if (!ok) continue;
        m = std::move(r);
        n /= p;
        changed = true;
        break;
      }
    }
    if (n == 1 && !m.empty()) {
      // Only exponent 0 survives at order 1.
      Rational s = 0;
      for (auto& [e, c] : m) s += c;
      m.clear();
      if (s != 0) m[0] = s;
    }
  }
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

inline Cyclotomic zeta(long n, long e = 1) { return Cyclotomic::root(n, e); }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline Cyclotomic galois_apply(const Cyclotomic& a, long b) { return a.galois(b); }

}  // namespace mckn

#endif  // MCKN_CYCLO_HPP
