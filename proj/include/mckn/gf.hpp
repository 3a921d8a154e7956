#ifndef MCKN_GF_HPP
#define MCKN_GF_HPP

#include <map>
#include <memory>
#include <vector>

#include "mckn/errors.hpp"
#include "mckn/numtheory.hpp"
#include "mckn/perm.hpp"

/// Small finite fields, matrices over them, and transport of matrix groups
/// to permutation groups on an orbit of vectors or projective points.
namespace mckn::gf {

/// GF(p^k) with elements encoded as integers sum c_i p^i, c_i the
/// coefficients of the polynomial representative.
///
/// The modulus is the first monic degree-k polynomial, ordered by the
/// integer encoding of its lower coefficients, for which x is primitive.
class Field {
 public:
  Field(long p, int k) : p_(p), k_(k) {
    if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p)) || k < 1) throw InvalidArgument("GF(p^k) needs p prime, k >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (q_ > 4096) throw InvalidArgument("field too large");
    add_.assign(static_cast<std::size_t>(q_ * q_), 0);
    for (long a = 0; a < q_; ++a)
      for (long b = 0; b < q_; ++b) {
        long r = 0, pw = 1;
        for (long x = a, y = b; x || y; x /= p, y /= p, pw *= p) r += ((x % p + y % p) % p) * pw;
        add_[static_cast<std::size_t>(a * q_ + b)] = static_cast<int>(r);
      }
    neg_.assign(static_cast<std::size_t>(q_), 0);
    for (long a = 0; a < q_; ++a)
      for (long b = 0; b < q_; ++b)
        if (add(static_cast<int>(a), static_cast<int>(b)) == 0) neg_[static_cast<std::size_t>(a)] = static_cast<int>(b);
    for (long low = 0; low < q_; ++low) {
      if (low % p == 0 && k > 1) continue;
      if (k == 1 && low == 0) continue;
      if (try_modulus(low)) return;
    }
    throw InvalidArgument("no primitive modulus found");
  }

  long p() const { return p_; }
  int degree() const { return k_; }
  long size() const { return q_; }
  /// Lower coefficients of the modulus, encoded like an element.
  long modulus_low() const { return modulus_low_; }

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>((log_[a] + log_[b]) % (q_ - 1))];
  }
  int inv(int a) const {
    if (a == 0) throw DivisionByZero();
    return exp_[static_cast<std::size_t>((q_ - 1 - log_[a]) % (q_ - 1))];
  }
  int pow(int a, long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long l = nt::mod(static_cast<long>(log_[a]) * nt::mod(e, q_ - 1), q_ - 1);
    return exp_[static_cast<std::size_t>(l)];
  }
  /// The primitive element x.
  int generator() const { return exp_[1]; }
  int frob(int a) const { return pow(a, p_); }
  long log(int a) const { return log_[a]; }

 private:
  long p_;
  int k_;
  long q_;
  long modulus_low_ = 0;
  std::vector<int> add_, neg_, log_, exp_;

  bool try_modulus(long low) {
    // Multiplication by x on the coefficient vector, reducing x^k by -low.
    std::vector<long> red(static_cast<std::size_t>(k_));
    for (long x = low, i = 0; i < k_; ++i, x /= p_) red[static_cast<std::size_t>(i)] = (p_ - x % p_) % p_;
    auto times_x = [&](long a) {
      std::vector<long> c(static_cast<std::size_t>(k_) + 1, 0);
      for (int i = 0; i < k_; ++i, a /= p_) c[static_cast<std::size_t>(i) + 1] = a % p_;
      long top = c[static_cast<std::size_t>(k_)];
      long r = 0, pw = 1;
      for (int i = 0; i < k_; ++i, pw *= p_) r += ((c[static_cast<std::size_t>(i)] + top * red[static_cast<std::size_t>(i)]) % p_) * pw;
      return r;
    };
    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    log_.assign(static_cast<std::size_t>(q_), -1);
    long a = 1;
    for (long e = 0; e < q_ - 1; ++e) {
      if (log_[static_cast<std::size_t>(a)] != -1) return false;
      exp_[static_cast<std::size_t>(e)] = static_cast<int>(a);
      log_[static_cast<std::size_t>(a)] = static_cast<int>(e);
      a = times_x(a);
    }
    if (a != 1) return false;
    modulus_low_ = low;
    return true;
  }
};

using FieldPtr = std::shared_ptr<const Field>;
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec vec_mul(const Field& F, const Vec& v, const Mat& A) {
  Vec r(A[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = F.add(r[j], F.mul(v[i], A[i][j]));
  }
  return r;
}

inline Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  Mat r;
  for (const auto& row : A) r.push_back(vec_mul(F, row, B));
  return r;
}

inline int det(const Field& F, Mat A) {
  std::size_t n = A.size();
  int d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && A[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(A[r], A[c]);
      d = F.neg(d);
    }
    d = F.mul(d, A[c][c]);
    int iv = F.inv(A[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      int f = F.mul(A[i][c], iv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[c][j]));
    }
  }
  return d;
}

/// Entrywise x -> x^(p^e).
inline Mat frob(const Field& F, Mat A, long e = 1) {
  long ex = 1;
  for (long i = 0; i < e; ++i) ex *= F.p();
  for (auto& row : A)
    for (auto& x : row) x = F.pow(x, ex);
  return A;
}

inline Mat transpose(const Mat& A) {
  Mat t(A[0].size(), Vec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) t[j][i] = A[i][j];
  return t;
}

/// Scales v so that its first nonzero coordinate is 1.
inline Vec projective_normal(const Field& F, Vec v) {
  for (int x : v) {
    if (x == 0) continue;
    int iv = F.inv(x);
    for (auto& y : v) y = F.mul(y, iv);
    break;
  }
  return v;
}

/// An orbit of vectors (or projective points) under right multiplication by
/// matrices, with the induced permutations.
struct Transport {
  FieldPtr field;
  bool projective = false;
  std::vector<Vec> points;  // in breadth-first discovery order
  std::map<Vec, Point> index;
  std::vector<Perm> perms;

  Vec canon(const Vec& v) const { return projective ? projective_normal(*field, v) : v; }

  /// Permutation induced by a vector map that preserves the point set.
  template <class Fn>
  Perm induced(Fn&& fn) const {
    Perm p(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto it = index.find(canon(fn(points[i])));
      if (it == index.end()) throw InvalidArgument("map does not preserve the transported orbit");
      p[i] = it->second;
    }
    return p;
  }
};

inline Transport transport(const FieldPtr& F, const std::vector<Mat>& gens, const Vec& start, bool projective,
                           std::size_t max_points = 65536) {
  Transport t;
  t.field = F;
  t.projective = projective;
  Vec s = t.canon(start);
  t.points.push_back(s);
  t.index.emplace(s, 0);
  for (std::size_t q = 0; q < t.points.size(); ++q) {
    for (const auto& g : gens) {
      Vec w = t.canon(vec_mul(*F, t.points[q], g));
      if (t.index.count(w)) continue;
      if (t.points.size() >= max_points) throw InvalidArgument("orbit exceeds the permutation degree limit");
      t.index.emplace(w, static_cast<Point>(t.points.size()));
      t.points.push_back(std::move(w));
    }
  }
  for (const auto& g : gens) t.perms.push_back(t.induced([&](const Vec& v) { return vec_mul(*F, v, g); }));
  return t;
}

}  // namespace mckn::gf

#endif  // MCKN_GF_HPP
