#pragma once

// Exact integer primitives shared across the library: overflow-checked
// arithmetic, small dense integer vectors/matrices, and exact fractions.
// No floating point is used anywhere.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using i64 = std::int64_t;
using IVec = std::vector<i64>;

enum class Err {
  InvalidSpec,
  NonIntegralLattice,
  DatumMismatch,
  NotDominant,
  NotSpherical,
  NotUnique,
  NotNested,
  NotAdmissible,
  NotAStratum,
  NotNonnegative,
  RouteDisagreement,
  PreconditionViolated,
  Overflow,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidSpec: return "InvalidSpec";
    case Err::NonIntegralLattice: return "NonIntegralLattice";
    case Err::DatumMismatch: return "DatumMismatch";
    case Err::NotDominant: return "NotDominant";
    case Err::NotSpherical: return "NotSpherical";
    case Err::NotUnique: return "NotUnique";
    case Err::NotNested: return "NotNested";
    case Err::NotAdmissible: return "NotAdmissible";
    case Err::NotAStratum: return "NotAStratum";
    case Err::NotNonnegative: return "NotNonnegative";
    case Err::RouteDisagreement: return "RouteDisagreement";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "integer sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer mul");
  return r;
}

// ---- vector helpers ----

inline IVec vadd(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IVec vsub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IVec vneg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
  return r;
}

inline IVec vscale(i64 c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
  return r;
}

inline i64 vdot(const IVec& a, const IVec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline bool vzero(const IVec& a) {
  for (i64 x : a)
    if (x != 0) return false;
  return true;
}

inline bool vnonneg(const IVec& a) {
  for (i64 x : a)
    if (x < 0) return false;
  return true;
}

inline bool vnonpos(const IVec& a) {
  for (i64 x : a)
    if (x > 0) return false;
  return true;
}

inline i64 vsum(const IVec& a) {
  i64 s = 0;
  for (i64 x : a) s = checked_add(s, x);
  return s;
}

// ---- dense integer matrix, row-major, column-vector convention ----

struct IMat {
  int rows = 0, cols = 0;
  IVec a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  IVec apply(const IVec& v) const {
    IVec r(rows, 0);
    for (int i = 0; i < rows; ++i) {
      i64 s = 0;
      for (int j = 0; j < cols; ++j) s = checked_add(s, checked_mul(at(i, j), v[j]));
      r[i] = s;
    }
    return r;
  }

  IMat mul(const IMat& o) const {
    IMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        i64 v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(k, j)));
      }
    return r;
  }

  IVec column(int c) const {
    IVec r(rows);
    for (int i = 0; i < rows; ++i) r[i] = at(i, c);
    return r;
  }

  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const IMat& o) const { return !(*this == o); }
};

// ---- exact fractions over i64 ----

struct Frac {
  i64 num = 0, den = 1;  // den > 0, gcd(num, den) = 1

  Frac() = default;
  Frac(i64 n) : num(n), den(1) {}
  Frac(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) fail(Err::Overflow, "zero denominator");
    if (den < 0) {
      num = checked_sub(0, num);
      den = checked_sub(0, den);
    }
    i64 g = std::gcd(std::llabs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Frac operator+(const Frac& o) const {
    return Frac(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                checked_mul(den, o.den));
  }
  Frac operator-(const Frac& o) const {
    return Frac(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                checked_mul(den, o.den));
  }
  Frac operator*(const Frac& o) const {
    return Frac(checked_mul(num, o.num), checked_mul(den, o.den));
  }
  Frac operator/(const Frac& o) const {
    if (o.num == 0) fail(Err::Overflow, "division by zero");
    return Frac(checked_mul(num, o.den), checked_mul(den, o.num));
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  bool is_nonneg() const { return num >= 0; }
};

using FracVec = std::vector<Frac>;
using FracMat = std::vector<FracVec>;

// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
// Throws InvalidSpec if the matrix is singular.
inline FracMat frac_inverse(const FracMat& m0) {
  size_t n = m0.size();
  FracMat m = m0, inv(n, FracVec(n, Frac(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Frac(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) fail(Err::InvalidSpec, "singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Frac d = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Frac f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

// FNV-1a over the raw words of an integer sequence; used for hash maps keyed
// by coordinate vectors and matrices.
inline std::uint64_t fnv1a(const IVec& v, std::uint64_t h = 1469598103934665603ULL) {
  for (i64 x : v) {
    std::uint64_t u = static_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace alcove
