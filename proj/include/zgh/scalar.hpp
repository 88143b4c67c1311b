#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "zgh/error.hpp"

namespace zgh {

/// Ground field: the rationals (p == 0) or a prime field GF(p).
struct Field {
  unsigned long p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

  static Field rationals() { return Field{0}; }
  static Field gf(unsigned long p);
};

/// Exact field element. Rational mode stores a canonical fraction
/// (reduced, positive denominator); GF(p) mode stores the residue in
/// [0, p) with denominator 1. Equality is syntactic.
class Scalar {
 public:
  Scalar() = default;  // 0 over Q
  Scalar(long n, const Field& f) : v_(n), p_(f.p) { reduce(); }
  Scalar(mpq_class v, const Field& f) : v_(std::move(v)), p_(f.p) {
    v_.canonicalize();
    reduce();
  }

  static Scalar zero(const Field& f) { return Scalar(0, f); }
  static Scalar one(const Field& f) { return Scalar(1, f); }
  /// Parses "n", "n/d" or "k mod p". Throws Errc::bad_scalar.
  static Scalar parse(std::string_view text, const Field& f);

  Field field() const { return Field{p_}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  /// Exact division; throws Errc::division_by_zero on zero divisor.
  friend Scalar operator/(Scalar a, const Scalar& b);
  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "n" / "n/d"; GF(p) mode prints "k mod p".
  std::string str() const;

 private:
  void reduce();
  void check_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw Error(Errc::field_mismatch, str() + " vs " + o.str());
  }

  mpq_class v_ = 0;
  unsigned long p_ = 0;
};

}  // namespace zgh
