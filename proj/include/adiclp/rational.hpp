// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adiclp {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  /// Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  Int ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Renders as "num/den" in base 10, "/den" omitted when den == 1.
  std::string str() const;

  /// Parses the render grammar with an optional leading sign.
  static Rat parse(std::string_view s);

 private:
  explicit Rat(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) return Rat(1) / rat_pow(base, -e);
  Rat r(1), b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Floor of sqrt for nonnegative integers.
inline Int int_sqrt(const Int& n) {
  if (sgn(n) < 0) throw std::invalid_argument("int_sqrt: negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_prime(const Int& p);

/// k-th prime, 1-based: nth_prime(1) == 2.
Int nth_prime(unsigned k);

/// Number set the variables live in: p-adic rationals r/p^k, [p]-adic
/// rationals r/s with all prime factors of s at most p, or the integers.
class AdicClass {
 public:
  enum class Kind { PAdic, BracketPAdic, Integers };

  static AdicClass padic(const Int& p);
  static AdicClass bracket(const Int& p);
  static AdicClass integers();
  static AdicClass dyadic() { return padic(2); }
  /// Custom membership hook for sets not covered by the built-in kinds.
  /// p must still name a prime whose p-adics are contained in the set.
  static AdicClass with_oracle(const Int& p, std::function<bool(const Rat&)> member);

  Kind kind() const { return kind_; }
  const Int& p() const { return p_; }
  bool dense() const { return kind_ != Kind::Integers; }

  bool contains(const Rat& q) const;

  std::string str() const;

 private:
  AdicClass(Kind k, Int p) : kind_(k), p_(std::move(p)) {}
  Kind kind_;
  Int p_;
  std::function<bool(const Rat&)> oracle_;
};

struct EncodingSize {
  unsigned long bits = 0;
};

/// Bit length of |n|, with bitlen(0) := 1 so every scalar has positive size.
unsigned long bit_length(const Int& n);

/// size(r/s) = bitlen(|r|) + bitlen(s).
EncodingSize encoding_size(const Rat& q);

bool is_member(const Rat& q, const AdicClass& L);

/// v with q = p^v * (a/b), p dividing neither a nor b. q must be nonzero.
long padic_valuation(const Rat& q, const Int& p);

}  // namespace adiclp
