// SPDX-License-Identifier: Apache-2.0
#include "adiclp/rational.hpp"

namespace adiclp {

std::string Rat::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

Rat Rat::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty input");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    i = 1;
  }
  auto digits = [&](size_t from, size_t to) -> Int {
    if (from == to) throw std::invalid_argument("Rat::parse: missing digits");
    for (size_t j = from; j < to; ++j)
      if (s[j] < '0' || s[j] > '9')
        throw std::invalid_argument("Rat::parse: bad character in \"" + std::string(s) + "\"");
    return Int(std::string(s.substr(from, to - from)), 10);
  };
  size_t slash = s.find('/', i);
  Int num, den = 1;
  if (slash == std::string_view::npos) {
    num = digits(i, s.size());
  } else {
    num = digits(i, slash);
    den = digits(slash + 1, s.size());
    if (sgn(den) == 0) throw std::invalid_argument("Rat::parse: zero denominator");
  }
  if (neg) num = -num;
  return Rat(num, den);
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int nth_prime(unsigned k) {
  if (k == 0) throw std::invalid_argument("nth_prime: 1-based index");
  Int c = 1;
  for (unsigned seen = 0; seen < k;) {
    ++c;
    if (is_prime(c)) ++seen;
  }
  return c;
}

AdicClass AdicClass::padic(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("AdicClass: p must be prime");
  return AdicClass(Kind::PAdic, p);
}

AdicClass AdicClass::bracket(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("AdicClass: p must be prime");
  return AdicClass(Kind::BracketPAdic, p);
}

AdicClass AdicClass::integers() { return AdicClass(Kind::Integers, 1); }

AdicClass AdicClass::with_oracle(const Int& p, std::function<bool(const Rat&)> member) {
  AdicClass L = padic(p);
  L.oracle_ = std::move(member);
  return L;
}

bool AdicClass::contains(const Rat& q) const {
  if (oracle_) return oracle_(q);
  Int d = q.den();
  switch (kind_) {
    case Kind::Integers:
      return d == 1;
    case Kind::PAdic:
      while (d % p_ == 0) d /= p_;
      return d == 1;
    case Kind::BracketPAdic:
      // Denominators at this scale are small; strip each prime <= p in turn.
      for (Int f = 2; f <= p_ && d > 1; ++f) {
        if (!is_prime(f)) continue;
        while (d % f == 0) d /= f;
      }
      return d == 1;
  }
  return false;
}

std::string AdicClass::str() const {
  switch (kind_) {
    case Kind::Integers:
      return "integer";
    case Kind::PAdic:
      return p_ == 2 ? "dyadic" : "padic " + p_.get_str();
    case Kind::BracketPAdic:
      return "bracket " + p_.get_str();
  }
  return "?";
}

unsigned long bit_length(const Int& n) {
  if (sgn(n) == 0) return 1;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

EncodingSize encoding_size(const Rat& q) {
  return EncodingSize{bit_length(q.num()) + bit_length(q.den())};
}

bool is_member(const Rat& q, const AdicClass& L) { return L.contains(q); }

long padic_valuation(const Rat& q, const Int& p) {
  if (q.is_zero()) throw std::domain_error("padic_valuation: undefined for 0");
  long v = 0;
  Int n = q.num(), d = q.den();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

}  // namespace adiclp
