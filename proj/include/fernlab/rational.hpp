#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace fernlab {

// Exact rational scalar, always in canonical form: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(std::int64_t n) {
    mpq_init(v_);
    set_int(n);
  }
  Rational(std::int64_t num, std::int64_t den);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  // Parses "p/q" or "p" (base 10); canonicalizes. Throws Error(Parse) on bad input.
  static Rational parse(const std::string& s);

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
  int sign() const { return mpq_sgn(v_); }

  Rational operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.v_, v_, o.v_);
    return r;
  }
  Rational operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.v_, v_, o.v_);
    return r;
  }
  Rational operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.v_, v_, o.v_);
    return r;
  }
  Rational operator/(const Rational& o) const;  // throws on division by zero
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }

  // *this -= a*b and *this += a*b, the inner-loop operations of row elimination.
  void submul(const Rational& a, const Rational& b, Rational& scratch) {
    mpq_mul(scratch.v_, a.v_, b.v_);
    mpq_sub(v_, v_, scratch.v_);
  }
  void addmul(const Rational& a, const Rational& b, Rational& scratch) {
    mpq_mul(scratch.v_, a.v_, b.v_);
    mpq_add(v_, v_, scratch.v_);
  }

  Rational inverse() const;

  bool operator==(const Rational& o) const { return mpq_equal(v_, o.v_) != 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mpq_cmp(v_, o.v_) < 0; }

  std::string str() const;  // "p/q", or "p" when the denominator is 1

 private:
  void set_int(std::int64_t n);
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fernlab
