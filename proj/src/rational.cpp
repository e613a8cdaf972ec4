#include "fernlab/rational.hpp"

#include <ostream>

#include "fernlab/errors.hpp"

namespace fernlab {

void Rational::set_int(std::int64_t n) {
  if (n >= 0) {
    mpq_set_ui(v_, static_cast<unsigned long>(n), 1);
  } else {
    // avoid overflow at INT64_MIN
    mpq_set_ui(v_, static_cast<unsigned long>(-(n + 1)) + 1ul, 1);
    mpq_neg(v_, v_);
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  mpq_init(v_);
  if (den == 0) fail(ErrorKind::Validation, "rational with zero denominator");
  Rational n(num), d(den);
  mpq_div(v_, n.v_, d.v_);
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
  Rational r;
  if (mpq_set_str(r.v_, s.c_str(), 10) != 0)
    fail(ErrorKind::Parse, "bad rational literal '" + s + "'");
  if (mpz_sgn(mpq_denref(r.v_)) == 0)
    fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  mpq_canonicalize(r.v_);
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(ErrorKind::Validation, "division by zero");
  Rational r;
  mpq_div(r.v_, v_, o.v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::Validation, "inverse of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, v_);
  std::string out(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fernlab
