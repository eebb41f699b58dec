#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qv {

// Exact division by zero somewhere in an evaluation: a vanishing Pochhammer
// denominator factor, a zero base raised to a negative power, and so on.
// what() names the offending factor as precisely as the caller can.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& context) : std::runtime_error(context) {}
};

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator. Equality is canonical-form equality; there is no tolerance
// anywhere in the system. Values are immutable once constructed and safe to
// share across threads.
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  ExactScalar(long num, long den);

  // Accepts "p", "-p", "p/q", "-p/q" with decimal digits; rejects anything
  // else (including q = 0). Inverse of str().
  static ExactScalar parse(const std::string& s);

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  // Decimal preview for human-facing output only; never used in comparisons.
  double approx() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);  // PoleError on zero divisor

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.v_ == y.v_; }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return x.v_ != y.v_; }
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) { return x.v_ < y.v_; }

 private:
  explicit ExactScalar(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;

  friend ExactScalar ipow(const ExactScalar& x, long e);
};

ExactScalar add(const ExactScalar& x, const ExactScalar& y);
ExactScalar mul(const ExactScalar& x, const ExactScalar& y);
ExactScalar div(const ExactScalar& x, const ExactScalar& y);

// x^e for any integer e; e < 0 requires x != 0 (PoleError otherwise).
ExactScalar ipow(const ExactScalar& x, long e);

}  // namespace qv
