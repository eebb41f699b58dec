#include "qv/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace qv {

ExactScalar::ExactScalar(long num, long den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

ExactScalar ExactScalar::parse(const std::string& s) {
  auto fail = [&] { throw std::invalid_argument("not a rational \"p/q\": '" + s + "'"); };
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == from) fail();
    return j;
  };
  if (i < s.size() && s[i] == '-') ++i;
  i = digits(i);
  if (i != s.size()) {
    if (s[i] != '/') fail();
    std::size_t j = digits(i + 1);
    if (j != s.size()) fail();
    if (s.compare(i + 1, std::string::npos, "0") == 0) fail();
  }
  mpq_class v(s);
  v.canonicalize();
  return ExactScalar(std::move(v));
}

std::string ExactScalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.v_ = -r.v_;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  v_ += o.v_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  v_ -= o.v_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  v_ *= o.v_;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  v_ /= o.v_;
  return *this;
}

ExactScalar add(const ExactScalar& x, const ExactScalar& y) { return x + y; }
ExactScalar mul(const ExactScalar& x, const ExactScalar& y) { return x * y; }
ExactScalar div(const ExactScalar& x, const ExactScalar& y) { return x / y; }

ExactScalar ipow(const ExactScalar& x, long e) {
  if (e == 0) return ExactScalar(1);
  if (x.is_zero()) {
    if (e < 0) throw PoleError("zero base raised to a negative power");
    return ExactScalar(0);
  }
  unsigned long k = e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  mpz_class num = x.v_.get_num(), den = x.v_.get_den();
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
  if (e < 0) std::swap(pn, pd);
  mpq_class r(pn, pd);
  r.canonicalize();  // only normalizes the sign; |pn|, |pd| are already coprime
  return ExactScalar(std::move(r));
}

}  // namespace qv
