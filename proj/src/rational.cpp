#include "boxdim/rational.hpp"

#include <cctype>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw InputError("empty integer in rational literal");
  try {
    return mpz_class(std::string(text));
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal: '" + std::string(text) + "'");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long n, unsigned long d) : value_(n, d) {
  if (d == 0) throw InputError("zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : value_(std::move(num), std::move(den)) {
  if (value_.get_den() == 0) throw InputError("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty rational literal");
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s), mpz_class(1));
  }
  if (s.find('/', slash + 1) != std::string_view::npos) {
    throw InputError("malformed rational literal: '" + std::string(s) + "'");
  }
  mpz_class num = parse_integer(trim(s.substr(0, slash)));
  mpz_class den = parse_integer(trim(s.substr(slash + 1)));
  if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

}  // namespace boxdim
