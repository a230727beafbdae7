#include "adsvol/rational.hpp"

#include <ostream>
#include <utility>

#include "adsvol/errors.hpp"

namespace adsvol {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string &t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational: '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InputError("rational with zero denominator: '" + s + "'");
  mpq_class q(n, d);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational &Rational::operator+=(const Rational &o) {
  q_ += o.q_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  q_ -= o.q_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  q_ *= o.q_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace adsvol
