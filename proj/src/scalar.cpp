#include "arr4/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace arr4 {

std::string_view to_string(Field field) {
  return field == Field::rational ? "rational" : "quadratic-tau";
}

int Scalar::sign() const {
  // a + b*tau = (u + v*sqrt 5) / 2 with u = 2a + b, v = b.
  if (sgn(b_) == 0) return sgn(a_);
  Rational u = 2 * a_ + b_;
  int su = sgn(u);
  int sv = sgn(b_);
  if (su >= 0 && sv >= 0) return 1;  // not both zero: b != 0
  if (su <= 0 && sv <= 0) return -1;
  // Opposite signs: the term with the larger square wins. u^2 = 5 v^2 is
  // impossible for v != 0 since sqrt 5 is irrational.
  Rational lhs = u * u;
  Rational rhs = 5 * b_ * b_;
  return lhs > rhs ? su : sv;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (sgn(b_) == 0) return Scalar(Rational(1) / a_);
  Rational n = norm();
  return Scalar((a_ + b_) / n, -b_ / n);
}

Scalar& Scalar::operator+=(const Scalar& y) {
  a_ += y.a_;
  if (sgn(y.b_) != 0) b_ += y.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  a_ -= y.a_;
  if (sgn(y.b_) != 0) b_ -= y.b_;
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (sgn(x.b_) == 0 && sgn(y.b_) == 0) return Scalar(Rational(x.a_ * y.a_));
  // (a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t
  Rational bd = x.b_ * y.b_;
  return Scalar(Rational(x.a_ * y.a_ + bd), Rational(x.a_ * y.b_ + x.b_ * y.a_ + bd));
}

Scalar& Scalar::operator*=(const Scalar& y) { return *this = *this * y; }
Scalar& Scalar::operator/=(const Scalar& y) { return *this = *this / y; }

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Scalar& x) {
  std::string out = x.a().get_str();
  if (x.is_rational()) return out;
  if (sgn(x.b()) > 0) {
    out += '+';
    out += x.b().get_str();
  } else {
    out += '-';
    out += Rational(-x.b()).get_str();
  }
  out += "*t";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (sgn(q) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? Integer(-p) : p, q);
  r.canonicalize();
  return r;
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text.back() != 't') return Scalar(parse_rational(text));

  std::string_view body = text.substr(0, text.size() - 1);
  if (!body.empty() && body.back() == '*') {
    body.remove_suffix(1);
    if (body.empty() || body.back() == '+' || body.back() == '-') {
      throw std::invalid_argument("missing tau coefficient in '" + std::string(text) + "'");
    }
  }
  // Split "a(+|-)b" at the last sign that is not a leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view a_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view b_text = split == std::string_view::npos ? body : body.substr(split);

  Rational b;
  if (b_text.empty() || b_text == "+") {
    b = 1;
  } else if (b_text == "-") {
    b = -1;
  } else {
    b = parse_rational(b_text);
  }
  Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
  return Scalar(std::move(a), std::move(b));
}

}  // namespace arr4
