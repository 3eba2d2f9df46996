#include "asl2/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace asl2 {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_odd_integer() const {
  if (!is_integer()) return false;
  return mpz_odd_p(re_.get_num().get_mpz_t());
}

long Scalar::to_long() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (!re_.get_num().fits_slong_p())
    throw std::domain_error("integer out of range: " + str());
  return re_.get_num().get_si();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  join_mode(o);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  join_mode(o);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  join_mode(o);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = r;
  im_ = i;
  join_mode(o);
  return *this;
}

std::string Scalar::str() const {
  auto frac = [](const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
  };
  if (mode_ == ScalarMode::Real) return frac(re_);
  mpq_class a = im_ < 0 ? mpq_class(-im_) : im_;
  return frac(re_) + (im_ < 0 ? "-" : "+") + frac(a) + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

namespace {

// Parses "[sign]digits[/digits]" starting at pos; advances pos.
mpq_class parse_fraction(const std::string& s, size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  size_t dstart = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == dstart) throw std::invalid_argument("expected digits in scalar");
  std::string num = s.substr(dstart, pos - dstart);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t estart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == estart)
      throw std::invalid_argument("expected denominator digits");
    den = s.substr(estart, pos - estart);
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar");

  size_t pos = 0;
  bool complex_mode = false;
  mpq_class re(0), im(0);

  auto parse_term = [&](bool first) {
    int sign = 1;
    if (!first) {
      if (s[pos] == '+')
        ++pos;
      else if (s[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        throw std::invalid_argument("malformed scalar: " + text);
      }
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
        throw std::invalid_argument("malformed scalar: " + text);
    }
    // bare "i" / "+i" / "-i"
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      im += sign;
      complex_mode = true;
      return;
    }
    if (first && pos < s.size() && (s[pos] == '+' || s[pos] == '-') &&
        pos + 1 < s.size() && s[pos + 1] == 'i') {
      sign = s[pos] == '-' ? -1 : 1;
      pos += 2;
      im += sign;
      complex_mode = true;
      return;
    }
    mpq_class q = parse_fraction(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      im += sign * q;
      complex_mode = true;
    } else {
      re += sign * q;
    }
  };

  parse_term(true);
  if (pos < s.size()) parse_term(false);
  if (pos != s.size()) throw std::invalid_argument("trailing input in scalar: " + text);

  if (complex_mode) return Scalar(re, im);
  return Scalar(re);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op,
                    bool allow_coerce) {
  if (a.mode() != b.mode() && !allow_coerce)
    throw std::invalid_argument("mixed Real/Complex operands without coercion");
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("unreachable");
}

long floor_half(long k) {
  return k >= 0 ? k / 2 : -((-k + 1) / 2);
}

bool is_odd_integer(const Scalar& x) { return x.is_odd_integer(); }

}  // namespace asl2
