#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace asl2 {

enum class ScalarMode { Real, Complex };

// Exact element of Q or Q(i). Fractions are kept canonical by GMP
// (positive denominators, lowest terms). Real-mode values have
// imaginary part identically zero; Complex-mode values may have a
// zero imaginary part but keep the mode tag.
class Scalar {
public:
  Scalar() : re_(0), im_(0), mode_(ScalarMode::Real) {}
  Scalar(long n) : re_(n), im_(0), mode_(ScalarMode::Real) {}
  Scalar(const mpq_class& re) : re_(re), im_(0), mode_(ScalarMode::Real) {
    re_.canonicalize();
  }
  Scalar(const mpq_class& re, const mpq_class& im)
      : re_(re), im_(im), mode_(ScalarMode::Complex) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  ScalarMode mode() const { return mode_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  // Returns the same value tagged Complex.
  Scalar complexified() const { return Scalar(re_, im_); }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real_value() const { return im_ == 0; }
  bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }
  bool is_odd_integer() const;
  // Requires is_integer() and a value that fits in long.
  long to_long() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Value equality; the mode tag is not compared.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical text form: "p", "p/q", or "re+im i" / "re-im i" with the
  // imaginary coefficient always spelled out ("0+1i" for i).
  std::string str() const;

  // Accepts "p", "p/q", "re+r/s i", "i", "-i", "2+i", with optional spaces.
  // Throws std::invalid_argument on malformed input or zero denominators.
  static Scalar parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  void join_mode(const Scalar& o) {
    if (o.mode_ == ScalarMode::Complex) mode_ = ScalarMode::Complex;
  }

  mpq_class re_, im_;
  ScalarMode mode_;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Field arithmetic entry point with explicit mode policy: mixing Real and
// Complex operands is an error unless allow_coerce is set, in which case the
// Real operand is promoted to Complex.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op,
                    bool allow_coerce = false);

// Floor of k/2, rounding toward minus infinity for all integers.
long floor_half(long k);

bool is_odd_integer(const Scalar& x);

}  // namespace asl2
