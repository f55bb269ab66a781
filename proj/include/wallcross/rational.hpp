#pragma once

// Exact arithmetic primitives shared by every module: arbitrary precision
// rationals (GMP), the extended value "rational or +infinity", and numbers of
// the form a + b*sqrt(d) over a fixed rational radicand.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wallcross {

using Rational = mpq_class;
using Integer = mpz_class;

/// Error raised by every public operation. `kind` is a stable identifier
/// (e.g. "NotIntegral") that the CLI prints on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (surrounding blanks allowed). Result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);
Rational abs(const Rational& q);

/// Exact rational square root when `q` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// A value that is either a finite rational or +infinity. Ordered with
/// +infinity as the maximum; two infinities compare equal.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : finite_(true), value_(std::move(value)) {}  // NOLINT
  static ExtendedRational infinity() {
    ExtendedRational r;
    r.finite_ = false;
    return r;
  }

  bool is_infinite() const noexcept { return !finite_; }
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

 private:
  bool finite_ = true;
  Rational value_;
};

std::string to_string(const ExtendedRational& x);

/// a + b*sqrt(d) with d >= 0 rational. All arithmetic between two surds
/// requires the same radicand. Signs and floors are decided exactly.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a, Rational b, Rational d);
  static Surd rational(Rational a) { return Surd(std::move(a), 0, 0); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& radicand() const noexcept { return d_; }

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  /// Lower and upper rational bounds within 2^-bits of the true value.
  std::pair<Rational, Rational> bracket(unsigned bits = 64) const;

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  friend int compare(const Surd& x, const Surd& y) { return (x - y).sign(); }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;
};

std::string to_string(const Surd& x);

}  // namespace wallcross
