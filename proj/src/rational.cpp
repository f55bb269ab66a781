#include "wallcross/rational.hpp"

#include <cctype>

namespace wallcross {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw Error("ParseError", "not a rational number: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational q;
  q.get_num() = Integer(n, 10);
  q.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (q.get_den() == 0) throw Error("ParseError", "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }
Rational abs(const Rational& q) { return ::abs(q); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Rational r;
  mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
  r.canonicalize();
  return r;
}

const Rational& ExtendedRational::value() const {
  if (!finite_) throw Error("InvalidArgument", "value() requested on +infinity");
  return value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (!a.finite_ || !b.finite_) {
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ExtendedRational& x) { return x.is_infinite() ? "+inf" : to_string(x.value()); }

// ---------------------------------------------------------------------------

Surd::Surd(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw Error("InvalidArgument", "negative radicand " + to_string(d_));
  if (b_ == 0) {
    d_ = 0;
  } else if (auto root = exact_sqrt(d_)) {
    a_ += b_ * *root;
    b_ = 0;
    d_ = 0;
  }
}

namespace {

const Rational& common_radicand(const Surd& x, const Surd& y) {
  if (x.b() == 0) return y.radicand();
  if (y.b() != 0 && x.radicand() != y.radicand()) {
    throw Error("InvalidArgument", "surd arithmetic across different radicands");
  }
  return x.radicand();
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) { return Surd(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)); }
Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  const Rational& d = common_radicand(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  const Rational& d = common_radicand(x, y);
  // Irrational sqrt(d) makes the norm vanish only for y == 0.
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  if (norm == 0) throw Error("InvalidArgument", "division by zero surd");
  const Surd conj(y.a_ / norm, -y.b_ / norm, d);
  return x * conj;
}

int Surd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d.
  const int c = cmp(a_ * a_, b_ * b_ * d_);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

std::pair<Rational, Rational> Surd::bracket(unsigned bits) const {
  if (b_ == 0) return {a_, a_};
  const Integer& p = d_.get_num();
  const Integer& q = d_.get_den();
  Integer scaled = p * q;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Integer scale = q;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational lo_root(s, scale);
  Rational hi_root(Integer(s + 1), scale);
  lo_root.canonicalize();
  hi_root.canonicalize();
  if (b_ > 0) return {a_ + b_ * lo_root, a_ + b_ * hi_root};
  return {a_ + b_ * hi_root, a_ + b_ * lo_root};
}

Integer Surd::floor() const {
  if (b_ == 0) return wallcross::floor(a_);
  Integer n = wallcross::floor(bracket().first);
  while ((*this - Surd::rational(Rational(n))).sign() < 0) --n;
  while ((*this - Surd::rational(Rational(n + 1))).sign() >= 0) ++n;
  return n;
}

Integer Surd::ceil() const {
  const Integer f = floor();
  return (*this - Surd::rational(Rational(f))).sign() == 0 ? f : Integer(f + 1);
}

std::string to_string(const Surd& x) {
  if (x.b() == 0) return to_string(x.a());
  std::string out;
  if (x.a() != 0) {
    out = to_string(x.a()) + (x.b() > 0 ? " + " : " - ");
  } else if (x.b() < 0) {
    out = "-";
  }
  const Rational mag = wallcross::abs(x.b());
  if (mag != 1) out += to_string(mag) + "*";
  return out + "sqrt(" + to_string(x.radicand()) + ")";
}

}  // namespace wallcross
