#include "wallcross/chern.hpp"

#include <vector>

namespace wallcross {

ChernCharacter operator+(const ChernCharacter& v, const ChernCharacter& w) {
  return {v.ch0 + w.ch0, v.ch1 + w.ch1, v.ch2 + w.ch2, v.ch3 + w.ch3};
}

ChernCharacter operator-(const ChernCharacter& v, const ChernCharacter& w) {
  return {v.ch0 - w.ch0, v.ch1 - w.ch1, v.ch2 - w.ch2, v.ch3 - w.ch3};
}

ChernCharacter operator-(const ChernCharacter& v) { return {-v.ch0, -v.ch1, -v.ch2, -v.ch3}; }

ChernCharacter operator*(const Rational& t, const ChernCharacter& v) {
  return {t * v.ch0, t * v.ch1, t * v.ch2, t * v.ch3};
}

TruncatedCharacter operator+(const TruncatedCharacter& v, const TruncatedCharacter& w) {
  return {v.ch0 + w.ch0, v.ch1 + w.ch1, v.ch2 + w.ch2};
}

TruncatedCharacter operator-(const TruncatedCharacter& v, const TruncatedCharacter& w) {
  return {v.ch0 - w.ch0, v.ch1 - w.ch1, v.ch2 - w.ch2};
}

TruncatedCharacter operator*(const Rational& t, const TruncatedCharacter& v) { return {t * v.ch0, t * v.ch1, t * v.ch2}; }

ChernCharacter twist(const ChernCharacter& v, const Rational& beta) {
  const Rational b2 = beta * beta;
  const Rational b3 = b2 * beta;
  return {
      v.ch0,
      v.ch1 - beta * v.ch0,
      v.ch2 - beta * v.ch1 + b2 * v.ch0 / 2,
      v.ch3 - beta * v.ch2 + b2 * v.ch1 / 2 - b3 * v.ch0 / 6,
  };
}

TruncatedCharacter twist(const TruncatedCharacter& v, const Rational& beta) {
  return {v.ch0, v.ch1 - beta * v.ch0, v.ch2 - beta * v.ch1 + beta * beta * v.ch0 / 2};
}

ChernCharacter dual(const ChernCharacter& v) { return {v.ch0, -v.ch1, v.ch2, -v.ch3}; }

ChernCharacter mul(const ChernCharacter& v, const ChernCharacter& w) {
  return {
      v.ch0 * w.ch0,
      v.ch0 * w.ch1 + v.ch1 * w.ch0,
      v.ch0 * w.ch2 + v.ch1 * w.ch1 + v.ch2 * w.ch0,
      v.ch0 * w.ch3 + v.ch1 * w.ch2 + v.ch2 * w.ch1 + v.ch3 * w.ch0,
  };
}

ChernCharacter line_bundle(const Integer& n) {
  const Rational q(n);
  ChernCharacter v{1, q, q * q / 2, q * q * q / 6};
  return v;
}

ChernCharacter line_bundle(long n) { return line_bundle(Integer(n)); }

ExtendedRational mu_slope(const TruncatedCharacter& v) {
  if (v.ch0 == 0) return ExtendedRational::infinity();
  return Rational(v.ch1 / v.ch0);
}

ExtendedRational mu_slope(const ChernCharacter& v) { return mu_slope(v.truncated()); }

Rational discriminant(const TruncatedCharacter& v) { return v.ch1 * v.ch1 - 2 * v.ch0 * v.ch2; }
Rational discriminant(const ChernCharacter& v) { return discriminant(v.truncated()); }

ChernClasses chern_classes(const ChernCharacter& v) {
  ChernClasses c;
  c.c1 = v.ch1;
  c.c2 = v.ch1 * v.ch1 / 2 - v.ch2;
  c.c3 = 2 * v.ch3 - v.ch1 * v.ch1 * v.ch1 / 3 + v.ch1 * c.c2;
  return c;
}

bool is_integral(const TruncatedCharacter& v) {
  return is_integer(v.ch0) && is_integer(v.ch1) && is_integer(Rational(v.ch1 * v.ch1 / 2 - v.ch2));
}

bool is_integral(const ChernCharacter& v) {
  if (!is_integral(v.truncated())) return false;
  return is_integer(chern_classes(v).c3);
}

namespace {

std::vector<Rational> parse_components(std::string_view text, std::size_t expected) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw Error("ParseError", "expected " + std::to_string(expected) + " comma-separated components, got " +
                                  std::to_string(out.size()) + " in '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

ChernCharacter parse_character(std::string_view text) {
  auto c = parse_components(text, 4);
  return {c[0], c[1], c[2], c[3]};
}

TruncatedCharacter parse_truncated(std::string_view text) {
  auto c = parse_components(text, 3);
  return {c[0], c[1], c[2]};
}

std::string to_string(const ChernCharacter& v) {
  return to_string(v.ch0) + "," + to_string(v.ch1) + "," + to_string(v.ch2) + "," + to_string(v.ch3);
}

std::string to_string(const TruncatedCharacter& v) {
  return to_string(v.ch0) + "," + to_string(v.ch1) + "," + to_string(v.ch2);
}

}  // namespace wallcross
