#pragma once

#include <random>

#include "wallcross/chern.hpp"

namespace wallcross::testing {

inline Rational q(const char* text) { return parse_rational(text); }
inline ChernCharacter ch(const char* text) { return parse_character(text); }
inline TruncatedCharacter tr(const char* text) { return parse_truncated(text); }

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 40, long den_bound = 12) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  Rational out(num(rng), den(rng));
  out.canonicalize();
  return out;
}

/// A random integral character built from random integer Chern classes.
inline ChernCharacter random_integral(std::mt19937_64& rng, long bound = 6) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  const Rational r = dist(rng);
  const Rational c1 = dist(rng);
  const Rational c2 = dist(rng);
  Rational c3 = dist(rng);
  // c3 = c1 c2 mod 2 keeps chi integral
  if (!is_integer(Rational((c3 - c1 * c2) / 2))) c3 += 1;
  // ch2 = c1^2/2 - c2, ch3 = (c3 + c1^3/3 - c1 c2) / 2
  return {r, c1, c1 * c1 / 2 - c2, (c3 + c1 * c1 * c1 / 3 - c1 * c2) / 2};
}

}  // namespace wallcross::testing
