#pragma once

// Chern characters on P^3. Components are in units of H^i with H^3 = 1, so
// the cohomology ring is Q[H]/(H^4) and every class is a 4-vector.

#include <string>
#include <string_view>

#include "wallcross/rational.hpp"

namespace wallcross {

struct TruncatedCharacter {
  Rational ch0, ch1, ch2;

  friend bool operator==(const TruncatedCharacter&, const TruncatedCharacter&) = default;
};

struct ChernCharacter {
  Rational ch0, ch1, ch2, ch3;

  TruncatedCharacter truncated() const { return {ch0, ch1, ch2}; }
  static ChernCharacter extend(const TruncatedCharacter& t, Rational ch3) { return {t.ch0, t.ch1, t.ch2, std::move(ch3)}; }

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

/// Integer Chern classes C1, C2, C3 recovered from the character.
struct ChernClasses {
  Rational c1, c2, c3;
};

ChernCharacter operator+(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter operator-(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter operator-(const ChernCharacter& v);
ChernCharacter operator*(const Rational& t, const ChernCharacter& v);
TruncatedCharacter operator+(const TruncatedCharacter& v, const TruncatedCharacter& w);
TruncatedCharacter operator-(const TruncatedCharacter& v, const TruncatedCharacter& w);
TruncatedCharacter operator*(const Rational& t, const TruncatedCharacter& v);

/// ch^beta = e^{-beta H} ch.
ChernCharacter twist(const ChernCharacter& v, const Rational& beta);
TruncatedCharacter twist(const TruncatedCharacter& v, const Rational& beta);

/// Character of the derived dual: (c0, -c1, c2, -c3).
ChernCharacter dual(const ChernCharacter& v);

/// Product in the cohomology ring, truncated above degree 3.
ChernCharacter mul(const ChernCharacter& v, const ChernCharacter& w);

/// ch(O(n)) = (1, n, n^2/2, n^3/6).
ChernCharacter line_bundle(long n);
ChernCharacter line_bundle(const Integer& n);

/// ch1/ch0, or +infinity in rank zero.
ExtendedRational mu_slope(const ChernCharacter& v);
ExtendedRational mu_slope(const TruncatedCharacter& v);

/// H-discriminant ch1^2 - 2 ch0 ch2. Invariant under twisting.
Rational discriminant(const ChernCharacter& v);
Rational discriminant(const TruncatedCharacter& v);

ChernClasses chern_classes(const ChernCharacter& v);

/// True iff v is the Chern character of a class in K(P^3): rank and all
/// Chern classes are integers.
bool is_integral(const ChernCharacter& v);
/// Truncated version: rank, C1 and C2 integral. Any such class extends to an
/// integral full character.
bool is_integral(const TruncatedCharacter& v);

/// Parses "c0,c1,c2,c3" (components may be "p/q").
ChernCharacter parse_character(std::string_view text);
/// Parses "c0,c1,c2".
TruncatedCharacter parse_truncated(std::string_view text);

std::string to_string(const ChernCharacter& v);
std::string to_string(const TruncatedCharacter& v);

}  // namespace wallcross
