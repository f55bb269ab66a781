#pragma once

// Tilt slope and the geometry of numerical walls in the (beta, alpha^2)
// coordinates of the upper half plane. Working with alpha^2 keeps every
// predicate rational even when a wall radius is irrational.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wallcross/chern.hpp"

namespace wallcross {

/// A point (beta, alpha) of the upper half plane stored as (beta, alpha^2).
/// alpha^2 == 0 is admitted only as a boundary (closure) point.
class HalfPlanePoint {
 public:
  HalfPlanePoint(Rational beta, Rational alpha_sq);

  const Rational& beta() const noexcept { return beta_; }
  const Rational& alpha_sq() const noexcept { return alpha_sq_; }
  bool is_boundary() const noexcept { return alpha_sq_ == 0; }

  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;

 private:
  Rational beta_;
  Rational alpha_sq_;
};

struct Semicircle {
  Rational center;
  Rational radius_sq;  // > 0

  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

struct VerticalWall {
  Rational beta;
  friend bool operator==(const VerticalWall&, const VerticalWall&) = default;
};

struct EverywhereWall {
  friend bool operator==(const EverywhereWall&, const EverywhereWall&) = default;
};

struct EmptyWall {
  friend bool operator==(const EmptyWall&, const EmptyWall&) = default;
};

using WallLocus = std::variant<Semicircle, VerticalWall, EverywhereWall, EmptyWall>;

/// Locus mu_{alpha,beta}(v) = 0: ch2 - beta ch1 + (beta^2 - alpha^2) ch0 / 2 = 0.
struct HyperbolaBranch {
  Rational ch0, ch1, ch2;
  friend bool operator==(const HyperbolaBranch&, const HyperbolaBranch&) = default;
};

struct HyperbolaVertical {
  Rational beta;
  friend bool operator==(const HyperbolaVertical&, const HyperbolaVertical&) = default;
};

using Hyperbola = std::variant<HyperbolaBranch, HyperbolaVertical>;

enum class WallPosition { inside, on, outside };
enum class WallSide { left, right };

/// -(alpha^2 ch0^beta / 2 - ch2^beta) / ch1^beta, +infinity when ch1^beta = 0.
ExtendedRational tilt_slope(const TruncatedCharacter& v, const HalfPlanePoint& p);
ExtendedRational tilt_slope(const ChernCharacter& v, const HalfPlanePoint& p);

/// Locus where mu_{alpha,beta}(v) = mu_{alpha,beta}(w).
WallLocus numerical_wall(const TruncatedCharacter& v, const TruncatedCharacter& w);
WallLocus numerical_wall(const ChernCharacter& v, const ChernCharacter& w);

Hyperbola hyperbola_of(const TruncatedCharacter& v);
Hyperbola hyperbola_of(const ChernCharacter& v);

/// Signed residual of the hyperbola equation at p; zero exactly on the
/// hyperbola. For a branch this is ch2^beta - alpha^2 ch0 / 2, i.e. the
/// numerator of the tilt slope.
Rational hyperbola_residual(const Hyperbola& h, const HalfPlanePoint& p);
bool on_hyperbola(const Hyperbola& h, const HalfPlanePoint& p);

/// Top point (center, radius^2) of a semicircular wall.
HalfPlanePoint apex(const WallLocus& w);

/// Inside / on / outside. Vertical walls: "inside" is the half plane to the
/// left. Everywhere contains every point; Empty contains none.
WallPosition wall_interior(const WallLocus& w, const HalfPlanePoint& p);
bool wall_contains(const WallLocus& w, const HalfPlanePoint& p);

/// alpha^2 where the wall meets the line beta = beta0, if it does so at a
/// point with alpha > 0.
std::optional<Rational> intersect_beta_line(const WallLocus& w, const Rational& beta0);

/// Semicircles lying on the given side of the vertical wall beta = vertical_beta,
/// sorted by radius^2 descending (outermost first), duplicates removed.
std::vector<Semicircle> order_walls(const std::vector<WallLocus>& walls, WallSide side, const Rational& vertical_beta);

/// True when one closed semicircle lies inside the other (or they coincide),
/// i.e. they do not cross transversally.
bool nested_or_equal(const Semicircle& a, const Semicircle& b);

const Semicircle& as_semicircle(const WallLocus& w);
bool is_semicircle(const WallLocus& w);

/// "3/2" for rational radii, "sqrt(41/4)" otherwise.
std::string radius_text(const Rational& radius_sq);

/// W(center, radius) for semicircles, "vertical(beta)", "everywhere", "empty".
std::string to_string(const WallLocus& w);

}  // namespace wallcross
