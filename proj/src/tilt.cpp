#include "wallcross/tilt.hpp"

#include <algorithm>

namespace wallcross {

HalfPlanePoint::HalfPlanePoint(Rational beta, Rational alpha_sq) : beta_(std::move(beta)), alpha_sq_(std::move(alpha_sq)) {
  if (alpha_sq_ < 0) throw Error("InvalidArgument", "alpha^2 must be non-negative, got " + to_string(alpha_sq_));
}

namespace {

void require_interior(const HalfPlanePoint& p) {
  if (p.is_boundary()) throw Error("InvalidArgument", "point lies on the boundary alpha = 0");
}

}  // namespace

ExtendedRational tilt_slope(const TruncatedCharacter& v, const HalfPlanePoint& p) {
  require_interior(p);
  const TruncatedCharacter t = twist(v, p.beta());
  if (t.ch1 == 0) return ExtendedRational::infinity();
  return Rational(-(p.alpha_sq() * t.ch0 / 2 - t.ch2) / t.ch1);
}

ExtendedRational tilt_slope(const ChernCharacter& v, const HalfPlanePoint& p) { return tilt_slope(v.truncated(), p); }

WallLocus numerical_wall(const TruncatedCharacter& v, const TruncatedCharacter& w) {
  // K1 (alpha^2 + beta^2) / 2 + K2 beta + K3 = 0
  const Rational k1 = v.ch0 * w.ch1 - w.ch0 * v.ch1;
  const Rational k2 = w.ch0 * v.ch2 - v.ch0 * w.ch2;
  const Rational k3 = v.ch1 * w.ch2 - w.ch1 * v.ch2;
  if (k1 != 0) {
    const Rational center = -k2 / k1;
    const Rational radius_sq = center * center - 2 * k3 / k1;
    if (radius_sq <= 0) return EmptyWall{};
    return Semicircle{center, radius_sq};
  }
  if (k2 != 0) return VerticalWall{Rational(-k3 / k2)};
  if (k3 != 0) return EmptyWall{};
  return EverywhereWall{};
}

WallLocus numerical_wall(const ChernCharacter& v, const ChernCharacter& w) {
  return numerical_wall(v.truncated(), w.truncated());
}

Hyperbola hyperbola_of(const TruncatedCharacter& v) {
  if (v.ch0 != 0) return HyperbolaBranch{v.ch0, v.ch1, v.ch2};
  if (v.ch1 != 0) return HyperbolaVertical{Rational(v.ch2 / v.ch1)};
  throw Error("InvalidArgument", "tilt slope is identically +infinity when ch0 = ch1 = 0");
}

Hyperbola hyperbola_of(const ChernCharacter& v) { return hyperbola_of(v.truncated()); }

Rational hyperbola_residual(const Hyperbola& h, const HalfPlanePoint& p) {
  if (const auto* b = std::get_if<HyperbolaBranch>(&h)) {
    const Rational& beta = p.beta();
    return b->ch2 - beta * b->ch1 + (beta * beta - p.alpha_sq()) * b->ch0 / 2;
  }
  return p.beta() - std::get<HyperbolaVertical>(h).beta;
}

bool on_hyperbola(const Hyperbola& h, const HalfPlanePoint& p) { return hyperbola_residual(h, p) == 0; }

bool is_semicircle(const WallLocus& w) { return std::holds_alternative<Semicircle>(w); }

const Semicircle& as_semicircle(const WallLocus& w) {
  if (const auto* s = std::get_if<Semicircle>(&w)) return *s;
  throw Error("InvalidArgument", "operation requires a semicircular wall");
}

HalfPlanePoint apex(const WallLocus& w) {
  const Semicircle& s = as_semicircle(w);
  return {s.center, s.radius_sq};
}

WallPosition wall_interior(const WallLocus& w, const HalfPlanePoint& p) {
  return std::visit(
      [&](const auto& wall) -> WallPosition {
        using T = std::decay_t<decltype(wall)>;
        if constexpr (std::is_same_v<T, Semicircle>) {
          const Rational d = p.beta() - wall.center;
          const int c = cmp(d * d + p.alpha_sq(), wall.radius_sq);
          return c < 0 ? WallPosition::inside : (c == 0 ? WallPosition::on : WallPosition::outside);
        } else if constexpr (std::is_same_v<T, VerticalWall>) {
          const int c = cmp(p.beta(), wall.beta);
          return c < 0 ? WallPosition::inside : (c == 0 ? WallPosition::on : WallPosition::outside);
        } else if constexpr (std::is_same_v<T, EverywhereWall>) {
          return WallPosition::on;
        } else {
          return WallPosition::outside;
        }
      },
      w);
}

bool wall_contains(const WallLocus& w, const HalfPlanePoint& p) { return wall_interior(w, p) == WallPosition::on; }

std::optional<Rational> intersect_beta_line(const WallLocus& w, const Rational& beta0) {
  const auto* s = std::get_if<Semicircle>(&w);
  if (s == nullptr) return std::nullopt;
  const Rational d = beta0 - s->center;
  Rational alpha_sq = s->radius_sq - d * d;
  if (alpha_sq <= 0) return std::nullopt;
  return alpha_sq;
}

std::vector<Semicircle> order_walls(const std::vector<WallLocus>& walls, WallSide side, const Rational& vertical_beta) {
  std::vector<Semicircle> out;
  for (const auto& w : walls) {
    const auto* s = std::get_if<Semicircle>(&w);
    if (s == nullptr) continue;
    const bool left = s->center < vertical_beta;
    if ((side == WallSide::left) == left && s->center != vertical_beta) out.push_back(*s);
  }
  std::sort(out.begin(), out.end(), [](const Semicircle& a, const Semicircle& b) {
    if (a.radius_sq != b.radius_sq) return a.radius_sq > b.radius_sq;
    return a.center < b.center;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool nested_or_equal(const Semicircle& a, const Semicircle& b) {
  // |c_a - c_b| <= |r_a - r_b|  <=>  2 r_a r_b <= r_a^2 + r_b^2 - (c_a - c_b)^2
  const Rational dc = a.center - b.center;
  const Rational rhs = a.radius_sq + b.radius_sq - dc * dc;
  if (rhs < 0) return false;
  return 4 * a.radius_sq * b.radius_sq <= rhs * rhs;
}

std::string radius_text(const Rational& radius_sq) {
  if (auto r = exact_sqrt(radius_sq)) return to_string(*r);
  return "sqrt(" + to_string(radius_sq) + ")";
}

std::string to_string(const WallLocus& w) {
  return std::visit(
      [](const auto& wall) -> std::string {
        using T = std::decay_t<decltype(wall)>;
        if constexpr (std::is_same_v<T, Semicircle>) {
          return "W(" + to_string(wall.center) + ", " + radius_text(wall.radius_sq) + ")";
        } else if constexpr (std::is_same_v<T, VerticalWall>) {
          return "vertical(" + to_string(wall.beta) + ")";
        } else if constexpr (std::is_same_v<T, EverywhereWall>) {
          return "everywhere";
        } else {
          return "empty";
        }
      },
      w);
}

}  // namespace wallcross
