#include "wallcross/bmt.hpp"

#include <array>

namespace wallcross {

const char* to_string(RestrictionSign s) {
  switch (s) {
    case RestrictionSign::nonneg_everywhere:
      return "nonneg_everywhere";
    case RestrictionSign::negative_everywhere:
      return "negative_everywhere";
    case RestrictionSign::mixed:
      return "mixed";
  }
  return "mixed";
}

BridgelandParams::BridgelandParams(Rational s) : s_(std::move(s)) {
  if (s_ <= 0) throw Error("InvalidArgument", "Bridgeland parameter s must be positive, got " + to_string(s_));
}

namespace {

// Q = quad * (alpha^2 + beta^2) + lin * beta + cst
struct QCoefficients {
  Rational quad, lin, cst;
};

QCoefficients q_coefficients(const ChernCharacter& v) {
  return {discriminant(v) / 2, 3 * v.ch0 * v.ch3 - v.ch1 * v.ch2, 2 * v.ch2 * v.ch2 - 3 * v.ch1 * v.ch3};
}

// On the wall, alpha^2 + beta^2 = (r^2 - c^2) + 2 c beta.
std::pair<Rational, Rational> restrict_affine(const QCoefficients& q, const Semicircle& w) {
  const Rational k = w.radius_sq - w.center * w.center;
  return {2 * q.quad * w.center + q.lin, q.quad * k + q.cst};
}

}  // namespace

Rational q_form(const ChernCharacter& v, const HalfPlanePoint& p) {
  const QCoefficients q = q_coefficients(v);
  const Rational& b = p.beta();
  return q.quad * (p.alpha_sq() + b * b) + q.lin * b + q.cst;
}

bool q_identically_zero(const ChernCharacter& v) {
  const QCoefficients q = q_coefficients(v);
  return q.quad == 0 && q.lin == 0 && q.cst == 0;
}

WallLocus q_null_locus(const ChernCharacter& v) {
  const QCoefficients q = q_coefficients(v);
  if (q.quad != 0) {
    const Rational center = -q.lin / (2 * q.quad);
    const Rational radius_sq = center * center - q.cst / q.quad;
    if (radius_sq <= 0) return EmptyWall{};
    return Semicircle{center, radius_sq};
  }
  if (q.lin != 0) return VerticalWall{Rational(-q.cst / q.lin)};
  return EmptyWall{};
}

BmtRestriction q_on_wall(const ChernCharacter& v, const WallLocus& wall) {
  const Semicircle& w = as_semicircle(wall);
  BmtRestriction out;
  out.wall = w;
  std::tie(out.slope, out.intercept) = restrict_affine(q_coefficients(v), w);

  if (auto r = exact_sqrt(w.radius_sq)) {
    out.beta_min = w.center - *r;
    out.beta_max = w.center + *r;
  } else {
    const auto bounds = Surd(0, 1, w.radius_sq).bracket();
    out.beta_min = w.center - bounds.second;
    out.beta_max = w.center + bounds.second;
    out.endpoints_exact = false;
  }

  // Endpoint values are f(c) -/+ |slope| r; compare via squaring.
  const Rational mid = out.value_at(w.center);
  const Surd low_end(mid, -abs(out.slope), w.radius_sq);
  const int low_sign = low_end.sign();
  if (low_sign >= 0) {
    out.sign = RestrictionSign::nonneg_everywhere;
  } else {
    const Surd high_end(mid, abs(out.slope), w.radius_sq);
    out.sign = high_end.sign() < 0 ? RestrictionSign::negative_everywhere : RestrictionSign::mixed;
  }
  return out;
}

namespace {

// A linear constraint constant + coefficient * e >= 0 over Q(sqrt(r^2)).
struct LinearConstraint {
  Surd constant;
  Surd coefficient;
};

// Constraints Q(X) >= 0 at both wall endpoints for X = (x0, x1, x2, u + t e).
void append_endpoint_constraints(const TruncatedCharacter& x, const Rational& u, const Rational& t, const Semicircle& w,
                                 std::vector<LinearConstraint>& out) {
  const Rational delta = discriminant(x);
  const Rational k = w.radius_sq - w.center * w.center;
  // slope(e) = m0 + m1 e, intercept(e) = k0 + k1 e
  const Rational m0 = delta * w.center + 3 * x.ch0 * u - x.ch1 * x.ch2;
  const Rational m1 = 3 * x.ch0 * t;
  const Rational k0 = delta * k / 2 + 2 * x.ch2 * x.ch2 - 3 * x.ch1 * u;
  const Rational k1 = -3 * x.ch1 * t;
  for (int side : {-1, 1}) {
    out.push_back({Surd(m0 * w.center + k0, side * m0, w.radius_sq), Surd(m1 * w.center + k1, side * m1, w.radius_sq)});
  }
}

std::vector<LinearConstraint> ch3_constraints(const TruncatedCharacter& sub, const ChernCharacter& total,
                                              const Semicircle& w) {
  const TruncatedCharacter quot = total.truncated() - sub;
  if (discriminant(sub) < 0 || discriminant(quot) < 0) {
    throw Error("InvalidArgument", "ch3 bounds need non-negative discriminants on both factors");
  }
  std::vector<LinearConstraint> cs;
  append_endpoint_constraints(sub, 0, 1, w, cs);
  append_endpoint_constraints(quot, total.ch3, -1, w, cs);
  return cs;
}

bool satisfies(const std::vector<LinearConstraint>& cs, const Rational& e) {
  const Surd es = Surd::rational(e);
  for (const auto& c : cs) {
    if ((c.constant + c.coefficient * es).sign() < 0) return false;
  }
  return true;
}

}  // namespace

Ch3Interval ch3_interval(const TruncatedCharacter& sub, const ChernCharacter& total, const WallLocus& wall) {
  const Semicircle& w = as_semicircle(wall);
  Ch3Interval out;
  for (const auto& c : ch3_constraints(sub, total, w)) {
    const int k = c.coefficient.sign();
    if (k == 0) {
      if (c.constant.sign() < 0) out.feasible = false;
      continue;
    }
    Surd bound = -(c.constant / c.coefficient);
    if (k > 0) {
      if (!out.lower || compare(bound, *out.lower) > 0) out.lower = bound;
    } else {
      if (!out.upper || compare(bound, *out.upper) < 0) out.upper = bound;
    }
  }
  if (out.lower && out.upper && compare(*out.lower, *out.upper) > 0) out.feasible = false;
  return out;
}

std::vector<Rational> ch3_admissible(const TruncatedCharacter& sub, const ChernCharacter& total, const WallLocus& wall) {
  const Ch3Interval range = ch3_interval(sub, total, wall);
  if (!range.feasible) return {};
  if (!range.lower || !range.upper) {
    throw Error("UnboundedInterval", "admissible ch3 range along the wall is unbounded for sub-character " + to_string(sub));
  }
  const Surd six = Surd::rational(6);
  const Integer first = (*range.lower * six).ceil();
  const Integer last = (*range.upper * six).floor();
  const TruncatedCharacter quot = total.truncated() - sub;
  const auto constraints = ch3_constraints(sub, total, as_semicircle(wall));
  std::vector<Rational> out;
  for (Integer n = first; n <= last; ++n) {
    Rational e(n, 6);
    e.canonicalize();
    if (!is_integral(ChernCharacter::extend(sub, e))) continue;
    if (!is_integral(ChernCharacter::extend(quot, Rational(total.ch3 - e)))) continue;
    if (!satisfies(constraints, e)) continue;
    out.push_back(e);
  }
  return out;
}

ExtendedRational bridgeland_slope(const ChernCharacter& v, const HalfPlanePoint& p, const BridgelandParams& params) {
  if (p.is_boundary()) throw Error("InvalidArgument", "Bridgeland slope needs alpha > 0");
  const ChernCharacter t = twist(v, p.beta());
  const Rational im = t.ch2 - p.alpha_sq() * t.ch0 / 2;
  if (im == 0) return ExtendedRational::infinity();
  const Rational re = -t.ch3 + (params.s() + Rational(1, 6)) * p.alpha_sq() * t.ch1;
  return Rational(-re / im);
}

int bridgeland_wall_sign(const ChernCharacter& v, const ChernCharacter& w, const HalfPlanePoint& p,
                         const BridgelandParams& params) {
  const auto c = bridgeland_slope(v, p, params) <=> bridgeland_slope(w, p, params);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace wallcross
