#pragma once

// The BMT quadratic form Q_{alpha,beta}, its restriction to semicircular
// walls, admissible ch3 values along a wall, and the Bridgeland slope.

#include <optional>
#include <vector>

#include "wallcross/chern.hpp"
#include "wallcross/tilt.hpp"

namespace wallcross {

enum class RestrictionSign { nonneg_everywhere, negative_everywhere, mixed };

const char* to_string(RestrictionSign s);

/// Q restricted to a semicircle is affine in beta: slope * beta + intercept,
/// considered on the closed diameter. Endpoints are exact when the radius is
/// rational; otherwise beta_min is rounded down and beta_max rounded up.
struct BmtRestriction {
  Rational slope;
  Rational intercept;
  Semicircle wall;
  Rational beta_min;
  Rational beta_max;
  bool endpoints_exact = true;
  RestrictionSign sign = RestrictionSign::mixed;

  Rational value_at(const Rational& beta) const { return slope * beta + intercept; }
};

class BridgelandParams {
 public:
  explicit BridgelandParams(Rational s);
  const Rational& s() const noexcept { return s_; }

 private:
  Rational s_;
};

/// (alpha^2 + beta^2)/2 (C1^2 - 2 C0 C2) + beta (3 C0 C3 - C1 C2) + (2 C2^2 - 3 C1 C3)
/// with C_i = ch_i. Boundary points (alpha = 0) are accepted.
Rational q_form(const ChernCharacter& v, const HalfPlanePoint& p);

/// True when Q_{alpha,beta}(v) vanishes for every (alpha, beta).
bool q_identically_zero(const ChernCharacter& v);

/// Zero locus of Q(v). A semicircle when it is one; Empty when Q has no
/// real zero set in the half plane or vanishes identically (see
/// q_identically_zero); Vertical when the quadratic part vanishes.
WallLocus q_null_locus(const ChernCharacter& v);

BmtRestriction q_on_wall(const ChernCharacter& v, const WallLocus& wall);

/// Exact bounds of the real interval of ch3(A) = e for which both
/// Q(A(e)) >= 0 and Q(B(ch3(E) - e)) >= 0 along the closed wall, where
/// B = E - A. Missing bound means unbounded on that side.
struct Ch3Interval {
  bool feasible = true;
  std::optional<Surd> lower;
  std::optional<Surd> upper;
};

Ch3Interval ch3_interval(const TruncatedCharacter& sub, const ChernCharacter& total, const WallLocus& wall);

/// All e in (1/6)Z within ch3_interval for which A(e) and B(ch3(E) - e) are
/// both integral. Sorted ascending. Throws Error("UnboundedInterval") if the
/// interval is unbounded.
std::vector<Rational> ch3_admissible(const TruncatedCharacter& sub, const ChernCharacter& total, const WallLocus& wall);

/// lambda_{alpha,beta,s}; +infinity when Im Z = ch2^beta - alpha^2 ch0^beta / 2 vanishes.
ExtendedRational bridgeland_slope(const ChernCharacter& v, const HalfPlanePoint& p, const BridgelandParams& params);

/// Sign of lambda(v) - lambda(w) at p, with +infinity the largest value.
int bridgeland_wall_sign(const ChernCharacter& v, const ChernCharacter& w, const HalfPlanePoint& p,
                         const BridgelandParams& params);

}  // namespace wallcross
