#include "wallcross/riemann_roch.hpp"

namespace wallcross {

namespace {

Integer binomial(long top, long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

}  // namespace

Rational chi(const ChernCharacter& v) { return v.ch3 + 2 * v.ch2 + Rational(11, 6) * v.ch1 + v.ch0; }

Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w) { return chi(mul(dual(v), w)); }

Integer bott_h(int n, long d, int i) {
  if (n < 1) throw Error("InvalidArgument", "projective space dimension must be positive");
  if (i < 0 || i > n) throw Error("InvalidArgument", "cohomological degree out of range 0.." + std::to_string(n));
  if (i == 0) return d >= 0 ? binomial(n + d, n) : Integer(0);
  if (i == n) return d <= -n - 1 ? binomial(-d - 1, n) : Integer(0);
  return 0;
}

Integer ideal_points_h0(long k, long d) {
  if (k < 1) throw Error("DomainError", "number of points must be positive");
  if (d < 2 * k - 3 || d < 0) {
    throw Error("DomainError", "formula requires d >= 2k - 3 and d >= 0 (k = " + std::to_string(k) +
                                   ", d = " + std::to_string(d) + ")");
  }
  return bott_h(2, d, 0) - k;
}

FatPointH0 fat_point_h0(long k) {
  if (k < 0) throw Error("DomainError", "degree must be non-negative");
  FatPointH0 out;
  out.simple = Integer(k) * (k + 3) / 2;
  out.fat = out.simple - 2;
  out.valid = out.fat >= 0 && k >= 1;
  return out;
}

bool ext_table_consistent(const ExtTable& t, const ChernCharacter& v, const ChernCharacter& w) {
  for (long d : t.dims) {
    if (d < 0) throw Error("ValidationError", "Ext dimensions must be non-negative");
  }
  const Rational alternating = t.dims[0] - t.dims[1] + t.dims[2] - t.dims[3];
  return alternating == euler_pairing(v, w);
}

}  // namespace wallcross
