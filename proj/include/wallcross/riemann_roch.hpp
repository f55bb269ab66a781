#pragma once

#include <array>
#include <string>

#include "wallcross/chern.hpp"

namespace wallcross {

/// Dimensions of Hom, Ext^1, Ext^2, Ext^3 from `source` to `target`.
struct ExtTable {
  std::array<long, 4> dims{};
  std::string source_label;
  std::string target_label;

  friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

/// Euler characteristic on P^3: ch3 + 2 ch2 + 11/6 ch1 + ch0.
Rational chi(const ChernCharacter& v);

/// chi(v, w) = chi(dual(v) * w) = sum (-1)^i dim Ext^i(v, w).
Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w);

/// h^i(P^n, O(d)).
Integer bott_h(int n, long d, int i);

/// h^0(P^2, I_Z(d)) for Z a reduced set of k points in general position,
/// valid for d >= 2k - 3 (and d >= 0).
Integer ideal_points_h0(long k, long d);

/// h^0(P^2, I_p(k)) and h^0(P^2, I_p^2(k)). `valid` is false when the second
/// value comes out negative, i.e. the formula does not apply.
struct FatPointH0 {
  Integer simple;
  Integer fat;
  bool valid = true;
};

FatPointH0 fat_point_h0(long k);

/// hom - ext1 + ext2 - ext3 == euler_pairing(v, w). Throws on negative entries.
bool ext_table_consistent(const ExtTable& t, const ChernCharacter& v, const ChernCharacter& w);

}  // namespace wallcross
