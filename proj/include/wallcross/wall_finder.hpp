#pragma once

// Enumeration of candidate destabilizing sub-characters along a vertical
// line beta = beta0 with beta0 an integer. Subobjects are parametrized by
// their twisted truncated character ch^{beta0}(A) = (a, b, c/2) with a, b, c
// integers.

#include <string>
#include <vector>

#include "wallcross/chern.hpp"
#include "wallcross/tilt.hpp"

namespace wallcross {

/// Filter verdicts. A field is true when the filter was applied and passed;
/// bmt_wall is false when that filter was switched off.
struct FilterRecord {
  bool delta_sub = false;
  bool delta_quot = false;
  bool heart_bound = false;
  bool slope_solvable = false;
  bool integral_sub = false;
  bool integral_quot = false;
  bool bmt_wall = false;

  friend bool operator==(const FilterRecord&, const FilterRecord&) = default;
};

struct CandidatePair {
  TruncatedCharacter sub;
  TruncatedCharacter quot;
  std::vector<Rational> ch3_candidates;
  FilterRecord filters;
  /// The orientation met first by the enumeration was the opposite one.
  bool roles_swapped = false;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct CandidateWall {
  Semicircle wall;
  std::vector<CandidatePair> pairs;

  friend bool operator==(const CandidateWall&, const CandidateWall&) = default;
};

struct FinderOptions {
  long a_max = 64;
  bool want_ch3 = false;
  /// Drop pairs whose admissible ch3 list along the wall is empty.
  bool bmt_filter = true;
  bool parallel = false;
};

struct FinderWarning {
  std::string kind;
  std::string message;

  friend bool operator==(const FinderWarning&, const FinderWarning&) = default;
};

/// Bounding box of every (a, b, c) the enumeration visited.
struct SearchRegion {
  long a_min = 0, a_max = 0;
  long b_min = 0, b_max = 0;
  long c_min = 0, c_max = 0;
  bool empty = true;

  bool within(long bound) const;
};

struct FinderResult {
  std::vector<CandidateWall> walls;
  std::vector<FinderWarning> warnings;
  SearchRegion region;
};

FinderResult find_candidate_walls(const ChernCharacter& v, const Rational& beta0, const FinderOptions& opts = {});

/// Exhaustive search over |a|, |b|, |c| <= box applying the same predicates
/// directly. Intended for cross-checking find_candidate_walls.
std::vector<CandidateWall> brute_force_oracle(const ChernCharacter& v, const Rational& beta0, long box,
                                              const FinderOptions& opts = {});

}  // namespace wallcross
