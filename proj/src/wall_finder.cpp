#include "wallcross/wall_finder.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <tuple>

#include "wallcross/bmt.hpp"

namespace wallcross {

bool SearchRegion::within(long bound) const {
  if (empty) return true;
  return a_min >= -bound && a_max <= bound && b_min >= -bound && b_max <= bound && c_min >= -bound && c_max <= bound;
}

namespace {

constexpr long kMagnitudeLimit = 1'000'000;

struct Setup {
  ChernCharacter v;
  Rational beta0;
  long r = 0;
  long d = 0;
  long two_s = 0;
  long delta = 0;
};

long to_long(const Rational& q, const char* what) {
  const Integer z = q.get_num();
  if (!z.fits_slong_p() || abs(z) > kMagnitudeLimit) {
    throw Error("DomainError", std::string(what) + " is too large for enumeration");
  }
  return z.get_si();
}

Setup prepare(const ChernCharacter& v, const Rational& beta0) {
  if (!is_integer(beta0)) throw Error("InvalidArgument", "beta must be an integer");
  if (!is_integral(v)) throw Error("NotIntegral", "character " + to_string(v) + " is not integral");
  if (discriminant(v) < 0) throw Error("DomainError", "character has negative discriminant");
  if (v.ch0 == 0 && v.ch1 <= 0) throw Error("DomainError", "rank zero character needs ch1 > 0");
  const ChernCharacter t = twist(v, beta0);
  if (t.ch1 <= 0) throw Error("DomainError", "ch1 twisted by beta must be positive, got " + to_string(t.ch1));
  Setup s;
  s.v = v;
  s.beta0 = beta0;
  s.r = to_long(t.ch0, "rank");
  s.d = to_long(t.ch1, "twisted ch1");
  s.two_s = to_long(Rational(2 * t.ch2), "twisted ch2");
  s.delta = to_long(discriminant(v), "discriminant");
  return s;
}

TruncatedCharacter untwisted_sub(const Setup& s, long a, long b, long c) {
  return twist(TruncatedCharacter{a, b, make_rational(c, 2)}, Rational(-s.beta0));
}

long floor_div(long p, long q) {
  long quo = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --quo;
  return quo;
}

long ceil_div(long p, long q) { return -floor_div(-p, q); }

// Integers n with lo <= n * k <= hi, for k != 0.
std::pair<long, long> multiples_range(long lo, long hi, long k) {
  if (k > 0) return {ceil_div(lo, k), floor_div(hi, k)};
  return {ceil_div(hi, k), floor_div(lo, k)};
}

// A pair that passed every truncated-level filter, in either orientation.
struct Accepted {
  TruncatedCharacter sub;
  Semicircle wall;
};

struct Slice {
  std::vector<Accepted> accepted;
  std::vector<FinderWarning> warnings;
  SearchRegion region;
};

void extend(SearchRegion& reg, long a, long b, long c) {
  if (reg.empty) {
    reg = {a, a, b, b, c, c, false};
    return;
  }
  reg.a_min = std::min(reg.a_min, a);
  reg.a_max = std::max(reg.a_max, a);
  reg.b_min = std::min(reg.b_min, b);
  reg.b_max = std::max(reg.b_max, b);
  reg.c_min = std::min(reg.c_min, c);
  reg.c_max = std::max(reg.c_max, c);
}

void merge(SearchRegion& into, const SearchRegion& from) {
  if (from.empty) return;
  extend(into, from.a_min, from.b_min, from.c_min);
  extend(into, from.a_max, from.b_max, from.c_max);
}

// Truncated-level filters in twisted integer coordinates.
std::optional<Accepted> evaluate(const Setup& s, long a, long b, long c) {
  if (b <= 0 || b >= s.d) return std::nullopt;
  const Integer bz(b), az(a), cz(c);
  const Integer delta_sub = bz * bz - az * cz;
  if (delta_sub < 0 || delta_sub > s.delta) return std::nullopt;
  const Integer bq = s.d - b;
  const Integer delta_quot = bq * bq - (s.r - az) * (s.two_s - cz);
  if (delta_quot < 0 || delta_quot > s.delta) return std::nullopt;

  // alpha^2 (b r - d a) = 2 b s - d c
  const Integer den = bz * s.r - az * s.d;
  const Integer num = bz * s.two_s - cz * s.d;
  if (den == 0) return std::nullopt;
  Rational alpha_sq(num, den);
  alpha_sq.canonicalize();
  if (alpha_sq <= 0) return std::nullopt;

  const TruncatedCharacter sub = untwisted_sub(s, a, b, c);
  const TruncatedCharacter quot = s.v.truncated() - sub;
  const WallLocus wall = numerical_wall(s.v.truncated(), sub);
  if (!is_semicircle(wall)) return std::nullopt;
  const auto hit = intersect_beta_line(wall, s.beta0);
  if (!hit || *hit != alpha_sq) return std::nullopt;
  if (!is_integral(sub) || !is_integral(quot)) return std::nullopt;
  return Accepted{sub, as_semicircle(wall)};
}

void clamp_range(long& lo, long& hi, const Setup&, long b, const FinderOptions& opts, Slice& out) {
  if (lo < -opts.a_max || hi > opts.a_max) {
    out.warnings.push_back({"a_max_cap", "rank range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                             "] at b = " + std::to_string(b) + " clamped to |a| <= " +
                                             std::to_string(opts.a_max)});
    lo = std::max(lo, -opts.a_max);
    hi = std::min(hi, opts.a_max);
  }
}

Slice enumerate_slice(const Setup& s, long b, const FinderOptions& opts) {
  Slice out;
  std::set<std::pair<long, long>> keys;
  const long bq = s.d - b;
  const long b2 = b * b;
  const long bq2 = bq * bq;

  // c != 0 and 2s - c != 0: |a| and |r - a| bounded by the discriminant windows.
  const long m_sub = std::max(b2, s.delta - b2);
  const long m_quot = std::max(bq2, s.delta - bq2);
  long lo = std::max(-m_sub, s.r - m_quot);
  long hi = std::min(m_sub, s.r + m_quot);
  clamp_range(lo, hi, s, b, opts, out);
  for (long a = lo; a <= hi; ++a) {
    if (a != 0) {
      const auto [c_lo, c_hi] = multiples_range(b2 - s.delta, b2, a);
      for (long c = c_lo; c <= c_hi; ++c) keys.emplace(a, c);
    } else if (s.r != 0) {
      const auto [cq_lo, cq_hi] = multiples_range(bq2 - s.delta, bq2, s.r);
      for (long cq = cq_lo; cq <= cq_hi; ++cq) keys.emplace(0, s.two_s - cq);
    }
  }

  if (s.two_s != 0) {
    // c = 0: the quotient has twisted ch2 = s, bounding its rank.
    auto [q_lo, q_hi] = multiples_range(bq2 - s.delta, bq2, s.two_s);
    long a_lo = s.r - q_hi;
    long a_hi = s.r - q_lo;
    clamp_range(a_lo, a_hi, s, b, opts, out);
    for (long a = a_lo; a <= a_hi; ++a) keys.emplace(a, 0);

    // c = 2s: the quotient has twisted ch2 = 0, the subobject bounds itself.
    auto [s_lo, s_hi] = multiples_range(b2 - s.delta, b2, s.two_s);
    clamp_range(s_lo, s_hi, s, b, opts, out);
    for (long a = s_lo; a <= s_hi; ++a) keys.emplace(a, s.two_s);
  }

  for (const auto& [a, c] : keys) {
    extend(out.region, a, b, c);
    if (auto acc = evaluate(s, a, b, c)) out.accepted.push_back(*acc);
  }
  return out;
}

struct TwistedKey {
  Integer b, a;
  Rational c;
  auto operator<=>(const TwistedKey& o) const {
    if (auto k = cmp(b, o.b); k != 0) return k <=> 0;
    if (auto k = cmp(a, o.a); k != 0) return k <=> 0;
    return cmp(c, o.c) <=> 0;
  }
  bool operator==(const TwistedKey& o) const { return b == o.b && a == o.a && c == o.c; }
};

TwistedKey key_of(const TruncatedCharacter& x, const Rational& beta0) {
  const TruncatedCharacter t = twist(x, beta0);
  return {t.ch1.get_num(), t.ch0.get_num(), Rational(2 * t.ch2)};
}

struct WallKey {
  Rational center, radius_sq;
  bool operator<(const WallKey& o) const {
    if (radius_sq != o.radius_sq) return radius_sq > o.radius_sq;
    return center < o.center;
  }
};

bool sub_less(const CandidatePair& x, const CandidatePair& y) {
  if (x.sub.ch1 != y.sub.ch1) return x.sub.ch1 < y.sub.ch1;
  if (x.sub.ch0 != y.sub.ch0) return x.sub.ch0 < y.sub.ch0;
  return x.sub.ch2 < y.sub.ch2;
}

// Canonical orientation, BMT check, grouping by wall.
std::vector<CandidateWall> assemble(const ChernCharacter& v, const Rational& beta0, const std::vector<Accepted>& accepted,
                                    const FinderOptions& opts, std::vector<FinderWarning>* warnings) {
  std::map<WallKey, std::map<TwistedKey, CandidatePair>> grouped;
  for (const Accepted& acc : accepted) {
    TruncatedCharacter sub = acc.sub;
    TruncatedCharacter quot = v.truncated() - sub;
    const TwistedKey ks = key_of(sub, beta0);
    const TwistedKey kq = key_of(quot, beta0);
    const bool natural_is_sub = ks <= kq;
    const bool sub_ranked = sub.ch0 >= 1;
    const bool quot_ranked = quot.ch0 >= 1;
    const bool keep = sub_ranked != quot_ranked ? sub_ranked : natural_is_sub;
    if (!keep) std::swap(sub, quot);

    const WallKey wk{acc.wall.center, acc.wall.radius_sq};
    const TwistedKey canon = key_of(sub, beta0);
    auto& bucket = grouped[wk];
    if (bucket.count(canon) != 0) continue;

    CandidatePair pair;
    pair.sub = sub;
    pair.quot = quot;
    pair.roles_swapped = keep != natural_is_sub;
    pair.filters = {true, true, true, true, true, true, false};

    if (opts.bmt_filter || opts.want_ch3) {
      try {
        auto values = ch3_admissible(sub, v, acc.wall);
        if (opts.bmt_filter) {
          if (values.empty()) continue;
          pair.filters.bmt_wall = true;
        }
        if (opts.want_ch3) pair.ch3_candidates = std::move(values);
      } catch (const Error& e) {
        if (e.kind() != "UnboundedInterval") throw;
        if (warnings != nullptr) {
          warnings->push_back({"bmt_unbounded", "ch3 range unbounded for sub " + to_string(sub) + "; kept"});
        }
        if (opts.bmt_filter) pair.filters.bmt_wall = true;
      }
    }
    bucket.emplace(canon, std::move(pair));
  }

  std::vector<CandidateWall> out;
  for (auto& [wk, bucket] : grouped) {
    if (bucket.empty()) continue;
    CandidateWall cw;
    cw.wall = {wk.center, wk.radius_sq};
    for (auto& [k, p] : bucket) cw.pairs.push_back(std::move(p));
    std::sort(cw.pairs.begin(), cw.pairs.end(), sub_less);
    out.push_back(std::move(cw));
  }
  return out;
}

}  // namespace

FinderResult find_candidate_walls(const ChernCharacter& v, const Rational& beta0, const FinderOptions& opts) {
  if (opts.a_max < 1) throw Error("InvalidArgument", "a_max must be at least 1");
  const Setup s = prepare(v, beta0);

  std::vector<Slice> slices;
  if (opts.parallel && s.d > 2) {
    std::vector<std::future<Slice>> jobs;
    for (long b = 1; b < s.d; ++b) {
      jobs.push_back(std::async(std::launch::async, [&s, b, &opts] { return enumerate_slice(s, b, opts); }));
    }
    for (auto& j : jobs) slices.push_back(j.get());
  } else {
    for (long b = 1; b < s.d; ++b) slices.push_back(enumerate_slice(s, b, opts));
  }

  FinderResult result;
  std::vector<Accepted> accepted;
  for (auto& sl : slices) {
    accepted.insert(accepted.end(), sl.accepted.begin(), sl.accepted.end());
    result.warnings.insert(result.warnings.end(), sl.warnings.begin(), sl.warnings.end());
    merge(result.region, sl.region);
  }
  result.walls = assemble(v, beta0, accepted, opts, &result.warnings);
  return result;
}

std::vector<CandidateWall> brute_force_oracle(const ChernCharacter& v, const Rational& beta0, long box,
                                              const FinderOptions& opts) {
  if (!is_integer(beta0)) throw Error("InvalidArgument", "beta must be an integer");
  const TruncatedCharacter total = v.truncated();
  const Rational delta = discriminant(total);
  const Rational d = twist(total, beta0).ch1;
  std::vector<Accepted> accepted;
  for (long a = -box; a <= box; ++a) {
    for (long b = -box; b <= box; ++b) {
      if (!(0 < b && b < d)) continue;
      for (long c = -box; c <= box; ++c) {
        const Rational ds(b * b - a * c);
        if (ds < 0 || ds > delta) continue;
        const TruncatedCharacter sub = twist(TruncatedCharacter{a, b, make_rational(c, 2)}, Rational(-beta0));
        const TruncatedCharacter quot = total - sub;
        const Rational dq = discriminant(quot);
        if (dq < 0 || dq > delta) continue;
        const WallLocus wall = numerical_wall(total, sub);
        if (!intersect_beta_line(wall, beta0)) continue;
        if (!is_integral(sub) || !is_integral(quot)) continue;
        accepted.push_back({sub, as_semicircle(wall)});
      }
    }
  }
  return assemble(v, beta0, accepted, opts, nullptr);
}

}  // namespace wallcross
