#pragma once

// JSON encodings shared by the report writer and the command line. Rationals
// are always written as strings ("p/q") so that no precision is lost.

#include <json.hpp>

#include "wallcross/bmt.hpp"
#include "wallcross/chern.hpp"
#include "wallcross/tilt.hpp"
#include "wallcross/wall_finder.hpp"

namespace wallcross::json {

using Json = nlohmann::ordered_json;

Json encode(const Rational& q);
Json encode(const ExtendedRational& q);
Json encode(const ChernCharacter& v);
Json encode(const TruncatedCharacter& v);
Json encode(const WallLocus& w);
Json encode(const Semicircle& w);
Json encode(const Hyperbola& h);
Json encode(const BmtRestriction& r);
Json encode(const FilterRecord& f);
Json encode(const CandidateWall& w);
Json encode(const FinderResult& r);

/// Inverse of encode(WallLocus); throws Error("ParseError").
WallLocus decode_wall(const Json& j);

}  // namespace wallcross::json
