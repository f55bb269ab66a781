#include "wallcross/json_io.hpp"

namespace wallcross::json {

Json encode(const Rational& q) { return to_string(q); }

Json encode(const ExtendedRational& q) { return q.is_infinite() ? Json("+inf") : encode(q.value()); }

Json encode(const ChernCharacter& v) { return to_string(v); }

Json encode(const TruncatedCharacter& v) { return to_string(v); }

Json encode(const Semicircle& w) {
  Json j;
  j["type"] = "semicircle";
  j["center"] = encode(w.center);
  j["radius_sq"] = encode(w.radius_sq);
  return j;
}

Json encode(const WallLocus& w) {
  return std::visit(
      [](const auto& wall) -> Json {
        using T = std::decay_t<decltype(wall)>;
        if constexpr (std::is_same_v<T, Semicircle>) {
          return encode(wall);
        } else if constexpr (std::is_same_v<T, VerticalWall>) {
          Json j;
          j["type"] = "vertical";
          j["beta"] = encode(wall.beta);
          return j;
        } else if constexpr (std::is_same_v<T, EverywhereWall>) {
          return Json{{"type", "everywhere"}};
        } else {
          return Json{{"type", "empty"}};
        }
      },
      w);
}

Json encode(const Hyperbola& h) {
  if (const auto* b = std::get_if<HyperbolaBranch>(&h)) {
    Json j;
    j["type"] = "branch";
    j["ch0"] = encode(b->ch0);
    j["ch1"] = encode(b->ch1);
    j["ch2"] = encode(b->ch2);
    return j;
  }
  Json j;
  j["type"] = "vertical";
  j["beta"] = encode(std::get<HyperbolaVertical>(h).beta);
  return j;
}

Json encode(const BmtRestriction& r) {
  Json j;
  j["slope"] = encode(r.slope);
  j["intercept"] = encode(r.intercept);
  j["beta_min"] = encode(r.beta_min);
  j["beta_max"] = encode(r.beta_max);
  j["endpoints_exact"] = r.endpoints_exact;
  j["sign"] = to_string(r.sign);
  return j;
}

Json encode(const FilterRecord& f) {
  Json j;
  j["delta_sub"] = f.delta_sub;
  j["delta_quot"] = f.delta_quot;
  j["heart_bound"] = f.heart_bound;
  j["slope_solvable"] = f.slope_solvable;
  j["integral_sub"] = f.integral_sub;
  j["integral_quot"] = f.integral_quot;
  j["bmt_wall"] = f.bmt_wall;
  return j;
}

Json encode(const CandidateWall& w) {
  Json j;
  j["wall"] = encode(w.wall);
  Json pairs = Json::array();
  for (const auto& p : w.pairs) {
    Json pj;
    pj["sub"] = encode(p.sub);
    pj["quot"] = encode(p.quot);
    Json ch3 = Json::array();
    for (const auto& e : p.ch3_candidates) ch3.push_back(encode(e));
    pj["ch3_candidates"] = ch3;
    pj["filters"] = encode(p.filters);
    pj["roles_swapped"] = p.roles_swapped;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j;
}

Json encode(const FinderResult& r) {
  Json j;
  Json walls = Json::array();
  for (const auto& w : r.walls) walls.push_back(encode(w));
  j["walls"] = walls;
  Json warnings = Json::array();
  for (const auto& w : r.warnings) warnings.push_back(Json{{"kind", w.kind}, {"message", w.message}});
  j["warnings"] = warnings;
  Json region;
  if (r.region.empty) {
    region = nullptr;
  } else {
    region["a"] = {r.region.a_min, r.region.a_max};
    region["b"] = {r.region.b_min, r.region.b_max};
    region["c"] = {r.region.c_min, r.region.c_max};
  }
  j["search_region"] = region;
  return j;
}

WallLocus decode_wall(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error("ParseError", "wall must be an object with a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "semicircle") {
    return Semicircle{parse_rational(j.at("center").get<std::string>()),
                      parse_rational(j.at("radius_sq").get<std::string>())};
  }
  if (type == "vertical") return VerticalWall{parse_rational(j.at("beta").get<std::string>())};
  if (type == "everywhere") return EverywhereWall{};
  if (type == "empty") return EmptyWall{};
  throw Error("ParseError", "unknown wall type '" + type + "'");
}

}  // namespace wallcross::json
