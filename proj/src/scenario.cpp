#include "wallcross/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "wallcross/bmt.hpp"
#include "wallcross/json_io.hpp"
#include "wallcross/wall_finder.hpp"

namespace wallcross {

const char* to_string(PairSide s) {
  switch (s) {
    case PairSide::left:
      return "left";
    case PairSide::right:
      return "right";
    case PairSide::both:
      return "both";
  }
  return "both";
}

const PairSpec& ScenarioConfig::pair_at(std::size_t index) const {
  for (const auto& w : walls) {
    if (index < w.pairs.size()) return w.pairs[index];
    index -= w.pairs.size();
  }
  throw Error("InvalidArgument", "pair index out of range");
}

std::size_t ScenarioConfig::pair_count() const {
  std::size_t n = 0;
  for (const auto& w : walls) n += w.pairs.size();
  return n;
}

namespace {

std::string where(const YAML::Node& node) {
  const YAML::Mark m = node.Mark();
  if (m.is_null()) return "";
  return "line " + std::to_string(m.line + 1) + ": ";
}

[[noreturn]] void fail(const char* kind, const YAML::Node& node, const std::string& msg) {
  throw Error(kind, where(node) + msg);
}

void check_keys(const YAML::Node& node, std::initializer_list<const char*> allowed, const char* context) {
  if (!node.IsMap()) fail("ParseError", node, std::string(context) + " must be a mapping");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail("ParseError", kv.first, "unknown field '" + key + "' in " + context);
  }
}

YAML::Node require(const YAML::Node& node, const char* key) {
  YAML::Node child = node[key];
  if (!child) fail("ParseError", node, std::string("missing field '") + key + "'");
  return child;
}

std::string scalar(const YAML::Node& node, const char* field) {
  if (!node.IsScalar()) fail("ParseError", node, std::string("field '") + field + "' must be a scalar");
  return node.Scalar();
}

Rational rational_field(const YAML::Node& node, const char* field) {
  try {
    return parse_rational(scalar(node, field));
  } catch (const Error& e) {
    fail("ParseError", node, std::string("field '") + field + "': " + e.what());
  }
}

long integer_field(const YAML::Node& node, const char* field) {
  const Rational q = rational_field(node, field);
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    fail("ParseError", node, std::string("field '") + field + "' must be an integer");
  }
  return q.get_num().get_si();
}

long nonnegative_field(const YAML::Node& node, const char* field) {
  const long v = integer_field(node, field);
  if (v < 0) fail("ValidationError", node, std::string("field '") + field + "' must be non-negative");
  return v;
}

ChernCharacter character_field(const YAML::Node& node, const char* field) {
  try {
    return parse_character(scalar(node, field));
  } catch (const Error& e) {
    fail("ParseError", node, std::string("field '") + field + "': " + e.what());
  }
}

Semicircle parse_wall(const YAML::Node& node) {
  check_keys(node, {"type", "center", "radius_sq"}, "wall");
  const std::string type = scalar(require(node, "type"), "type");
  if (type != "semicircle") fail("ParseError", node, "only semicircular walls are supported, got '" + type + "'");
  Semicircle w{rational_field(require(node, "center"), "center"), rational_field(require(node, "radius_sq"), "radius_sq")};
  if (w.radius_sq <= 0) fail("ValidationError", node, "radius_sq must be positive");
  return w;
}

ExtTable parse_table(const YAML::Node& node) {
  check_keys(node, {"source", "target", "dims"}, "Ext table");
  ExtTable t;
  t.source_label = scalar(require(node, "source"), "source");
  t.target_label = scalar(require(node, "target"), "target");
  const YAML::Node dims = require(node, "dims");
  if (!dims.IsSequence() || dims.size() != 4) fail("ParseError", node, "dims must list four integers");
  for (std::size_t i = 0; i < 4; ++i) t.dims[i] = nonnegative_field(dims[i], "dims");
  return t;
}

PairSpec parse_pair(const YAML::Node& node) {
  check_keys(node,
             {"sub_label", "quot_label", "sub_ch", "quot_ch", "ext1_quot_sub", "ext1_cases", "full_ext_tables", "side",
              "path_order"},
             "pair");
  PairSpec p;
  p.sub_label = scalar(require(node, "sub_label"), "sub_label");
  p.quot_label = scalar(require(node, "quot_label"), "quot_label");
  p.sub_ch = character_field(require(node, "sub_ch"), "sub_ch");
  p.quot_ch = character_field(require(node, "quot_ch"), "quot_ch");
  if (node["ext1_quot_sub"] && !node["ext1_quot_sub"].IsNull()) {
    p.ext1_quot_sub = nonnegative_field(node["ext1_quot_sub"], "ext1_quot_sub");
  }
  if (const YAML::Node cases = node["ext1_cases"]) {
    if (!cases.IsSequence()) fail("ParseError", cases, "ext1_cases must be a list");
    for (const auto& c : cases) {
      check_keys(c, {"condition", "value"}, "ext1 case");
      p.ext1_cases.push_back({scalar(require(c, "condition"), "condition"), nonnegative_field(require(c, "value"), "value")});
    }
  }
  if (const YAML::Node tables = node["full_ext_tables"]) {
    if (!tables.IsSequence()) fail("ParseError", tables, "full_ext_tables must be a list");
    for (const auto& t : tables) p.full_ext_tables.push_back(parse_table(t));
  }
  if (const YAML::Node side = node["side"]) {
    const std::string s = scalar(side, "side");
    if (s == "left") {
      p.side = PairSide::left;
    } else if (s == "right") {
      p.side = PairSide::right;
    } else if (s == "both") {
      p.side = PairSide::both;
    } else {
      fail("ParseError", side, "side must be left, right or both");
    }
  }
  if (node["path_order"] && !node["path_order"].IsNull()) {
    p.path_order = static_cast<int>(integer_field(node["path_order"], "path_order"));
  }
  return p;
}

ComponentSpec parse_component(const YAML::Node& node) {
  check_keys(node, {"name", "pair_ref", "case", "base_label", "base_dim", "expected_total_dim", "generic_description"},
             "component");
  ComponentSpec c;
  c.name = scalar(require(node, "name"), "name");
  c.pair = static_cast<std::size_t>(nonnegative_field(require(node, "pair_ref"), "pair_ref"));
  if (node["case"] && !node["case"].IsNull()) c.ext1_case = scalar(node["case"], "case");
  c.base_label = scalar(require(node, "base_label"), "base_label");
  c.base_dim = nonnegative_field(require(node, "base_dim"), "base_dim");
  if (node["expected_total_dim"] && !node["expected_total_dim"].IsNull()) {
    c.expected_total_dim = integer_field(node["expected_total_dim"], "expected_total_dim");
  }
  if (node["generic_description"]) c.generic_description = scalar(node["generic_description"], "generic_description");
  return c;
}

const ChernCharacter* labelled(const PairSpec& p, const std::string& label) {
  if (label == p.sub_label) return &p.sub_ch;
  if (label == p.quot_label) return &p.quot_ch;
  return nullptr;
}

void validate_pair(const ScenarioConfig& cfg, const Semicircle& wall, const PairSpec& p, const YAML::Node& node) {
  const std::string name = "pair <" + p.sub_label + ", " + p.quot_label + ">: ";
  if (p.sub_ch + p.quot_ch != cfg.character) {
    fail("ValidationError", node, name + "sub + quotient " + to_string(p.sub_ch + p.quot_ch) +
                                      " differs from the character " + to_string(cfg.character));
  }
  const WallLocus actual = numerical_wall(cfg.character, p.sub_ch);
  if (actual != WallLocus{wall}) {
    fail("ValidationError", node, name + "wall mismatch: recorded " + to_string(WallLocus{wall}) +
                                      " but the characters give " + to_string(actual));
  }
  for (const auto& t : p.full_ext_tables) {
    const ChernCharacter* src = labelled(p, t.source_label);
    const ChernCharacter* dst = labelled(p, t.target_label);
    if (src == nullptr || dst == nullptr) {
      fail("ValidationError", node, name + "Ext table labels must name the pair's objects");
    }
    if (!ext_table_consistent(t, *src, *dst)) {
      fail("ValidationError", node, name + "Ext table from " + t.source_label + " to " + t.target_label +
                                        " disagrees with the Euler pairing " + to_string(euler_pairing(*src, *dst)));
    }
  }
  std::set<std::string> seen;
  for (const auto& c : p.ext1_cases) {
    if (!seen.insert(c.condition).second) fail("ValidationError", node, name + "duplicate case '" + c.condition + "'");
  }
}

std::optional<long> resolve_ext1(const PairSpec& p, const std::optional<std::string>& which) {
  if (!which) return p.ext1_quot_sub;
  for (const auto& c : p.ext1_cases) {
    if (c.condition == *which) return c.value;
  }
  return std::nullopt;
}

ScenarioConfig parse_document(const YAML::Node& root) {
  check_keys(root, {"name", "character", "beta_line", "walls", "components", "report"}, "scenario");
  ScenarioConfig cfg;
  cfg.name = scalar(require(root, "name"), "name");
  cfg.character = character_field(require(root, "character"), "character");
  const YAML::Node beta_node = require(root, "beta_line");
  cfg.beta_line = rational_field(beta_node, "beta_line");
  if (!is_integer(cfg.beta_line)) fail("ValidationError", beta_node, "beta_line must be an integer");

  const Hyperbola gamma = hyperbola_of(cfg.character);
  std::set<int> orders;
  if (const YAML::Node walls = root["walls"]) {
    if (!walls.IsSequence()) fail("ParseError", walls, "walls must be a list");
    for (const auto& wn : walls) {
      check_keys(wn, {"wall", "pairs"}, "wall entry");
      WallSpec ws;
      ws.wall = parse_wall(require(wn, "wall"));
      const YAML::Node pairs = require(wn, "pairs");
      if (!pairs.IsSequence()) fail("ParseError", pairs, "pairs must be a list");
      for (const auto& pn : pairs) {
        PairSpec p = parse_pair(pn);
        validate_pair(cfg, ws.wall, p, pn);
        if (p.path_order && !orders.insert(*p.path_order).second) {
          fail("ValidationError", pn, "path_order " + std::to_string(*p.path_order) + " used twice");
        }
        ws.pairs.push_back(std::move(p));
      }
      if (!on_hyperbola(gamma, apex(ws.wall))) {
        fail("ValidationError", wn, "apex of " + to_string(WallLocus{ws.wall}) + " is not on the hyperbola");
      }
      cfg.walls.push_back(std::move(ws));
    }
  }
  if (const YAML::Node comps = root["components"]) {
    if (!comps.IsSequence()) fail("ParseError", comps, "components must be a list");
    for (const auto& cn : comps) {
      ComponentSpec c = parse_component(cn);
      if (c.pair >= cfg.pair_count()) fail("ValidationError", cn, "component '" + c.name + "' refers to a missing pair");
      if (!resolve_ext1(cfg.pair_at(c.pair), c.ext1_case)) {
        fail("ValidationError", cn, "component '" + c.name + "' has no Ext^1 value for its pair" +
                                        (c.ext1_case ? " under case '" + *c.ext1_case + "'" : std::string()));
      }
      cfg.components.push_back(std::move(c));
    }
  }
  return cfg;
}

}  // namespace

ScenarioConfig load_scenario(const std::string& document) {
  YAML::Node root;
  try {
    root = YAML::Load(document);
  } catch (const YAML::Exception& e) {
    throw Error("ParseError", "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  try {
    return parse_document(root);
  } catch (const YAML::Exception& e) {
    throw Error("ParseError", "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scenario(ss.str());
}

std::vector<ComponentDimension> component_dimensions(const ScenarioConfig& cfg) {
  std::vector<ComponentDimension> out;
  for (const auto& c : cfg.components) {
    const auto ext1 = resolve_ext1(cfg.pair_at(c.pair), c.ext1_case);
    if (!ext1) throw Error("ValidationError", "component '" + c.name + "' has no Ext^1 value");
    ComponentDimension d;
    d.name = c.name;
    d.ext1 = *ext1;
    d.base_dim = c.base_dim;
    d.expected_total_dim = c.expected_total_dim;
    d.empty = *ext1 == 0;
    if (!d.empty) {
      d.fiber_dim = *ext1 - 1;
      d.total = d.fiber_dim + c.base_dim;
    }
    d.matches_expected = !c.expected_total_dim || (!d.empty && d.total == *c.expected_total_dim);
    out.push_back(d);
  }
  return out;
}

namespace {

using json::Json;

Json config_json(const ScenarioConfig& cfg) {
  Json j;
  j["name"] = cfg.name;
  j["character"] = json::encode(cfg.character);
  j["beta_line"] = json::encode(cfg.beta_line);
  Json walls = Json::array();
  for (const auto& w : cfg.walls) {
    Json wj;
    wj["wall"] = json::encode(w.wall);
    Json pairs = Json::array();
    for (const auto& p : w.pairs) {
      Json pj;
      pj["sub_label"] = p.sub_label;
      pj["quot_label"] = p.quot_label;
      pj["sub_ch"] = json::encode(p.sub_ch);
      pj["quot_ch"] = json::encode(p.quot_ch);
      if (p.ext1_quot_sub) pj["ext1_quot_sub"] = *p.ext1_quot_sub;
      Json cases = Json::array();
      for (const auto& c : p.ext1_cases) cases.push_back(Json{{"condition", c.condition}, {"value", c.value}});
      pj["ext1_cases"] = cases;
      Json tables = Json::array();
      for (const auto& t : p.full_ext_tables) {
        tables.push_back(Json{{"source", t.source_label}, {"target", t.target_label}, {"dims", t.dims}});
      }
      pj["full_ext_tables"] = tables;
      pj["side"] = to_string(p.side);
      if (p.path_order) pj["path_order"] = *p.path_order;
      pairs.push_back(pj);
    }
    wj["pairs"] = pairs;
    walls.push_back(wj);
  }
  j["walls"] = walls;
  Json comps = Json::array();
  for (const auto& c : cfg.components) {
    Json cj;
    cj["name"] = c.name;
    cj["pair_ref"] = c.pair;
    if (c.ext1_case) cj["case"] = *c.ext1_case;
    cj["base_label"] = c.base_label;
    cj["base_dim"] = c.base_dim;
    if (c.expected_total_dim) cj["expected_total_dim"] = *c.expected_total_dim;
    cj["generic_description"] = c.generic_description;
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

struct PairRow {
  std::size_t wall_index;
  const PairSpec* pair;
};

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::vector<bool> enumerated_flags(const ScenarioConfig& cfg) {
  std::vector<bool> flags(cfg.walls.size(), false);
  if (cfg.walls.empty()) return flags;
  try {
    const FinderResult res = find_candidate_walls(cfg.character, cfg.beta_line);
    for (std::size_t i = 0; i < cfg.walls.size(); ++i) {
      for (const auto& w : res.walls) flags[i] = flags[i] || w.wall == cfg.walls[i].wall;
    }
  } catch (const Error&) {
  }
  return flags;
}

Json pair_row_json(const ScenarioConfig& cfg, const PairRow& row) {
  const PairSpec& p = *row.pair;
  Json j;
  if (p.path_order) j["path_order"] = *p.path_order;
  j["wall"] = row.wall_index + 1;
  j["sub"] = p.sub_label;
  j["quot"] = p.quot_label;
  j["sub_ch"] = json::encode(p.sub_ch);
  j["quot_ch"] = json::encode(p.quot_ch);
  j["ext1_quot_sub"] = p.ext1_quot_sub ? Json(*p.ext1_quot_sub) : Json(nullptr);
  j["chi_quot_sub"] = json::encode(euler_pairing(p.quot_ch, p.sub_ch));
  (void)cfg;
  return j;
}

std::string ext1_text(const PairSpec& p) {
  std::string s = p.ext1_quot_sub ? std::to_string(*p.ext1_quot_sub) : "-";
  for (const auto& c : p.ext1_cases) s += "; " + std::to_string(c.value) + " if " + c.condition;
  return md_escape(s);
}

}  // namespace

Report emit_report(const ScenarioConfig& cfg) {
  std::vector<PairRow> left;
  std::vector<PairRow> path;
  for (std::size_t i = 0; i < cfg.walls.size(); ++i) {
    for (const auto& p : cfg.walls[i].pairs) {
      if (p.side != PairSide::right) left.push_back({i, &p});
      if (p.path_order) path.push_back({i, &p});
    }
  }
  std::stable_sort(path.begin(), path.end(),
                   [](const PairRow& a, const PairRow& b) { return *a.pair->path_order < *b.pair->path_order; });
  const auto dims = component_dimensions(cfg);
  const auto found = enumerated_flags(cfg);

  std::ostringstream md;
  md << "# Scenario " << cfg.name << "\n\n";
  md << "Character: (" << to_string(cfg.character) << "), beta line: " << to_string(cfg.beta_line) << "\n";

  Json tilt = Json::array();
  if (!cfg.walls.empty()) {
    md << "\n## Tilt walls\n\n";
    md << "| # | wall | center | radius^2 | alpha^2 on beta line | subobjects | enumerated |\n";
    md << "|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < cfg.walls.size(); ++i) {
      const WallSpec& w = cfg.walls[i];
      const auto hit = intersect_beta_line(w.wall, cfg.beta_line);
      std::set<std::string> subs_seen;
      std::string subs;
      Json sub_list = Json::array();
      for (const auto& p : w.pairs) {
        const std::string t = to_string(p.sub_ch.truncated());
        if (!subs_seen.insert(t).second) continue;
        subs += (subs.empty() ? "" : ", ") + std::string("(") + t + ")";
        sub_list.push_back(t);
      }
      md << "| " << i + 1 << " | " << to_string(WallLocus{w.wall}) << " | " << to_string(w.wall.center) << " | "
         << to_string(w.wall.radius_sq) << " | " << (hit ? to_string(*hit) : "-") << " | " << subs << " | "
         << (found[i] ? "yes" : "no") << " |\n";
      Json tj;
      tj["index"] = i + 1;
      tj["wall"] = json::encode(w.wall);
      tj["radius"] = radius_text(w.wall.radius_sq);
      tj["alpha_sq_on_beta_line"] = hit ? json::encode(*hit) : Json(nullptr);
      tj["truncated_subs"] = sub_list;
      tj["enumerated"] = static_cast<bool>(found[i]);
      tilt.push_back(tj);
    }
  }

  auto pair_table = [&](const char* title, const std::vector<PairRow>& rows, bool ordered) {
    Json arr = Json::array();
    if (rows.empty()) return arr;
    md << "\n## " << title << "\n\n";
    md << "| " << (ordered ? "step" : "wall") << " | sub | quotient | ch(sub) | ch(quotient) | ext1(quotient, sub) | "
       << "chi(quotient, sub) |\n";
    md << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      const PairSpec& p = *r.pair;
      md << "| " << (ordered ? std::to_string(*p.path_order) : std::to_string(r.wall_index + 1)) << " | "
         << md_escape(p.sub_label) << " | " << md_escape(p.quot_label) << " | (" << to_string(p.sub_ch) << ") | ("
         << to_string(p.quot_ch) << ") | " << ext1_text(p) << " | "
         << to_string(euler_pairing(p.quot_ch, p.sub_ch)) << " |\n";
      arr.push_back(pair_row_json(cfg, r));
    }
    return arr;
  };
  const Json left_json = pair_table("Bridgeland walls left of the hyperbola", left, false);
  const Json path_json = pair_table("Bridgeland walls crossed along the path", path, true);

  Json comps = Json::array();
  bool all_match = true;
  if (!dims.empty()) {
    md << "\n## Components\n\n";
    md << "| name | ext1 | fiber | base | base dim | total | expected | ok |\n";
    md << "|---|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const auto& d = dims[i];
      const auto& spec = cfg.components[i];
      all_match = all_match && d.matches_expected;
      md << "| " << md_escape(d.name) << " | " << d.ext1 << " | "
         << (d.empty ? std::string("empty") : "P^" + std::to_string(d.fiber_dim)) << " | " << md_escape(spec.base_label)
         << " | " << d.base_dim << " | " << (d.empty ? std::string("-") : std::to_string(d.total)) << " | "
         << (d.expected_total_dim ? std::to_string(*d.expected_total_dim) : "-") << " | "
         << (d.matches_expected ? "yes" : "NO") << " |\n";
      Json cj;
      cj["name"] = d.name;
      cj["ext1"] = d.ext1;
      cj["empty"] = d.empty;
      cj["fiber_dim"] = d.empty ? Json(nullptr) : Json(d.fiber_dim);
      cj["base_label"] = spec.base_label;
      cj["base_dim"] = d.base_dim;
      cj["total"] = d.empty ? Json(nullptr) : Json(d.total);
      cj["expected_total_dim"] = d.expected_total_dim ? Json(*d.expected_total_dim) : Json(nullptr);
      cj["matches_expected"] = d.matches_expected;
      comps.push_back(cj);
    }
  }

  Json doc = config_json(cfg);
  Json report;
  report["tilt_walls"] = tilt;
  report["left_pairs"] = left_json;
  report["path_pairs"] = path_json;
  report["components"] = comps;
  report["all_components_match"] = all_match;
  doc["report"] = report;
  return {md.str(), doc.dump(2) + "\n"};
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;

std::string fixed6(double x) {
  if (std::abs(x) < 5e-7) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct ScreenMap {
  double bmin, bmax, amax;
  double x(double beta) const { return kWidth * (beta - bmin) / (bmax - bmin); }
  double y(double alpha) const { return kHeight - kHeight * alpha / amax; }
};

// Left branch of the hyperbola (or its vertical degeneration) at height alpha.
std::optional<double> hyperbola_beta(const Hyperbola& h, double alpha) {
  if (const auto* v = std::get_if<HyperbolaVertical>(&h)) return v->beta.get_d();
  const auto& b = std::get<HyperbolaBranch>(h);
  const double c0 = b.ch0.get_d();
  const double c1 = b.ch1.get_d();
  const double c2 = b.ch2.get_d();
  // c0/2 beta^2 - c1 beta + (c2 - c0 alpha^2 / 2) = 0
  const double disc = c1 * c1 - 2.0 * c0 * (c2 - c0 * alpha * alpha / 2.0);
  if (disc < 0) return std::nullopt;
  const double root = std::sqrt(disc);
  return c0 > 0 ? (c1 - root) / c0 : (c1 + root) / c0;
}

std::string polyline_points(const Hyperbola& h, const ScreenMap& map, double offset) {
  std::string pts;
  const int samples = 200;
  for (int i = 0; i <= samples; ++i) {
    const double alpha = map.amax * i / samples;
    const auto beta = hyperbola_beta(h, alpha);
    if (!beta) continue;
    if (!pts.empty()) pts += ' ';
    pts += fixed6(map.x(*beta + offset)) + "," + fixed6(map.y(alpha));
  }
  return pts;
}

bool visible(const Semicircle& s, const DiagramWindow& w) {
  // c - r > beta_max or c + r < beta_min, decided exactly
  const Rational right_gap = s.center - w.beta_max;
  const Rational left_gap = w.beta_min - s.center;
  if (right_gap > 0 && right_gap * right_gap >= s.radius_sq) return false;
  if (left_gap > 0 && left_gap * left_gap >= s.radius_sq) return false;
  return true;
}

std::string arc(const Semicircle& s, const ScreenMap& map, const char* cls) {
  const double c = s.center.get_d();
  const double r = std::sqrt(s.radius_sq.get_d());
  const double rx = kWidth * r / (map.bmax - map.bmin);
  const double ry = kHeight * r / map.amax;
  return "<path class=\"" + std::string(cls) + "\" d=\"M " + fixed6(map.x(c - r)) + " " + fixed6(map.y(0)) + " A " +
         fixed6(rx) + " " + fixed6(ry) + " 0 0 1 " + fixed6(map.x(c + r)) + " " + fixed6(map.y(0)) + "\"/>";
}

}  // namespace

std::string render_wall_diagram(const ChernCharacter& v, const DiagramWindow& window, const DiagramOverlays& overlays) {
  if (window.beta_min >= window.beta_max || window.alpha_max <= 0) {
    throw Error("InvalidArgument", "degenerate diagram window");
  }
  const ScreenMap map{window.beta_min.get_d(), window.beta_max.get_d(), window.alpha_max.get_d()};
  const Hyperbola gamma = hyperbola_of(v);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  svg << "<!-- map: x = 800*(beta - (" << to_string(window.beta_min) << "))/(" << to_string(window.beta_max - window.beta_min)
      << "), y = 500 - 500*alpha/(" << to_string(window.alpha_max) << ") -->\n";
  svg << "<defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"800\" height=\"500\"/></clipPath></defs>\n";
  svg << "<style>.axis{stroke:#000;stroke-width:1}.hyperbola{fill:none;stroke:#1f77b4;stroke-width:1.5}"
         ".wall{fill:none;stroke:#d62728;stroke-width:1.5}.bmt{fill:none;stroke:#2ca02c;stroke-width:1.5;"
         "stroke-dasharray:6,4}.path{fill:none;stroke:#9467bd;stroke-width:1}</style>\n";
  svg << "<g clip-path=\"url(#window)\">\n";
  svg << "<line class=\"axis\" x1=\"0.000000\" y1=\"" << fixed6(map.y(0)) << "\" x2=\"800.000000\" y2=\"" << fixed6(map.y(0))
      << "\"/>\n";
  svg << "<polyline class=\"hyperbola\" points=\"" << polyline_points(gamma, map, 0.0) << "\"/>\n";
  for (const auto& w : overlays.walls) {
    if (visible(w, window)) svg << arc(w, map, "wall") << "\n";
  }
  if (overlays.bmt) {
    const WallLocus locus = q_null_locus(v);
    if (const auto* s = std::get_if<Semicircle>(&locus); s != nullptr && visible(*s, window)) {
      svg << arc(*s, map, "bmt") << "\n";
    }
  }
  if (overlays.path_offset) {
    svg << "<polyline class=\"path\" points=\"" << polyline_points(gamma, map, overlays.path_offset->get_d()) << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

DiagramWindow scenario_window(const ScenarioConfig& cfg) {
  if (cfg.walls.empty()) {
    return {cfg.beta_line - 5, cfg.beta_line + 5, 5};
  }
  Rational lo, hi, top;
  bool first = true;
  for (const auto& w : cfg.walls) {
    const auto bounds = Surd(0, 1, w.wall.radius_sq).bracket(16);
    const Rational r = Rational(bounds.second);
    const Rational l = w.wall.center - r;
    const Rational h = w.wall.center + r;
    if (first || l < lo) lo = l;
    if (first || h > hi) hi = h;
    if (first || r > top) top = r;
    first = false;
  }
  return {Rational(floor(lo) - 1), Rational(ceil(hi) + 1), Rational(ceil(top) + 1)};
}

std::string render_scenario_diagram(const ScenarioConfig& cfg) {
  DiagramOverlays overlays;
  for (const auto& w : cfg.walls) overlays.walls.push_back(w.wall);
  overlays.bmt = true;
  overlays.path_offset = make_rational(1, 10);
  return render_wall_diagram(cfg.character, scenario_window(cfg), overlays);
}

}  // namespace wallcross
