#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "support.hpp"
#include "wallcross/json_io.hpp"
#include "wallcross/scenario.hpp"
#include "wallcross/wall_finder.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace {

const std::string kShipped = std::string(WALLCROSS_SOURCE_DIR) + "/scenarios/quintic_g2.yaml";

std::string shipped_text() {
  std::ifstream in(kShipped);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
  return s;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size())) ++n;
  return n;
}

std::string error_kind(const std::string& doc) {
  try {
    load_scenario(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

std::string error_message(const std::string& doc) {
  try {
    load_scenario(doc);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kSmall = R"(name: small
character: "1,0,-5,11"
beta_line: "-3"
walls:
  - wall: {type: semicircle, center: "-7/2", radius_sq: "9/4"}
    pairs:
      - sub_label: A
        quot_label: B
        sub_ch: "1,-2,2,-4/3"
        quot_ch: "0,2,-7,37/3"
        ext1_quot_sub: 0
components:
  - name: C
    pair_ref: 0
    base_label: X
    base_dim: 3
)";

}  // namespace

TEST_CASE("shipped scenario loads") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  CHECK(cfg.name == "quintic_g2");
  CHECK(cfg.character == ch("1,0,-5,11"));
  CHECK(cfg.beta_line == -3);
  REQUIRE(cfg.walls.size() == 3);
  CHECK(cfg.walls[0].wall == Semicircle{q("-7/2"), q("9/4")});
  CHECK(cfg.walls[1].wall == Semicircle{q("-9/2"), q("41/4")});
  CHECK(cfg.walls[2].wall == Semicircle{q("-11/2"), q("81/4")});
  CHECK(cfg.pair_count() == 12);
  CHECK(cfg.components.size() == 6);
  CHECK(cfg.pair_at(11).ext1_quot_sub == 17);
  CHECK_THROWS_AS(cfg.pair_at(12), Error);
}

TEST_CASE("component dimensions of the shipped scenario") {
  const auto dims = component_dimensions(load_scenario_file(kShipped));
  REQUIRE(dims.size() == 6);
  const long ext1[] = {12, 13, 15, 14, 15, 17};
  const long base[] = {9, 9, 7, 8, 6, 11};
  const long total[] = {20, 21, 21, 21, 20, 27};
  for (std::size_t i = 0; i < 6; ++i) {
    CAPTURE(dims[i].name);
    CHECK(dims[i].ext1 == ext1[i]);
    CHECK(dims[i].fiber_dim == ext1[i] - 1);
    CHECK(dims[i].base_dim == base[i]);
    CHECK(dims[i].total == total[i]);
    CHECK(dims[i].matches_expected);
    CHECK_FALSE(dims[i].empty);
  }
}

TEST_CASE("every stored wall has its apex on the hyperbola") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  const Hyperbola gamma = hyperbola_of(cfg.character);
  for (const auto& w : cfg.walls) CHECK(on_hyperbola(gamma, apex(w.wall)));
}

TEST_CASE("stored walls agree with the enumeration") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  const auto found = find_candidate_walls(cfg.character, cfg.beta_line);
  REQUIRE(found.walls.size() == cfg.walls.size());
  for (const auto& w : cfg.walls) {
    bool hit = false;
    for (const auto& f : found.walls) hit = hit || f.wall == w.wall;
    CHECK(hit);
  }
}

TEST_CASE("sum identity is enforced") {
  const std::string doc = replace_once(kSmall, "0,2,-7,37/3", "0,2,-7,34/3");
  CHECK(error_kind(doc) == "ValidationError");
  CHECK(error_message(doc).find("differs from the character") != std::string::npos);
  CHECK(error_message(doc).find("line ") == 0);
}

TEST_CASE("perturbed wall center is a wall mismatch") {
  const std::string doc = replace_once(shipped_text(), "center: \"-7/2\"", "center: \"-5/2\"");
  CHECK(error_kind(doc) == "ValidationError");
  CHECK(error_message(doc).find("wall mismatch") != std::string::npos);
  const std::string doc2 = replace_once(shipped_text(), "center: \"-11/2\"", "center: \"-13/2\"");
  CHECK(error_message(doc2).find("wall mismatch") != std::string::npos);
}

TEST_CASE("Ext tables must match the Euler pairing") {
  const std::string doc = replace_once(shipped_text(), "dims: [0, 12, 0, 0]", "dims: [0, 11, 0, 0]");
  CHECK(error_kind(doc) == "ValidationError");
  CHECK(error_message(doc).find("Euler pairing") != std::string::npos);
  const std::string labels = replace_once(shipped_text(), "target: \"O(-2)\"", "target: \"O(-3)\"");
  CHECK(error_message(labels).find("labels") != std::string::npos);
  const std::string negative = replace_once(shipped_text(), "dims: [0, 0, 0, 0]", "dims: [0, 0, -1, 0]");
  CHECK(error_kind(negative) == "ValidationError");
}

TEST_CASE("malformed documents are parse errors with a line") {
  CHECK(error_kind("name: [") == "ParseError");
  const std::string extra = replace_once(kSmall, "    base_dim: 3\n", "    base_dim: 3\n    colour: red\n");
  CHECK(error_kind(extra) == "ParseError");
  CHECK(error_message(extra).find("line 17") == 0);
  CHECK(error_message(extra).find("colour") != std::string::npos);
  CHECK(error_kind(replace_once(kSmall, "name: small\n", "")) == "ParseError");
  CHECK(error_kind(replace_once(kSmall, "\"9/4\"", "\"9/x\"")) == "ParseError");
  CHECK(error_kind(replace_once(kSmall, "ext1_quot_sub: 0", "ext1_quot_sub: 1/2")) == "ParseError");
  CHECK(error_kind(replace_once(kSmall, "beta_line: \"-3\"", "beta_line: \"-5/2\"")) == "ValidationError");
  CHECK(error_kind(replace_once(kSmall, "type: semicircle", "type: vertical")) == "ParseError");
  CHECK_THROWS_AS(load_scenario_file("/nonexistent/scenario.yaml"), Error);
}

TEST_CASE("component references are checked") {
  CHECK(error_kind(replace_once(kSmall, "pair_ref: 0", "pair_ref: 1")) == "ValidationError");
  const std::string doc = replace_once(kSmall, "pair_ref: 0", "pair_ref: 0\n    case: special");
  CHECK(error_message(doc).find("under case 'special'") != std::string::npos);
  CHECK(error_kind(replace_once(kSmall, "base_dim: 3", "base_dim: -3")) == "ValidationError");
}

TEST_CASE("zero Ext^1 gives an empty component") {
  const auto dims = component_dimensions(load_scenario(kSmall));
  REQUIRE(dims.size() == 1);
  CHECK(dims[0].empty);
  CHECK(dims[0].matches_expected);
  const std::string doc = replace_once(kSmall, "base_dim: 3", "base_dim: 3\n    expected_total_dim: 3");
  CHECK_FALSE(component_dimensions(load_scenario(doc))[0].matches_expected);
}

TEST_CASE("conditional Ext^1 values") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  const PairSpec& p = cfg.pair_at(5);
  CHECK(p.ext1_quot_sub == 14);
  REQUIRE(p.ext1_cases.size() == 2);
  CHECK(p.ext1_cases[0].value == 15);
  const std::string dup = replace_once(shipped_text(), "condition: \"l0 in V\"", "condition: \"l0 not in V, Z(s) = l0 meet V\"");
  CHECK(error_message(dup).find("duplicate case") != std::string::npos);
  const std::string order = replace_once(shipped_text(), "path_order: 4", "path_order: 3");
  CHECK(error_message(order).find("used twice") != std::string::npos);
}

TEST_CASE("report contents") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  const Report r = emit_report(cfg);
  CHECK(r.markdown.find("## Tilt walls") != std::string::npos);
  CHECK(r.markdown.find("| 2 | W(-9/2, sqrt(41/4)) | -9/2 | 41/4 | 8 | (1,-1,-1/2) | yes |") != std::string::npos);
  CHECK(r.markdown.find("| M4' | 17 | P^16 | Fl_4 | 11 | 27 | 27 | yes |") != std::string::npos);
  CHECK(count(r.markdown, "| yes |") == 3 + 6);

  const auto path_start = r.markdown.find("## Bridgeland walls crossed along the path");
  const auto comp_start = r.markdown.find("## Components");
  REQUIRE(path_start != std::string::npos);
  REQUIRE(comp_start != std::string::npos);
  const std::string path = r.markdown.substr(path_start, comp_start - path_start);
  CHECK(std::count(path.begin(), path.end(), '\n') == 2 + 2 + 4 + 1);
  CHECK(path.find("| 4 | O(-1) | i_V* I_{Z4/V}^dual(-5)") != std::string::npos);

  const auto doc = json::Json::parse(r.json);
  CHECK(doc["report"]["tilt_walls"].size() == 3);
  CHECK(doc["report"]["path_pairs"].size() == 4);
  CHECK(doc["report"]["left_pairs"].size() == 9);
  CHECK(doc["report"]["components"].size() == 6);
  CHECK(doc["report"]["all_components_match"] == true);
  std::vector<long> totals;
  for (const auto& c : doc["report"]["components"]) totals.push_back(c["total"].get<long>());
  CHECK(totals == std::vector<long>{20, 21, 21, 21, 20, 27});
}

TEST_CASE("emitted JSON reloads to an equal config") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  CHECK(load_scenario(emit_report(cfg).json) == cfg);
  const ScenarioConfig small = load_scenario(kSmall);
  CHECK(load_scenario(emit_report(small).json) == small);
}

TEST_CASE("empty scenario gives a header-only report") {
  const ScenarioConfig cfg = load_scenario("name: empty\ncharacter: \"1,0,-5,11\"\nbeta_line: \"-3\"\n");
  CHECK(cfg.walls.empty());
  const Report r = emit_report(cfg);
  CHECK(r.markdown == "# Scenario empty\n\nCharacter: (1,0,-5,11), beta line: -3\n");
  CHECK(load_scenario(r.json) == cfg);
}

TEST_CASE("reports and diagrams are deterministic") {
  const ScenarioConfig a = load_scenario_file(kShipped);
  const ScenarioConfig b = load_scenario_file(kShipped);
  const Report ra = emit_report(a);
  const Report rb = emit_report(b);
  CHECK(ra.markdown == rb.markdown);
  CHECK(ra.json == rb.json);
  CHECK(render_scenario_diagram(a) == render_scenario_diagram(b));
}

TEST_CASE("wall diagram element counts") {
  const ChernCharacter v = ch("1,0,-5,11");
  DiagramOverlays overlays;
  for (const auto& w : find_candidate_walls(v, -3).walls) overlays.walls.push_back(w.wall);
  overlays.bmt = true;
  const std::string svg = render_wall_diagram(v, {-12, 0, 6}, overlays);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "class=\"wall\"") == 3);
  CHECK(count(svg, "class=\"bmt\"") == 1);
  CHECK(count(svg, "class=\"hyperbola\"") == 1);
  CHECK(count(svg, "class=\"path\"") == 0);
  CHECK(svg.find("<!-- map: x = 800*(beta - (-12))/(12), y = 500 - 500*alpha/(6) -->") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 500\"") != std::string::npos);

  const std::regex number(R"(-?\d+\.\d+)");
  const std::string body = svg.substr(svg.find("</style>"));
  for (auto it = std::sregex_iterator(body.begin(), body.end(), number); it != std::sregex_iterator(); ++it) {
    const std::string s = it->str();
    CHECK(s.size() - s.find('.') - 1 == 6);
  }
}

TEST_CASE("diagram without overlays has only axis and hyperbola") {
  const std::string svg = render_wall_diagram(ch("1,0,-5,11"), {-12, 0, 6}, {});
  CHECK(count(svg, "<path") == 0);
  CHECK(count(svg, "<line class=\"axis\"") == 1);
  CHECK(count(svg, "<polyline") == 1);
}

TEST_CASE("walls outside the window are omitted") {
  DiagramOverlays overlays;
  overlays.walls = {Semicircle{q("-7/2"), q("9/4")}, Semicircle{q("20"), q("1")}};
  overlays.bmt = true;
  const std::string svg = render_wall_diagram(ch("1,0,-5,11"), {-12, 0, 6}, overlays);
  CHECK(count(svg, "class=\"wall\"") == 1);
  // the wall W(-7/2, 3/2) ends exactly at -2
  CHECK(count(render_wall_diagram(ch("1,0,-5,11"), {-2, 5, 6}, overlays), "class=\"wall\"") == 0);
  CHECK(count(render_wall_diagram(ch("1,0,-5,11"), {-1, 5, 6}, overlays), "class=\"bmt\"") == 0);
}

TEST_CASE("degenerate windows are rejected") {
  CHECK_THROWS_AS(render_wall_diagram(ch("1,0,-5,11"), {0, 0, 6}, {}), Error);
  CHECK_THROWS_AS(render_wall_diagram(ch("1,0,-5,11"), {1, 0, 6}, {}), Error);
  CHECK_THROWS_AS(render_wall_diagram(ch("1,0,-5,11"), {-1, 0, 0}, {}), Error);
}

TEST_CASE("scenario diagram") {
  const ScenarioConfig cfg = load_scenario_file(kShipped);
  const DiagramWindow w = scenario_window(cfg);
  CHECK(w.beta_min == -11);
  CHECK(w.beta_max == 0);
  CHECK(w.alpha_max == 6);
  const std::string svg = render_scenario_diagram(cfg);
  CHECK(count(svg, "class=\"wall\"") == 3);
  CHECK(count(svg, "class=\"bmt\"") == 1);
  CHECK(count(svg, "class=\"path\"") == 1);
}
