#pragma once

// Scenario documents: destabilizing pairs along walls with their Ext data,
// moduli components built from them, and reports / diagrams derived from it.
//
// The document format is YAML; a JSON report produced by emit_report is also
// a valid scenario document (its "report" section is ignored on load).

#include <optional>
#include <string>
#include <vector>

#include "wallcross/chern.hpp"
#include "wallcross/riemann_roch.hpp"
#include "wallcross/tilt.hpp"

namespace wallcross {

enum class PairSide { left, right, both };

const char* to_string(PairSide s);

struct Ext1Case {
  std::string condition;
  long value = 0;

  friend bool operator==(const Ext1Case&, const Ext1Case&) = default;
};

struct PairSpec {
  std::string sub_label;
  std::string quot_label;
  ChernCharacter sub_ch;
  ChernCharacter quot_ch;
  /// dim Ext^1(quot, sub) in the generic case.
  std::optional<long> ext1_quot_sub;
  /// Values in special cases, keyed by a free-text condition.
  std::vector<Ext1Case> ext1_cases;
  std::vector<ExtTable> full_ext_tables;
  PairSide side = PairSide::both;
  /// Position along the wall-crossing path, if the path crosses this pair.
  std::optional<int> path_order;

  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

struct WallSpec {
  Semicircle wall;
  std::vector<PairSpec> pairs;

  friend bool operator==(const WallSpec&, const WallSpec&) = default;
};

struct ComponentSpec {
  std::string name;
  /// Index ("pair_ref") into the pairs of all walls, counted in document order.
  std::size_t pair = 0;
  /// Selects an entry of ext1_cases instead of the generic value.
  std::optional<std::string> ext1_case;
  std::string base_label;
  long base_dim = 0;
  std::optional<long> expected_total_dim;
  std::string generic_description;

  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

struct ScenarioConfig {
  std::string name;
  ChernCharacter character;
  Rational beta_line;
  std::vector<WallSpec> walls;
  std::vector<ComponentSpec> components;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

  const PairSpec& pair_at(std::size_t index) const;
  std::size_t pair_count() const;
};

/// Parses and validates. Throws Error("ParseError") for malformed input and
/// Error("ValidationError") when an identity fails; messages carry the line.
ScenarioConfig load_scenario(const std::string& document);
ScenarioConfig load_scenario_file(const std::string& path);

struct ComponentDimension {
  std::string name;
  long ext1 = 0;
  bool empty = false;  // ext1 == 0
  long fiber_dim = 0;
  long base_dim = 0;
  long total = 0;
  std::optional<long> expected_total_dim;
  bool matches_expected = true;
};

std::vector<ComponentDimension> component_dimensions(const ScenarioConfig& cfg);

struct Report {
  std::string markdown;
  std::string json;
};

Report emit_report(const ScenarioConfig& cfg);

struct DiagramWindow {
  Rational beta_min;
  Rational beta_max;
  Rational alpha_max;
};

struct DiagramOverlays {
  std::vector<Semicircle> walls;
  bool bmt = false;
  /// Draw the hyperbola shifted right by this amount.
  std::optional<Rational> path_offset;
};

std::string render_wall_diagram(const ChernCharacter& v, const DiagramWindow& window, const DiagramOverlays& overlays);

/// Window enclosing all walls of the scenario with a margin of one unit.
DiagramWindow scenario_window(const ScenarioConfig& cfg);
std::string render_scenario_diagram(const ScenarioConfig& cfg);

}  // namespace wallcross
