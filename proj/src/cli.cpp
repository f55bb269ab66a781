#include "wallcross/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "wallcross/bmt.hpp"
#include "wallcross/chern.hpp"
#include "wallcross/json_io.hpp"
#include "wallcross/riemann_roch.hpp"
#include "wallcross/scenario.hpp"
#include "wallcross/tilt.hpp"
#include "wallcross/wall_finder.hpp"

namespace wallcross::cli {

bool ascii_forced() {
  const char* v = std::getenv("WALLCROSS_ASCII");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

namespace {

using json::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  Json json;
};

class Symbols {
 public:
  explicit Symbols(bool ascii) : ascii_(ascii) {}
  const char* alpha_sq() const { return ascii_ ? "alpha^2" : "α²"; }
  const char* beta() const { return ascii_ ? "beta" : "β"; }
  const char* chi() const { return ascii_ ? "chi" : "χ"; }
  const char* arrow() const { return ascii_ ? "->" : "→"; }
  std::string radius(const Rational& radius_sq) const {
    std::string s = radius_text(radius_sq);
    if (!ascii_ && s.rfind("sqrt", 0) == 0) s = "√" + s.substr(4);
    return s;
  }
  std::string wall(const WallLocus& w) const {
    if (const auto* s = std::get_if<Semicircle>(&w)) {
      return "W(" + to_string(s->center) + ", " + radius(s->radius_sq) + ")";
    }
    return to_string(w);
  }

 private:
  bool ascii_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

ChernCharacter character_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_character(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

TruncatedCharacter truncated_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_truncated(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Rational beta_arg(const std::string& text) {
  const Rational b = rational_arg("--beta", text);
  if (!is_integer(b)) throw UsageError("beta must be an integer");
  return b;
}

std::vector<Rational> rationals_arg(const std::string& flag, const std::string& text, std::size_t count) {
  const auto parts = split(text, ',');
  if (parts.size() != count) {
    throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated rationals");
  }
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(rational_arg(flag, p));
  return out;
}

Semicircle wall_arg(const std::string& text) {
  const auto r = rationals_arg("--wall", text, 2);
  if (r[1] <= 0) throw UsageError("--wall: radius_sq must be positive");
  return Semicircle{r[0], r[1]};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("IoError", "cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("IoError", "failed writing '" + path + "'");
}

Json with_header(Json head, const Json& body) {
  for (auto it = body.begin(); it != body.end(); ++it) head[it.key()] = it.value();
  return head;
}

// Smallest integer strictly right of the left foot of the hyperbola.
std::optional<Rational> default_beta(const ChernCharacter& v) {
  const Hyperbola h = hyperbola_of(v);
  if (const auto* vert = std::get_if<HyperbolaVertical>(&h)) return Rational(floor(vert->beta));
  const auto& b = std::get<HyperbolaBranch>(h);
  const Rational disc = b.ch1 * b.ch1 - 2 * b.ch0 * b.ch2;
  if (disc < 0) return std::nullopt;
  const Rational scale = 1 / abs(b.ch0);
  const Surd left(b.ch1 / b.ch0, -scale, disc);
  return Rational(left.floor() + 1);
}

Output cmd_walls(const Symbols& sym, const std::string& v_text, const std::string& beta_text, int amax, bool ch3,
                 bool no_filter) {
  const ChernCharacter v = character_arg("--v", v_text);
  const Rational beta = beta_arg(beta_text);
  FinderOptions opts;
  opts.a_max = amax;
  opts.want_ch3 = ch3;
  opts.bmt_filter = !no_filter;
  const FinderResult res = find_candidate_walls(v, beta, opts);

  std::ostringstream text;
  text << "v = (" << to_string(v) << "), " << sym.beta() << " = " << to_string(beta) << ": " << res.walls.size()
       << (res.walls.size() == 1 ? " wall" : " walls") << "\n";
  Json body = json::encode(res);
  for (std::size_t i = 0; i < res.walls.size(); ++i) {
    const auto& w = res.walls[i];
    const auto hit = intersect_beta_line(w.wall, beta);
    text << sym.wall(w.wall);
    if (hit) text << "  " << sym.alpha_sq() << " = " << to_string(*hit) << " at " << sym.beta() << " = " << to_string(beta);
    text << "\n";
    for (const auto& p : w.pairs) {
      text << "  (" << to_string(p.sub) << ") " << sym.arrow() << " (" << to_string(v.truncated()) << ") "
           << sym.arrow() << " (" << to_string(p.quot) << ")";
      text << "\n";
      if (ch3) {
        text << "    ch3:";
        if (p.ch3_candidates.empty()) text << " none";
        for (const auto& e : p.ch3_candidates) text << " " << to_string(e);
        text << "\n";
      }
    }
    body["walls"][i]["alpha_sq_on_beta_line"] = hit ? json::encode(*hit) : Json(nullptr);
  }
  for (const auto& warn : res.warnings) text << "warning (" << warn.kind << "): " << warn.message << "\n";
  Json head;
  head["character"] = json::encode(v);
  head["beta"] = json::encode(beta);
  return {text.str(), with_header(head, body)};
}

Output cmd_wall_between(const Symbols& sym, const std::string& v_text, const std::string& w_text) {
  const ChernCharacter v = character_arg("--v", v_text);
  const ChernCharacter w = character_arg("--w", w_text);
  const WallLocus locus = numerical_wall(v, w);
  std::string text = sym.wall(locus) + "\n";
  Json j;
  j["v"] = json::encode(v);
  j["w"] = json::encode(w);
  j["wall"] = json::encode(locus);
  if (is_semicircle(locus)) {
    const HalfPlanePoint top = apex(locus);
    j["apex"] = Json{{"beta", json::encode(top.beta())}, {"alpha_sq", json::encode(top.alpha_sq())}};
    text += std::string("apex: ") + sym.beta() + " = " + to_string(top.beta()) + ", " + sym.alpha_sq() + " = " +
            to_string(top.alpha_sq()) + "\n";
  }
  return {text, j};
}

Output cmd_bmt_null(const Symbols& sym, const std::string& v_text) {
  const ChernCharacter v = character_arg("--v", v_text);
  const WallLocus locus = q_null_locus(v);
  Json j;
  j["character"] = json::encode(v);
  j["locus"] = json::encode(locus);
  return {"Q = 0: " + sym.wall(locus) + "\n", j};
}

Output cmd_q(const Symbols& sym, const std::string& v_text, const std::string& point_text, const std::string& wall_text) {
  const ChernCharacter v = character_arg("--v", v_text);
  if (point_text.empty() == wall_text.empty()) throw UsageError("give exactly one of --point and --wall");
  Json j;
  j["character"] = json::encode(v);
  if (!point_text.empty()) {
    const auto r = rationals_arg("--point", point_text, 2);
    if (r[1] < 0) throw UsageError("--point: alpha^2 must be non-negative");
    const Rational value = q_form(v, HalfPlanePoint(r[0], r[1]));
    j["beta"] = json::encode(r[0]);
    j["alpha_sq"] = json::encode(r[1]);
    j["value"] = json::encode(value);
    return {to_string(value) + "\n", j};
  }
  const Semicircle wall = wall_arg(wall_text);
  const BmtRestriction r = q_on_wall(v, wall);
  std::ostringstream text;
  text << "Q on " << sym.wall(wall) << " = " << to_string(r.slope) << "*" << sym.beta() << " + "
       << to_string(r.intercept) << " for " << sym.beta() << " in [" << to_string(r.beta_min) << ", "
       << to_string(r.beta_max) << "]" << (r.endpoints_exact ? "" : " (endpoints rounded outward)") << ": "
       << to_string(r.sign) << "\n";
  j["wall"] = json::encode(wall);
  return {text.str(), with_header(j, json::encode(r))};
}

Output cmd_ch3(const Symbols& sym, const std::string& sub_text, const std::string& v_text, const std::string& wall_text) {
  const TruncatedCharacter sub = truncated_arg("--sub", sub_text);
  const ChernCharacter v = character_arg("--v", v_text);
  const Semicircle wall = wall_arg(wall_text);
  const Ch3Interval iv = ch3_interval(sub, v, wall);
  const std::vector<Rational> values = iv.feasible ? ch3_admissible(sub, v, wall) : std::vector<Rational>{};
  std::ostringstream text;
  Json j;
  j["sub"] = json::encode(sub);
  j["character"] = json::encode(v);
  j["wall"] = json::encode(wall);
  j["feasible"] = iv.feasible;
  j["lower"] = iv.lower ? Json(to_string(*iv.lower)) : Json(nullptr);
  j["upper"] = iv.upper ? Json(to_string(*iv.upper)) : Json(nullptr);
  Json arr = Json::array();
  for (const auto& e : values) arr.push_back(json::encode(e));
  j["admissible"] = arr;
  if (!iv.feasible) {
    text << "no admissible ch3 on " << sym.wall(wall) << "\n";
  } else {
    text << "ch3 in [" << (iv.lower ? to_string(*iv.lower) : std::string("-inf")) << ", "
         << (iv.upper ? to_string(*iv.upper) : std::string("+inf")) << "]\n";
    text << "admissible:";
    if (values.empty()) text << " none";
    for (const auto& e : values) text << " " << to_string(e);
    text << "\n";
  }
  return {text.str(), j};
}

Output cmd_chi(const std::string& v_text, const std::string& w_text) {
  const ChernCharacter v = character_arg("--v", v_text);
  Json j;
  j["v"] = json::encode(v);
  Rational value;
  if (w_text.empty()) {
    value = chi(v);
  } else {
    const ChernCharacter w = character_arg("--w", w_text);
    j["w"] = json::encode(w);
    value = euler_pairing(v, w);
  }
  j["value"] = json::encode(value);
  return {to_string(value) + "\n", j};
}

Output cmd_bott(int n, long d, std::optional<int> i) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (i && (*i < 0 || *i > n)) throw UsageError("--i must lie in [0, n]");
  Json j;
  j["n"] = n;
  j["d"] = d;
  std::ostringstream text;
  if (i) {
    const Integer h = bott_h(n, d, *i);
    j["i"] = *i;
    j["h"] = h.get_str();
    text << h.get_str() << "\n";
  } else {
    Json arr = Json::array();
    for (int k = 0; k <= n; ++k) {
      const Integer h = bott_h(n, d, k);
      arr.push_back(h.get_str());
      text << "h^" << k << " = " << h.get_str() << "\n";
    }
    j["h"] = arr;
  }
  return {text.str(), j};
}

std::string polynomial(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, mono] : terms) {
    if (coef == 0) continue;
    const Rational mag = abs(coef);
    if (out.empty()) {
      if (coef < 0) out += "-";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (mono.empty() || mag != 1) out += to_string(mag) + (mono.empty() ? "" : "*");
    out += mono;
  }
  return out.empty() ? "0" : out;
}

Output cmd_hyperbola(const Symbols& sym, const std::string& v_text) {
  const ChernCharacter v = character_arg("--v", v_text);
  const Hyperbola h = hyperbola_of(v);
  Json j;
  j["character"] = json::encode(v);
  j["hyperbola"] = json::encode(h);
  std::ostringstream text;
  if (const auto* vert = std::get_if<HyperbolaVertical>(&h)) {
    text << sym.beta() << " = " << to_string(vert->beta) << "\n";
  } else {
    const auto& b = std::get<HyperbolaBranch>(h);
    const std::string beta = sym.beta();
    text << polynomial({{b.ch0 / 2, beta + "^2"}, {-b.ch0 / 2, sym.alpha_sq()}, {-b.ch1, beta}, {b.ch2, ""}})
         << " = 0\n";
  }
  return {text.str(), j};
}

Output cmd_diagram(const std::string& v_text, const std::string& window_text, const std::string& out_path,
                   const std::string& beta_text, bool no_walls, bool no_bmt, const std::string& path_text) {
  const ChernCharacter v = character_arg("--v", v_text);
  const auto w = rationals_arg("--window", window_text, 3);
  const DiagramWindow window{w[0], w[1], w[2]};
  DiagramOverlays overlays;
  overlays.bmt = !no_bmt;
  if (!path_text.empty()) overlays.path_offset = rational_arg("--path", path_text);
  std::optional<Rational> beta;
  if (!no_walls) {
    if (!beta_text.empty()) {
      beta = beta_arg(beta_text);
      for (const auto& cw : find_candidate_walls(v, *beta).walls) overlays.walls.push_back(cw.wall);
    } else if ((beta = default_beta(v))) {
      try {
        for (const auto& cw : find_candidate_walls(v, *beta).walls) overlays.walls.push_back(cw.wall);
      } catch (const Error&) {
        beta.reset();
      }
    }
  }
  const std::string svg = render_wall_diagram(v, window, overlays);
  Json j;
  j["character"] = json::encode(v);
  j["window"] = Json{{"beta_min", json::encode(window.beta_min)},
                     {"beta_max", json::encode(window.beta_max)},
                     {"alpha_max", json::encode(window.alpha_max)}};
  j["beta"] = beta ? json::encode(*beta) : Json(nullptr);
  Json walls = Json::array();
  for (const auto& s : overlays.walls) walls.push_back(json::encode(s));
  j["walls"] = walls;
  j["bmt"] = overlays.bmt;
  if (out_path.empty()) {
    j["svg"] = svg;
    return {svg, j};
  }
  write_file(out_path, svg);
  j["out"] = out_path;
  return {"wrote " + out_path + "\n", j};
}

Output cmd_scenario_run(const std::string& file, const std::string& out_path, const std::string& json_path,
                        const std::string& svg_path) {
  const ScenarioConfig cfg = load_scenario_file(file);
  const Report report = emit_report(cfg);
  Output o;
  if (!out_path.empty()) {
    write_file(out_path, report.markdown);
  } else if (json_path != "-") {
    o.text = report.markdown;
  }
  if (json_path == "-") {
    o.text += report.json;
  } else if (!json_path.empty()) {
    write_file(json_path, report.json);
  }
  if (!svg_path.empty()) write_file(svg_path, render_scenario_diagram(cfg));
  return o;
}

int domain_failure(std::ostream& err, const Error& e) {
  err << "error: " << e.kind() << ": " << e.what() << "\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Symbols sym(ascii_forced());
  CLI::App app{"Exact tilt and Bridgeland wall computations on P^3", "wallcross"};
  app.require_subcommand(1);

  std::function<Output()> action;
  bool as_json = false;

  std::string v_text, w_text, beta_text, wall_text, point_text, sub_text, window_text, out_path, path_text;
  int amax = 64;
  bool ch3 = false, no_filter = false, no_walls = false, no_bmt = false;
  int bott_n = 0;
  long bott_d = 0;
  std::optional<int> bott_i;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Print JSON instead of text"); };

  auto* walls = app.add_subcommand("walls", "Enumerate candidate tilt walls crossing a vertical line");
  walls->add_option("--v", v_text, "Chern character c0,c1,c2,c3")->required();
  walls->add_option("--beta", beta_text, "Integer beta of the vertical line")->required();
  walls->add_option("--amax", amax, "Bound on the rank of the twisted subobject")->capture_default_str();
  walls->add_flag("--ch3", ch3, "List admissible ch3 values of each subobject");
  walls->add_flag("--no-bmt-filter", no_filter, "Keep pairs ruled out by the BMT inequality");
  json_flag(walls);
  walls->callback([&] { action = [&] { return cmd_walls(sym, v_text, beta_text, amax, ch3, no_filter); }; });

  auto* between = app.add_subcommand("wall-between", "Numerical wall between two characters");
  between->add_option("--v", v_text, "First character")->required();
  between->add_option("--w", w_text, "Second character")->required();
  json_flag(between);
  between->callback([&] { action = [&] { return cmd_wall_between(sym, v_text, w_text); }; });

  auto* bmt = app.add_subcommand("bmt-null", "Null locus of the BMT quadratic form");
  bmt->add_option("--v", v_text, "Chern character")->required();
  json_flag(bmt);
  bmt->callback([&] { action = [&] { return cmd_bmt_null(sym, v_text); }; });

  auto* q = app.add_subcommand("q", "Evaluate the BMT form at a point or restrict it to a wall");
  q->add_option("--v", v_text, "Chern character")->required();
  q->add_option("--point", point_text, "beta,alpha^2");
  q->add_option("--wall", wall_text, "center,radius^2");
  json_flag(q);
  q->callback([&] { action = [&] { return cmd_q(sym, v_text, point_text, wall_text); }; });

  auto* c3 = app.add_subcommand("ch3", "Admissible ch3 of a subobject along a wall");
  c3->add_option("--sub", sub_text, "Truncated subcharacter c0,c1,c2")->required();
  c3->add_option("--v", v_text, "Character being destabilized")->required();
  c3->add_option("--wall", wall_text, "center,radius^2")->required();
  json_flag(c3);
  c3->callback([&] { action = [&] { return cmd_ch3(sym, sub_text, v_text, wall_text); }; });

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic or Euler pairing");
  chi_cmd->add_option("--v", v_text, "Chern character")->required();
  chi_cmd->add_option("--w", w_text, "Second character for chi(v, w)");
  json_flag(chi_cmd);
  chi_cmd->callback([&] { action = [&] { return cmd_chi(v_text, w_text); }; });

  auto* bott = app.add_subcommand("bott", "Cohomology of line bundles on P^n");
  bott->add_option("--n", bott_n, "Dimension of projective space")->required();
  bott->add_option("--d", bott_d, "Degree")->required();
  bott->add_option("--i", bott_i, "Single cohomological degree");
  json_flag(bott);
  bott->callback([&] { action = [&] { return cmd_bott(bott_n, bott_d, bott_i); }; });

  auto* hyp = app.add_subcommand("hyperbola", "Equation of the hyperbola where the tilt slope vanishes");
  hyp->add_option("--v", v_text, "Chern character")->required();
  json_flag(hyp);
  hyp->callback([&] { action = [&] { return cmd_hyperbola(sym, v_text); }; });

  std::string scenario_file, json_path, svg_path;
  auto* scenario = app.add_subcommand("scenario", "Scenario documents");
  scenario->require_subcommand(1);
  auto* scen_run = scenario->add_subcommand("run", "Validate a scenario and write its report");
  scen_run->add_option("file", scenario_file, "Scenario YAML document")->required();
  scen_run->add_option("--out", out_path, "Write the markdown report here instead of stdout");
  scen_run->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  scen_run->add_option("--svg", svg_path, "Write the wall diagram here");
  scen_run->callback(
      [&] { action = [&] { return cmd_scenario_run(scenario_file, out_path, json_path, svg_path); }; });

  auto* diagram = app.add_subcommand("diagram", "Render walls, the hyperbola and the BMT semicircle as SVG");
  diagram->add_option("--v", v_text, "Chern character")->required();
  diagram->add_option("--window", window_text, "beta_min,beta_max,alpha_max")->required();
  diagram->add_option("--out", out_path, "Write the SVG here instead of stdout");
  diagram->add_option("--beta", beta_text, "Integer beta for wall enumeration");
  diagram->add_flag("--no-walls", no_walls, "Do not draw enumerated walls");
  diagram->add_flag("--no-bmt", no_bmt, "Do not draw the BMT semicircle");
  diagram->add_option("--path", path_text, "Draw the hyperbola shifted right by this amount");
  json_flag(diagram);
  diagram->callback([&] {
    action = [&] { return cmd_diagram(v_text, window_text, out_path, beta_text, no_walls, no_bmt, path_text); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Output o = action();
    if (as_json) {
      out << o.json.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    return domain_failure(err, e);
  }
}

}  // namespace wallcross::cli
