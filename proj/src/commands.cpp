#include "rcb/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "rcb/error.hpp"
#include "rcb/json_io.hpp"
#include "rcb/selftest.hpp"

namespace rcb {

namespace {

using io::json;
using io::require;

struct Outcome {
  json body;
  int code = 0;
};

json read_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error("MalformedJson", "line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

json verdict(bool yes, const std::string& reason) {
  return {{"verdict", yes ? "yes" : "no"}, {"reason", reason}};
}

json matches_to_json(const std::vector<projline::ConfigMatch>& matches) {
  json out = json::array();
  for (const auto& m : matches) out.push_back(io::to_json(m));
  return out;
}

Outcome decide_birational(const json& in) {
  const auto a = io::model_from_json(require(in, "a", ""), "a");
  const auto b = io::model_from_json(require(in, "b", ""), "b");
  json body = verdict(false, "thm6.1(3)");
  if (a.components() != b.components()) {
    body["failure"] = "component-counts-differ";
    return {body, 1};
  }
  const auto match = conic::decide_birational(a, b);
  if (!match) {
    body["failure"] = "no-moebius-map-matches-intervals";
    return {body, 1};
  }
  body = verdict(true, "thm6.1(3)");
  body["witness"] = io::to_json(*match);
  return {body, 0};
}

Outcome decide_iso(const json& in) {
  const auto a = io::marked_from_json(require(in, "a", ""), "a");
  const auto b = io::marked_from_json(require(in, "b", ""), "b");
  json body = verdict(false, "lemma9.1");
  if (a.model().components() != b.model().components()) {
    body["failure"] = "component-counts-differ";
    return {body, 1};
  }
  const auto match = conic::decide_marked_iso(a, b);
  if (!match) {
    body["failure"] = "no-mark-preserving-moebius-map";
    return {body, 1};
  }
  body = verdict(true, "lemma9.1");
  body["witness"] = io::to_json(*match);
  return {body, 0};
}

Outcome decide_verytransitive(const json& in) {
  const auto m = io::marked_from_json(in, "");
  const auto v = conic::decide_very_transitive(m);
  json body = verdict(v.very_transitive, v.rule);
  if (!v.failure.empty()) body["failure"] = v.failure;
  json types = json::array();
  for (const auto& t : v.types) types.push_back(t.name());
  body["component_types"] = types;
  body["two_transitive"] = v.two_transitive;
  body["componentwise"] = {{"verdict", v.componentwise ? "yes" : "no"}, {"reason", "thm1.1"}};
  if (v.very_transitive) body["witnesses"] = matches_to_json(v.witnesses);
  return {body, v.very_transitive ? 0 : 1};
}

Outcome realizable_perms(const json& in) {
  const auto config = io::config_from_json(require(in, "config", ""), "config");
  const auto perms = projline::realizable_permutations(config);
  return {{{"permutations", matches_to_json(perms)}, {"count", perms.size()}}, 0};
}

Outcome stabilizer(const json& in) {
  const json& pts = require(in, "points", "");
  if (!pts.is_array()) throw Error("SchemaError", "field 'points': expected an array");
  std::vector<projline::ProjPoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(io::proj_point_from_json(pts[i], "points[" + std::to_string(i) + "]"));
  }
  json maps = json::array();
  const auto group = projline::stabilizer(points);
  for (const auto& m : group) maps.push_back(io::to_json(m));
  return {{{"maps", maps}, {"order", group.size()}}, 0};
}

Outcome twist_cmd(const json& in) {
  const auto model = io::model_from_json(require(in, "model", ""), "model");
  std::vector<twist::TransportPair> pairs;
  std::vector<Rat> pins;
  std::vector<twist::JetRequest> jets;
  if (in.contains("pairs")) {
    const json& arr = in["pairs"];
    if (!arr.is_array()) throw Error("SchemaError", "field 'pairs': expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "pairs[" + std::to_string(i) + "]";
      pairs.push_back({io::surf_point_from_json(require(arr[i], "from", path), path + ".from"),
                       io::surf_point_from_json(require(arr[i], "to", path), path + ".to")});
    }
  }
  if (in.contains("pins")) {
    const json& arr = in["pins"];
    if (!arr.is_array()) throw Error("SchemaError", "field 'pins': expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) pins.push_back(io::rat_from_json(arr[i], "pins[" + std::to_string(i) + "]"));
  }
  if (in.contains("jets")) {
    const json& arr = in["jets"];
    if (!arr.is_array()) throw Error("SchemaError", "field 'jets': expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "jets[" + std::to_string(i) + "]";
      jets.push_back({io::rat_from_json(require(arr[i], "x", path), path + ".x"),
                      io::rat_from_json(require(arr[i], "mu", path), path + ".mu")});
    }
  }
  const auto t = twist::synthesize_twist(model, pairs, pins, jets);
  const auto report = twist::verify_twist(model, t);
  return {{{"twist", io::to_json(t)}, {"report", io::to_json(report)}}, report.ok() ? 0 : 1};
}

Outcome verify_twist_cmd(const json& in) {
  const auto model = io::model_from_json(require(in, "model", ""), "model");
  const auto t = io::twist_from_json(require(in, "twist", ""), "twist");
  const auto report = twist::verify_twist(model, t);
  return {{{"report", io::to_json(report)}}, report.ok() ? 0 : 1};
}

Outcome geiser_cmd(const json& in) {
  const auto model = io::biconic_from_json(require(in, "model", ""), "model");
  const auto p = io::bipoint_from_json(require(in, "point", ""), "point");
  const auto image = delpezzo::geiser(model, p);
  const json image_json = io::to_json(image);
  return {{{"image", image_json},
           {"second_fibration", image_json["t"]},
           {"ramification", image == p}},
          0};
}

Outcome biconic_image(const json& in) {
  if (in.is_object() && in.contains("config")) {
    const auto config = io::config_from_json(in["config"], "config");
    const auto model = delpezzo::biconic_from_config(config);
    return {{{"model", io::to_json(model)}, {"image", io::to_json(delpezzo::biconic_interval_image(model))}}, 0};
  }
  const auto model = io::biconic_from_json(require(in, "model", ""), "model");
  return {{{"image", io::to_json(delpezzo::biconic_interval_image(model))}}, 0};
}

Outcome lattice_cmd(std::size_t n) {
  using namespace lattice;
  json classes = json::array();
  const auto list = exceptional_classes(n);
  for (const auto& c : list) {
    json row = {{"class", io::to_json(c)}};
    if (n == 5) row["name"] = class_name_deg4(c);
    classes.push_back(row);
  }
  const auto K = PicVector::canonical(n);
  const auto fibres = singular_fibre_count(n);
  json body = {{"m", n},
               {"K2", intersect(K, K)},
               {"count", list.size()},
               {"classes", classes},
               {"singular_fibres", {{"count", fibres.count}, {"derivation", fibres.derivation}}}};
  bool ok = true;
  json checks = json::object();
  if (n == 5) {
    const auto sigma = deg4_sigma();
    const auto alpha = deg4_alpha();
    checks["sigma_involution"] = is_involution(sigma);
    checks["sigma_fixed_point_free"] = is_fixed_point_free(sigma);
    checks["sigma_preserves_form"] = perm_preserves_form(sigma);
    checks["alpha_involution"] = is_involution(alpha);
    checks["alpha_fixed_point_free"] = is_fixed_point_free(alpha);
    checks["alpha_preserves_form"] = perm_preserves_form(alpha);
    checks["sigma_alpha_commute"] = perms_commute(sigma, alpha);
  }
  if (n == 5 || n == 7) {
    const auto f1 = PicVector::line(n) - PicVector::exceptional(n, 1);
    const auto f2 = conic_fiber_partner(n, f1);
    body["fiber_pair"] = {io::to_json(f1), io::to_json(f2)};
    checks["partner_involution"] = conic_fiber_partner(n, f2) == f1;
  }
  if (n == 7) {
    bool involutive = true, isometric = true, exceptional = true;
    for (const auto& d : list) {
      const auto g = geiser_reflection(d);
      involutive = involutive && geiser_reflection(g) == d;
      exceptional = exceptional && std::find(list.begin(), list.end(), g) != list.end();
      for (const auto& e : list) isometric = isometric && intersect(g, geiser_reflection(e)) == intersect(d, e);
    }
    const auto f1 = PicVector::line(n) - PicVector::exceptional(n, 1);
    checks["geiser_involution"] = involutive;
    checks["geiser_isometry"] = isometric;
    checks["geiser_fixes_K"] = geiser_reflection(K) == K;
    checks["geiser_permutes_classes"] = exceptional;
    checks["geiser_swaps_fiber_partners"] = geiser_reflection(f1) == conic_fiber_partner(n, f1);
  }
  for (const auto& [name, value] : checks.items()) ok = ok && value.get<bool>();
  body["checks"] = checks;
  return {body, ok ? 0 : 1};
}

Outcome region_path(const json& in) {
  const auto region = io::region_from_json(require(in, "rects", ""), "rects");
  const auto start = io::point2_from_json(require(in, "start", ""), "start");
  const auto end = io::point2_from_json(require(in, "end", ""), "end");
  planner::Forbidden forbidden;
  for (const char* key : {"forbidden_x", "forbidden_y"}) {
    if (!in.contains(key)) continue;
    const json& arr = in[key];
    if (!arr.is_array()) throw Error("SchemaError", std::string("field '") + key + "': expected an array");
    auto& target = key[10] == 'x' ? forbidden.x : forbidden.y;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      target.push_back(io::rat_from_json(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
  }
  const auto path = planner::find_rect_path(region, start, end, forbidden);
  if (!path) return {{{"found", false}, {"reason", "endpoints-not-connected"}}, 1};
  return {{{"found", true}, {"segments", io::to_json(*path)}}, 0};
}

void write_error(std::ostream& out, std::ostream& err, const std::string& code, const std::string& message) {
  out << json{{"error", code}, {"message", message}}.dump(2) << '\n';
  err << "error: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for real conic bundle surfaces", "rcb"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string input_path, output_path;
  app.add_option("--input", input_path, "Read the request from FILE instead of standard input");
  app.add_option("--output", output_path, "Write the result to FILE instead of standard output");

  using Handler = std::function<Outcome(const json&)>;
  const std::vector<std::pair<std::string, Handler>> json_commands = {
      {"decide-birational", decide_birational},
      {"decide-iso", decide_iso},
      {"decide-verytransitive", decide_verytransitive},
      {"realizable-perms", realizable_perms},
      {"stabilizer", stabilizer},
      {"twist", twist_cmd},
      {"verify-twist", verify_twist_cmd},
      {"geiser", geiser_cmd},
      {"biconic-image", biconic_image},
      {"region-path", region_path},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, handler] : json_commands) {
    auto* sub = app.add_subcommand(name, "Read a JSON request and print the result");
    handlers[sub] = handler;
  }
  std::size_t lattice_points = 5;
  auto* lattice_sub = app.add_subcommand("lattice", "Print exceptional classes and lattice checks");
  lattice_sub->add_option("--m", lattice_points, "Number of blown-up points (1..7)");
  std::uint64_t seed = 1;
  auto* selftest_sub = app.add_subcommand("selftest", "Run the seeded property suites");
  selftest_sub->add_option("--seed", seed, "Random seed");

  std::vector<std::string> argv_store{"rcb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  std::ofstream file_out;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      err << "error: IoError: cannot open " << output_path << " for writing\n";
      return 2;
    }
  }
  std::ostream& sink = output_path.empty() ? out : file_out;

  try {
    if (selftest_sub->parsed()) {
      const auto report = run_selftest(seed);
      sink << report.text;
      return report.ok ? 0 : 1;
    }
    Outcome outcome;
    if (lattice_sub->parsed()) {
      outcome = lattice_cmd(lattice_points);
    } else {
      std::string text;
      if (input_path.empty()) {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream file(input_path);
        if (!file) throw Error("IoError", "cannot open " + input_path);
        text.assign(std::istreambuf_iterator<char>(file), {});
      }
      const json request = read_json(text);
      for (const auto& [sub, handler] : handlers) {
        if (sub->parsed()) outcome = handler(request);
      }
    }
    sink << outcome.body.dump(2) << '\n';
    return outcome.code;
  } catch (const Error& e) {
    write_error(sink, err, e.code(), e.what());
  } catch (const json::exception& e) {
    write_error(sink, err, "SchemaError", e.what());
  }
  return 2;
}

}  // namespace rcb
