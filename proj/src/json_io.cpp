#include "rcb/json_io.hpp"

#include "rcb/error.hpp"

namespace rcb::io {

using rcb::to_string;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error("SchemaError", "field '" + path + "': " + what);
}

const json& array_of(const json& j, const std::string& path, std::size_t exact = 0) {
  if (!j.is_array()) schema(path, "expected an array");
  if (exact && j.size() != exact) schema(path, "expected " + std::to_string(exact) + " entries");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string dot(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const std::string& string_of(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get_ref<const std::string&>();
}

Int int_from_json(const json& j, const std::string& path) {
  const Rat v = rat_from_json(j, path);
  if (v.get_den() != 1) schema(path, "expected an integer");
  return v.get_num();
}

}  // namespace

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path.empty() ? "<root>" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(dot(path, key), "missing");
  return *it;
}

json to_json(const Rat& v) { return to_string(v); }

Rat rat_from_json(const json& j, const std::string& path) {
  const std::string& text = string_of(j, path);
  try {
    return parse_rat(text);
  } catch (const Error& e) {
    throw Error("ParseError", "field '" + path + "': token '" + text + "' is not a canonical rational");
  }
}

json to_json(const projline::ProjPoint& p) { return projline::to_string(p); }

projline::ProjPoint proj_point_from_json(const json& j, const std::string& path) {
  if (j.is_string() && j.get_ref<const std::string&>() == "inf") return projline::ProjPoint::infinity();
  return projline::ProjPoint::finite(rat_from_json(j, path));
}

json to_json(const projline::Moebius& m) {
  return {{"a", m.a().get_str()}, {"b", m.b().get_str()}, {"c", m.c().get_str()}, {"d", m.d().get_str()}};
}

projline::Moebius moebius_from_json(const json& j, const std::string& path) {
  return projline::Moebius(rat_from_json(require(j, "a", path), dot(path, "a")),
                           rat_from_json(require(j, "b", path), dot(path, "b")),
                           rat_from_json(require(j, "c", path), dot(path, "c")),
                           rat_from_json(require(j, "d", path), dot(path, "d")));
}

json to_json(const projline::IntervalConfig& c) {
  json out = json::array();
  for (const auto& arc : c.intervals()) out.push_back({to_json(arc.start()), to_json(arc.end())});
  return out;
}

projline::IntervalConfig config_from_json(const json& j, const std::string& path) {
  std::vector<projline::Interval> arcs;
  array_of(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& pair = array_of(j[i], at(path, i), 2);
    arcs.emplace_back(proj_point_from_json(pair[0], at(at(path, i), 0)),
                      proj_point_from_json(pair[1], at(at(path, i), 1)));
  }
  return projline::IntervalConfig(std::move(arcs));
}

json perm_to_json(const projline::Permutation& p) {
  json out = json::array();
  for (auto v : p) out.push_back(v + 1);
  return out;
}

projline::Permutation perm_from_json(const json& j, const std::string& path) {
  array_of(j, path);
  projline::Permutation p;
  std::vector<bool> seen(j.size(), false);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) schema(at(path, i), "expected an integer");
    const long v = j[i].get<long>();
    if (v < 1 || v > static_cast<long>(j.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      schema(path, "not a permutation of 1.." + std::to_string(j.size()));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.push_back(static_cast<std::size_t>(v - 1));
  }
  return p;
}

json to_json(const projline::ConfigMatch& m) {
  return {{"moebius", to_json(m.map)}, {"permutation", perm_to_json(m.perm)}};
}

json to_json(const conic::ConicModel& m) {
  json roots = json::array();
  for (const auto& a : m.roots()) roots.push_back(to_json(a));
  return {{"roots", roots}};
}

conic::ConicModel model_from_json(const json& j, const std::string& path) {
  const std::string rpath = dot(path, "roots");
  const json& roots = array_of(require(j, "roots", path), rpath);
  std::vector<Rat> values;
  for (std::size_t i = 0; i < roots.size(); ++i) values.push_back(rat_from_json(roots[i], at(rpath, i)));
  try {
    return conic::ConicModel(std::move(values));
  } catch (const Error& e) {
    schema(rpath, e.what());
  }
}

json to_json(const conic::SurfPoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"z", to_json(p.z)}}; }

conic::SurfPoint surf_point_from_json(const json& j, const std::string& path) {
  return {rat_from_json(require(j, "x", path), dot(path, "x")), rat_from_json(require(j, "y", path), dot(path, "y")),
          rat_from_json(require(j, "z", path), dot(path, "z"))};
}

json to_json(const conic::MarkedModel& m) {
  json out = to_json(m.model());
  json marks = json::array();
  for (const auto& p : m.marks()) marks.push_back(to_json(p));
  out["marks"] = marks;
  return out;
}

conic::MarkedModel marked_from_json(const json& j, const std::string& path) {
  conic::ConicModel model = model_from_json(j, path);
  std::vector<conic::SurfPoint> marks;
  if (j.contains("marks")) {
    const std::string mpath = dot(path, "marks");
    const json& arr = array_of(j["marks"], mpath);
    for (std::size_t i = 0; i < arr.size(); ++i) marks.push_back(surf_point_from_json(arr[i], at(mpath, i)));
  }
  return conic::MarkedModel(std::move(model), std::move(marks));
}

json to_json(const twist::Rotation& r) { return {{"c", to_json(r.c())}, {"s", to_json(r.s())}}; }

json to_json(const twist::TwistMap& t) {
  json lambda = json::array();
  for (const auto& c : t.lambda.coeffs()) lambda.push_back(to_json(c));
  return {{"base", to_json(t.base)}, {"lambda", lambda}};
}

twist::TwistMap twist_from_json(const json& j, const std::string& path) {
  const std::string bpath = dot(path, "base");
  const json& base = require(j, "base", path);
  Rat c = rat_from_json(require(base, "c", bpath), dot(bpath, "c"));
  Rat s = rat_from_json(require(base, "s", bpath), dot(bpath, "s"));
  const std::string lpath = dot(path, "lambda");
  const json& lambda = array_of(require(j, "lambda", path), lpath);
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i < lambda.size(); ++i) coeffs.push_back(rat_from_json(lambda[i], at(lpath, i)));
  // The base is not checked here so that verify-twist can report a bad one.
  return {twist::Rotation::unchecked(std::move(c), std::move(s)), RatPoly(std::move(coeffs))};
}

json to_json(const twist::TwistReport& r) {
  return {{"base_unit", r.base_unit},          {"orthogonal", r.orthogonal}, {"preserves_surface", r.preserves_surface},
          {"invertible", r.invertible},        {"samples", r.samples},       {"failures", r.failures},
          {"ok", r.ok()}};
}

json to_json(const delpezzo::BinQuadForm& f) { return {to_json(f.alpha), to_json(f.beta), to_json(f.gamma)}; }

json to_json(const delpezzo::BiconicModel& m) {
  return {{"m1", to_json(m.form(0))}, {"m2", to_json(m.form(1))}, {"m3", to_json(m.form(2))}, {"k", m.k()}};
}

delpezzo::BiconicModel biconic_from_json(const json& j, const std::string& path) {
  std::array<delpezzo::BinQuadForm, 3> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string key = "m" + std::to_string(i + 1);
    const std::string fpath = dot(path, key);
    const json& f = array_of(require(j, key, path), fpath, 3);
    forms[i] = {rat_from_json(f[0], at(fpath, 0)), rat_from_json(f[1], at(fpath, 1)), rat_from_json(f[2], at(fpath, 2))};
  }
  if (j.contains("k")) {
    if (!j["k"].is_number_unsigned()) schema(dot(path, "k"), "expected a non-negative integer");
    return delpezzo::BiconicModel(forms, j["k"].get<std::size_t>());
  }
  // Build with k = 0 first to validate the forms, then count the arcs.
  const delpezzo::BiconicModel probe(forms, 0);
  return delpezzo::BiconicModel(forms, delpezzo::biconic_interval_image(probe).size());
}

json to_json(const delpezzo::BiPoint& p) {
  return {{"xyz", {p.xyz()[0].get_str(), p.xyz()[1].get_str(), p.xyz()[2].get_str()}},
          {"t", {p.t().u0().get_str(), p.t().u1().get_str()}}};
}

delpezzo::BiPoint bipoint_from_json(const json& j, const std::string& path) {
  const std::string xpath = dot(path, "xyz");
  const json& xyz = array_of(require(j, "xyz", path), xpath, 3);
  const std::string tpath = dot(path, "t");
  const json& t = array_of(require(j, "t", path), tpath, 2);
  std::array<Rat, 3> coords;
  for (std::size_t i = 0; i < 3; ++i) coords[i] = rat_from_json(xyz[i], at(xpath, i));
  return delpezzo::BiPoint(coords, projline::ProjPoint(int_from_json(t[0], at(tpath, 0)), int_from_json(t[1], at(tpath, 1))));
}

json to_json(const lattice::PicVector& v) { return v.coords(); }

json to_json(const planner::Point2& p) { return {to_json(p.x), to_json(p.y)}; }

planner::Point2 point2_from_json(const json& j, const std::string& path) {
  array_of(j, path, 2);
  return {rat_from_json(j[0], at(path, 0)), rat_from_json(j[1], at(path, 1))};
}

planner::Region region_from_json(const json& j, const std::string& path) {
  planner::Region region;
  array_of(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rpath = at(path, i);
    const json& r = array_of(j[i], rpath, 2);
    const json& xr = array_of(r[0], at(rpath, 0), 2);
    const json& yr = array_of(r[1], at(rpath, 1), 2);
    region.rects.emplace_back(rat_from_json(xr[0], at(at(rpath, 0), 0)), rat_from_json(xr[1], at(at(rpath, 0), 1)),
                              rat_from_json(yr[0], at(at(rpath, 1), 0)), rat_from_json(yr[1], at(at(rpath, 1), 1)));
  }
  return region;
}

json to_json(const planner::SegPath& p) {
  json out = json::array();
  for (const auto& s : p.segments) {
    out.push_back({{"from", to_json(s.from)}, {"to", to_json(s.to)}, {"axis", s.vertical() ? "vertical" : "horizontal"}});
  }
  return out;
}

}  // namespace rcb::io
