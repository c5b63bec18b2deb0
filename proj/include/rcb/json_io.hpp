#pragma once

#include <json.hpp>
#include <string>

#include "rcb/conic_model.hpp"
#include "rcb/delpezzo.hpp"
#include "rcb/lattice.hpp"
#include "rcb/planner.hpp"
#include "rcb/projline.hpp"
#include "rcb/twist.hpp"

/// JSON encodings of the library types. Rationals are strings "p/q" ("p"
/// when q = 1), infinity is "inf", permutations are 1-based. Decoders take
/// the field path used in error messages and throw SchemaError or
/// ParseError naming it.
namespace rcb::io {

using nlohmann::json;

json to_json(const Rat& v);
Rat rat_from_json(const json& j, const std::string& path);

json to_json(const projline::ProjPoint& p);
projline::ProjPoint proj_point_from_json(const json& j, const std::string& path);

json to_json(const projline::Moebius& m);
projline::Moebius moebius_from_json(const json& j, const std::string& path);

json to_json(const projline::IntervalConfig& c);
projline::IntervalConfig config_from_json(const json& j, const std::string& path);

json perm_to_json(const projline::Permutation& p);
projline::Permutation perm_from_json(const json& j, const std::string& path);

json to_json(const projline::ConfigMatch& m);

json to_json(const conic::ConicModel& m);
conic::ConicModel model_from_json(const json& j, const std::string& path);

json to_json(const conic::SurfPoint& p);
conic::SurfPoint surf_point_from_json(const json& j, const std::string& path);

json to_json(const conic::MarkedModel& m);
conic::MarkedModel marked_from_json(const json& j, const std::string& path);

json to_json(const twist::Rotation& r);
json to_json(const twist::TwistMap& t);
twist::TwistMap twist_from_json(const json& j, const std::string& path);
json to_json(const twist::TwistReport& r);

json to_json(const delpezzo::BinQuadForm& f);
json to_json(const delpezzo::BiconicModel& m);
/// {"m1": [...], "m2": [...], "m3": [...]}; k is taken from "k" when present
/// and otherwise from the number of intervals in the image.
delpezzo::BiconicModel biconic_from_json(const json& j, const std::string& path);
json to_json(const delpezzo::BiPoint& p);
delpezzo::BiPoint bipoint_from_json(const json& j, const std::string& path);

json to_json(const lattice::PicVector& v);

json to_json(const planner::Point2& p);
planner::Point2 point2_from_json(const json& j, const std::string& path);
planner::Region region_from_json(const json& j, const std::string& path);
json to_json(const planner::SegPath& p);

/// Member lookup that reports a missing field by path.
const json& require(const json& j, const std::string& key, const std::string& path);

}  // namespace rcb::io
