#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "redlab/descriptors.hpp"
#include "redlab/errors.hpp"
#include "redlab/hierarchy.hpp"
#include "redlab/points.hpp"
#include "redlab/rational.hpp"
#include "redlab/schedule.hpp"

namespace redlab {

using Json = nlohmann::json;

// Wraps nlohmann parse/access failures into the library's error kind.
template <class Fn>
auto json_guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::malformed, e.what());
  }
}

// ---- rationals: {"num": ..., "den": ...} ----------------------------------

inline Json rational_to_json(const Rational& r) {
  return Json{{"num", to_int64(rat_num(r), "numerator")},
              {"den", to_int64(rat_den(r), "denominator")}};
}

inline Rational rational_from_json(const Json& j) {
  return json_guard([&] {
    const std::int64_t num = j.at("num").get<std::int64_t>();
    const std::int64_t den = j.at("den").get<std::int64_t>();
    require(den != 0, errc::malformed, "zero denominator");
    return Rational(BigInt(num), BigInt(den));
  });
}

// ---- points ----------------------------------------------------------------

inline Json tail_to_json(const Tail& tail) {
  if (const auto* c = std::get_if<ConstantTail>(&tail))
    return Json{{"type", "constant"}, {"c", c->c}};
  const auto& s = std::get<SlopeTail>(tail);
  if (s.slopes.size() == 1) return Json{{"type", "affine"}, {"r", rational_to_json(s.slopes[0])}};
  Json arr = Json::array();
  for (const auto& r : s.slopes) arr.push_back(rational_to_json(r));
  return Json{{"type", "slopes"}, {"slopes", arr}};
}

inline Tail tail_from_json(const Json& j) {
  return json_guard([&]() -> Tail {
    const std::string type = j.at("type").get<std::string>();
    if (type == "constant") return ConstantTail{j.at("c").get<std::uint64_t>()};
    if (type == "affine") return SlopeTail{{rational_from_json(j.at("r"))}};
    if (type == "slopes") {
      std::vector<Rational> slopes;
      for (const auto& r : j.at("slopes")) slopes.push_back(rational_from_json(r));
      return SlopeTail{std::move(slopes)};
    }
    fail(errc::malformed, "unknown tail type '" + type + "'");
  });
}

inline Json to_json(const PointX0& p) {
  return Json{{"space", "X0"}, {"prefix", p.prefix()}, {"tail", tail_to_json(p.tail())}};
}

inline PointX0 point_x0_from_json(const Json& j) {
  return json_guard([&] {
    require(j.at("space") == "X0", errc::type_mismatch, "expected an X0 point");
    return PointX0(j.at("prefix").get<std::vector<std::uint64_t>>(),
                   tail_from_json(j.at("tail")));
  });
}

inline Json to_json(const BitPoint& p) {
  return Json{{"space", "Cantor"}, {"prefix", p.prefix()}, {"tail", {{"period", p.period()}}}};
}

inline BitPoint bit_point_from_json(const Json& j) {
  return json_guard([&] {
    require(j.at("space") == "Cantor", errc::type_mismatch, "expected a Cantor point");
    return make_bit_point(j.at("prefix").get<std::vector<int>>(),
                          j.at("tail").at("period").get<std::vector<int>>());
  });
}

inline Json to_json(const RealSeqPoint& p) {
  Json prefix = Json::array();
  for (const auto& r : p.prefix()) prefix.push_back(rational_to_json(r));
  Json period = Json::array();
  for (const auto& r : p.period()) period.push_back(rational_to_json(r));
  return Json{{"space", "RSeq"}, {"prefix", prefix}, {"tail", {{"period", period}}}};
}

inline RealSeqPoint real_seq_point_from_json(const Json& j) {
  return json_guard([&] {
    require(j.at("space") == "RSeq", errc::type_mismatch, "expected an RSeq point");
    std::vector<Rational> prefix, period;
    for (const auto& r : j.at("prefix")) prefix.push_back(rational_from_json(r));
    for (const auto& r : j.at("tail").at("period")) period.push_back(rational_from_json(r));
    return RealSeqPoint(std::move(prefix), std::move(period));
  });
}

inline Json to_json(const CycleListPoint& p) {
  Json values = Json::array();
  for (const auto& v : p.values()) values.push_back(rational_to_json(v));
  return Json{{"space", "Pomega"},
              {"values", values},
              {"interval", {{"lo", rational_to_json(p.lo())}, {"hi", rational_to_json(p.hi())}}}};
}

inline CycleListPoint cycle_list_point_from_json(const Json& j) {
  return json_guard([&] {
    require(j.at("space") == "Pomega", errc::type_mismatch, "expected a Pomega point");
    std::vector<Rational> values;
    for (const auto& v : j.at("values")) values.push_back(rational_from_json(v));
    return CycleListPoint(std::move(values), rational_from_json(j.at("interval").at("lo")),
                          rational_from_json(j.at("interval").at("hi")));
  });
}

// ---- schedules --------------------------------------------------------------

inline Json to_json(const ParamSchedule& s) {
  Json k = Json::array(), log_k = Json::array(), p_seq = Json::array();
  for (const auto& b : s.blocks) {
    if (b.dim)
      k.push_back(*b.dim);
    else
      k.push_back(nullptr);
    log_k.push_back(b.log_dim);
    p_seq.push_back(b.p);
  }
  return Json{{"flavor", flavor_name(s.flavor)}, {"base_p", s.base_p}, {"n_max", s.n_max},
              {"K", k},           {"logK", log_k},       {"p_seq", p_seq}};
}

inline ParamSchedule schedule_from_json(const Json& j) {
  return json_guard([&] {
    ParamSchedule s;
    const std::string flavor = j.at("flavor").get<std::string>();
    require(flavor == "lp" || flavor == "c0", errc::malformed,
            "flavor must be 'lp' or 'c0'");
    s.flavor = flavor == "lp" ? SumFlavor::lp : SumFlavor::c0;
    s.base_p = j.at("base_p").get<double>();
    s.n_max = j.at("n_max").get<int>();
    const auto& k = j.at("K");
    const auto& log_k = j.at("logK");
    const auto& p_seq = j.at("p_seq");
    require(k.size() == log_k.size() && k.size() == p_seq.size(), errc::malformed,
            "K, logK and p_seq must have equal length");
    for (std::size_t i = 0; i < k.size(); ++i) {
      ScheduleBlock b;
      if (!k[i].is_null()) b.dim = k[i].get<std::uint64_t>();
      b.log_dim = log_k[i].get<double>();
      b.p = p_seq[i].get<double>();
      s.blocks.push_back(b);
    }
    return s;
  });
}

// ---- descriptors ------------------------------------------------------------

inline Json to_json(const SpaceDescriptor& d) {
  Json outer = d.space.is_c0() ? Json{{"type", "c0"}}
                               : Json{{"type", "lp"}, {"p", d.space.outer_exponent().value()}};
  Json blocks = Json::array();
  for (const auto& b : d.space.blocks()) {
    Json jb{{"p", b.exponent.value()}, {"logK", b.log_dim}};
    if (b.has_exact_dim())
      jb["K"] = b.dim;
    else
      jb["K"] = nullptr;
    blocks.push_back(jb);
  }
  return Json{{"outer", outer},
              {"blocks", blocks},
              {"provenance", {{"schedule", to_json(d.schedule)}, {"point", to_json(d.point)}}}};
}

inline SpaceDescriptor space_descriptor_from_json(const Json& j) {
  return json_guard([&] {
    const auto& prov = j.at("provenance");
    return space_for(point_x0_from_json(prov.at("point")),
                     schedule_from_json(prov.at("schedule")));
  });
}

inline Json to_json(const LpSumDescriptor& d) {
  Json parts = Json::array();
  for (const auto& q : d.parts) parts.push_back(rational_to_json(q));
  return Json{{"type", "lp_inf_sum"}, {"base_p", rational_to_json(d.base_p)}, {"parts", parts}};
}

inline Json to_json(const DirectSumDescriptor& d) {
  return Json{{"type", "direct_sum"},
              {"left", to_json(d.left)},
              {"right", to_json(d.right)},
              {"left_base", rational_to_json(d.left_base)}};
}

// ---- hierarchy ---------------------------------------------------------------

inline Json to_json(const RelationGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes())
    nodes.push_back(Json{{"id", n.id}, {"kind", n.canonical ? "canonical" : "derived"}});
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(
        Json{{"from", e.from}, {"to", e.to}, {"strict", e.strict}, {"source", e.source}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

}  // namespace redlab
