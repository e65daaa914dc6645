#pragma once

// JSON encodings.
//
//   group           {"name": str, "order": n, "table": [[int]]}
//   crossed module  {"name": str, "g": group, "h": group, "boundary": [int], "action": [[int]]}
//   surface         {"name": str, "vertices": [id], "edges": [{"id", "kind", "slot", "tail", "head"}],
//                    "faces": [{"word": [{"edge", "dir"}], "basepoint": int}], "n_in": int, "n_out": int}
//   scalar          {"coeff": "p/q", "half_power": 0|1, "base": int}
//   matrix          {"module": str, "n_in", "n_out", "rows", "cols", "entries": [[scalar]]}
//
// Edge kinds are "in", "out", "cut" and "internal"; "slot" is only read for
// boundary edges. "dir" is "forward" or "reverse". Vertex and edge ids may be
// any distinct integers; they are renumbered densely in list order.

#include <json.hpp>

#include <map>
#include <string>

#include "ccs/crossed_module.hpp"
#include "ccs/surface.hpp"
#include "ccs/tqft.hpp"

namespace ccs {

using Json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

}  // namespace detail

inline Json to_json(const FiniteGroup& g) {
  return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

inline FiniteGroup group_from_json(const Json& j) {
  return detail::parse_guard([&] {
    return build_group(j.at("order").get<std::size_t>(), j.at("table").get<FiniteGroup::Table>(),
                       j.value("name", std::string{}));
  });
}

inline Json to_json(const CrossedModule& cm) {
  return Json{{"name", cm.name()},
              {"g", to_json(cm.g())},
              {"h", to_json(cm.h())},
              {"boundary", cm.boundary().map()},
              {"action", cm.action().table()}};
}

inline CrossedModule crossed_module_from_json(const Json& j) {
  return detail::parse_guard([&] {
    return build_crossed_module(group_from_json(j.at("g")), group_from_json(j.at("h")),
                                j.at("boundary").get<std::vector<elem_t>>(),
                                j.at("action").get<GroupAction::Table>(), j.value("name", std::string{}));
  });
}

inline EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "in") return EdgeKind::in_boundary;
  if (s == "out") return EdgeKind::out_boundary;
  if (s == "cut") return EdgeKind::cut;
  if (s == "internal") return EdgeKind::internal;
  throw Error(Errc::parse_error, "unknown edge kind '" + s + "'");
}

inline Json to_json(const SurfaceComplex& s) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < s.num_vertices; ++v) vertices.push_back(v);
  Json edges = Json::array();
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const Edge& e = s.edges[i];
    Json je{{"id", i}, {"kind", std::string(to_string(e.kind))}};
    if (e.is_boundary()) je["slot"] = e.slot;
    je["tail"] = e.tail;
    je["head"] = e.head;
    edges.push_back(std::move(je));
  }
  Json faces = Json::array();
  for (const Face& f : s.faces) {
    Json word = Json::array();
    for (const EdgeRef& r : f.word) word.push_back({{"edge", r.edge}, {"dir", r.forward ? "forward" : "reverse"}});
    faces.push_back({{"word", std::move(word)}, {"basepoint", f.basepoint}});
  }
  return Json{{"name", s.name},   {"vertices", std::move(vertices)}, {"edges", std::move(edges)},
              {"faces", std::move(faces)}, {"n_in", s.n_in},          {"n_out", s.n_out}};
}

/// Parses and validates.
inline SurfaceComplex surface_from_json(const Json& j) {
  SurfaceComplex s = detail::parse_guard([&] {
    SurfaceComplex out;
    out.name = j.value("name", std::string{});
    std::map<long long, std::size_t> vid, eid;
    for (const Json& v : j.at("vertices")) {
      if (!vid.emplace(v.get<long long>(), vid.size()).second) throw Error(Errc::parse_error, "duplicate vertex id");
    }
    out.num_vertices = vid.size();
    auto vertex = [&](const Json& v) {
      auto it = vid.find(v.get<long long>());
      if (it == vid.end()) throw Error(Errc::parse_error, "unknown vertex id");
      return it->second;
    };
    for (const Json& je : j.at("edges")) {
      Edge e;
      e.kind = edge_kind_from_string(je.at("kind").get<std::string>());
      if (e.is_boundary()) e.slot = je.at("slot").get<std::size_t>();
      e.tail = vertex(je.at("tail"));
      e.head = vertex(je.at("head"));
      if (!eid.emplace(je.at("id").get<long long>(), out.edges.size()).second) {
        throw Error(Errc::parse_error, "duplicate edge id");
      }
      out.edges.push_back(e);
    }
    for (const Json& jf : j.at("faces")) {
      Face f;
      for (const Json& jr : jf.at("word")) {
        auto it = eid.find(jr.at("edge").get<long long>());
        if (it == eid.end()) throw Error(Errc::parse_error, "unknown edge id in face word");
        const Json& dir = jr.at("dir");
        bool forward;
        if (dir.is_string()) {
          const auto d = dir.get<std::string>();
          if (d != "forward" && d != "reverse") throw Error(Errc::parse_error, "dir must be forward or reverse");
          forward = d == "forward";
        } else {
          forward = dir.get<int>() > 0;
        }
        f.word.push_back({it->second, forward});
      }
      f.basepoint = jf.value("basepoint", std::size_t{0});
      out.faces.push_back(std::move(f));
    }
    out.n_in = j.at("n_in").get<std::size_t>();
    out.n_out = j.at("n_out").get<std::size_t>();
    return out;
  });
  validate(s);
  return s;
}

inline Json to_json(const ExactScalar& x) {
  return Json{{"coeff", fraction_string(x.coeff())}, {"half_power", x.half_power()}, {"base", x.base()}};
}

inline ExactScalar scalar_from_json(const Json& j) {
  return detail::parse_guard([&] {
    return ExactScalar(Rational(j.at("coeff").get<std::string>()), j.at("half_power").get<int>(),
                       j.at("base").get<std::uint64_t>());
  });
}

inline Json to_json(const TqftMatrix& z) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < z.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < z.cols(); ++c) row.push_back(to_json(z(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"module", z.module().name()}, {"n_in", z.n_in()}, {"n_out", z.n_out()},
              {"rows", z.rows()},            {"cols", z.cols()}, {"entries", std::move(rows)}};
}

/// Entries as "p/q" or "p/q·√b", one matrix row per line.
inline std::string to_csv(const TqftMatrix& z) {
  std::string out;
  for (std::size_t r = 0; r < z.rows(); ++r) {
    for (std::size_t c = 0; c < z.cols(); ++c) {
      if (c) out += ',';
      out += z(r, c).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace ccs
