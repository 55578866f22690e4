#pragma once
// JSON encodings of graphs, polynomials and check reports.

#include "gainchrom/combinatorics.hpp"
#include "gainchrom/exact_poly.hpp"
#include "gainchrom/gain_graph.hpp"
#include "gainchrom/identities.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace gainchrom {

using Json = nlohmann::json;

/// {"n": 3, "edges": [[1, 2, 0], [2, 2, 1]]}
inline IntegralGainGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs fields \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  std::vector<GainEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("graph JSON edges are [tail, head, gain]");
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Gain>()});
  }
  return IntegralGainGraph(n, std::move(edges));
}

inline Json graph_to_json(const IntegralGainGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.tail, e.head, e.gain});
  return Json{{"n", g.order()}, {"edges", edges}};
}

/// {"n": 3, "edges": [[1, 2], [2, 3]]}
inline SimpleGraph simple_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs fields \"n\" and \"edges\"");
  SimpleGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2) throw std::invalid_argument("simple graph edges are [u, v]");
    g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return g;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

/// Integers that fit in int64 are numbers, the rest decimal strings.
inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

inline Json poly_to_json(const Poly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"dq", e.dq}, {"dz", e.dz}, {"c", int_to_json(c)}});
  return terms;
}

inline Poly2 poly_from_json(const Json& j) {
  Poly2 p;
  for (const auto& t : j) p.add_term({t.at("dq").get<unsigned>(), t.at("dz").get<unsigned>()}, int_from_json(t.at("c")));
  return p;
}

inline Json check_value_to_json(const CheckValue& v) {
  if (const auto* p = std::get_if<Poly2>(&v)) return poly_to_json(*p);
  Json out = Json::array();
  for (const auto& x : std::get<std::vector<Int>>(v)) out.push_back(int_to_json(x));
  return out;
}

inline Json report_to_json(const CheckReport& r) {
  Json j{{"identity", r.identity_id},
         {"instance", r.instance},
         {"pass", r.pass},
         {"lhs", check_value_to_json(r.lhs)},
         {"rhs", check_value_to_json(r.rhs)}};
  if (!r.sample_q.empty()) j["q"] = r.sample_q;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

}  // namespace gainchrom
