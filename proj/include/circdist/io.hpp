#ifndef CIRCDIST_IO_HPP_
#define CIRCDIST_IO_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circdist/error.hpp"
#include "circdist/family.hpp"
#include "circdist/graph.hpp"
#include "circdist/labeling.hpp"
#include "circdist/permutation.hpp"

namespace circdist::io {

/// Insertion-ordered JSON so that emitted field order is canonical.
using Json = nlohmann::ordered_json;

namespace detail {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace detail

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

// Graph: {"n": <int>, "edges": [[u,v],...]} with u < v, sorted.

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  const auto n = detail::field<std::size_t>(j, "n");
  const auto pairs = detail::field<std::vector<std::vector<std::size_t>>>(j, "edges");
  std::vector<Edge> edges;
  for (const auto& pair : pairs) {
    if (pair.size() != 2) throw ValidationError("each edge must be a pair [u, v]");
    edges.emplace_back(std::min(pair[0], pair[1]), std::max(pair[0], pair[1]));
  }
  return Graph::from_edges(n, edges);
}

// Circulant: {"circulant": {"n": <int>, "generators": [...]}}

inline Json to_json(const CirculantSpec& spec) {
  return Json{{"circulant", Json{{"n", spec.order()}, {"generators", spec.generators()}}}};
}

inline CirculantSpec circulant_from_json(const Json& j) {
  const auto body = detail::field<Json>(j, "circulant");
  return CirculantSpec::create(detail::field<std::size_t>(body, "n"),
                               detail::field<std::vector<std::size_t>>(body, "generators"));
}

/// Accepts either a graph document or a circulant document.
inline Graph read_graph_document(const Json& j) {
  if (j.is_object() && j.contains("circulant")) return build_circulant(circulant_from_json(j));
  return graph_from_json(j);
}

// Permutation: {"images": [...]}

inline Json to_json(const Permutation& sigma) { return Json{{"images", sigma.images()}}; }

inline Permutation permutation_from_json(const Json& j) {
  return Permutation(detail::field<std::vector<Vertex>>(j, "images"));
}

// Labeling: {"r": <int>, "labels": [...]}

inline Json to_json(const Labeling& c) { return Json{{"r", c.r()}, {"labels", c.labels()}}; }

inline Labeling labeling_from_json(const Json& j) {
  return Labeling(detail::field<std::size_t>(j, "r"), detail::field<std::vector<std::size_t>>(j, "labels"));
}

// FamilyPlan: {"n": <int>, "members": [{"m":..,"p":..,"target_d":..}], "scaling_k": <int>}

inline Json to_json(const FamilyPlan& plan) {
  Json members = Json::array();
  for (const auto& member : plan.members) {
    members.push_back(Json{{"m", member.spec.m}, {"p", member.spec.p}, {"target_d", member.target_d}});
  }
  return Json{{"n", plan.order}, {"members", std::move(members)}, {"scaling_k", plan.scaling_k}};
}

inline FamilyPlan family_plan_from_json(const Json& j) {
  FamilyPlan plan;
  plan.order = detail::field<std::size_t>(j, "n");
  plan.scaling_k = detail::field<std::size_t>(j, "scaling_k");
  for (const auto& member : detail::field<Json>(j, "members")) {
    FamilyMember parsed{CmpSpec{detail::field<std::size_t>(member, "m"), detail::field<std::size_t>(member, "p")},
                        detail::field<std::size_t>(member, "target_d")};
    plan.targets.push_back(parsed.target_d);
    plan.has_cycle_member = plan.has_cycle_member || parsed.spec.m == 1;
    plan.members.push_back(parsed);
  }
  return plan;
}

inline Json to_json(const DisconnectedPlan& plan) {
  Json members = Json::array();
  for (const auto& member : plan.members) {
    members.push_back(
        Json{{"description", member.description}, {"target_d", member.target_d}, {"graph", to_json(member.graph)}});
  }
  return Json{{"n", plan.order}, {"members", std::move(members)}};
}

// ---------------------------------------------------------------------------
// DOT

inline const std::vector<std::string>& module_palette() {
  static const std::vector<std::string> palette = {"black", "red", "green", "blue", "orange", "purple",
                                                   "brown", "cyan", "magenta", "gold", "gray", "pink"};
  return palette;
}

/// Undirected DOT. With `period` set, vertex v gets the palette color of
/// module v mod period.
inline std::string to_dot(const Graph& g, const std::string& name = "G",
                          std::optional<std::size_t> period = std::nullopt) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (period) {
      const auto& palette = module_palette();
      out << " [color=\"" << palette[(v % *period) % palette.size()] << "\", module=" << v % *period << "]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace circdist::io

#endif  // CIRCDIST_IO_HPP_
