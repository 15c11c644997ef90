#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apls/graph.hpp"

namespace apls {

/// Outcome of the planarity test together with its certificate: a rotation
/// system (clockwise neighbour order per vertex) when planar, or the edge set
/// of a Kuratowski subdivision (K5 or K3,3) when not.
struct PlanarityResult {
  bool planar = false;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<Edge> kuratowski;
};

PlanarityResult test_planarity(const BoundedDegreeGraph& g);
bool is_planar(const BoundedDegreeGraph& g);
bool is_forest(const BoundedDegreeGraph& g);

/// Graph predicates usable by the locally-P verifier and the edit-distance bound.
enum class Predicate { planar, acyclic, always_true };

bool evaluate(Predicate p, const BoundedDegreeGraph& g);
std::string_view to_string(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);

}  // namespace apls
