#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "apls/graph.hpp"

namespace apls {

// Vertex (i, j) of a grid is i * cols + j.
struct GridSpec {
  int rows = 0;
  int cols = 0;
};
struct PathSpec {
  int n = 0;
};
struct CycleSpec {
  int n = 0;
};
// Root 0; children of v are branching*v + 1 .. branching*v + branching.
struct FullTreeSpec {
  int branching = 2;
  int depth = 0;
};
struct RandomRegularSpec {
  int n = 0;
  int degree = 3;
  std::uint64_t seed = 0;
};

using FamilySpec = std::variant<GridSpec, PathSpec, CycleSpec, FullTreeSpec, RandomRegularSpec>;

/// Degree bound d the family is declared in.
int declared_degree(const FamilySpec& spec);

/// Deterministic for a fixed spec. Throws InfeasibleSpec.
BoundedDegreeGraph generate(const FamilySpec& spec);

/// Identifies g as exactly (same ids, same edges) one of the deterministic
/// families: path, cycle, grid, full tree. Random regular graphs are never
/// recognized.
std::optional<FamilySpec> recognize_family(const BoundedDegreeGraph& g);

std::string describe(const FamilySpec& spec);

}  // namespace apls
