#include "apls/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <algorithm>
#include <iterator>

namespace apls {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const BoundedDegreeGraph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
  int index = 0;
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, index++, bg);
  return bg;
}

bool planar_edges(Vertex n, const std::vector<Edge>& edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  int index = 0;
  for (const Edge& e : edges) boost::add_edge(e.u, e.v, index++, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// The obstruction reported by boyer_myrvold can carry stray edges. An
// edge-minimal nonplanar subgraph is exactly a Kuratowski subdivision.
std::vector<Edge> minimize_obstruction(Vertex n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<Edge> without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (planar_edges(n, without)) {
      ++i;
    } else {
      edges = std::move(without);
    }
  }
  return edges;
}

}  // namespace

PlanarityResult test_planarity(const BoundedDegreeGraph& g) {
  PlanarityResult result;
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(bg));
  std::vector<BoostEdge> obstruction;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(obstruction));
  if (result.planar) {
    result.rotation.resize(embedding.size());
    for (std::size_t v = 0; v < embedding.size(); ++v) {
      for (const BoostEdge& e : embedding[v]) {
        const auto a = static_cast<Vertex>(boost::source(e, bg));
        const auto b = static_cast<Vertex>(boost::target(e, bg));
        result.rotation[v].push_back(a == static_cast<Vertex>(v) ? b : a);
      }
    }
  } else {
    for (const BoostEdge& e : obstruction) {
      result.kuratowski.push_back(
          Edge::make(static_cast<Vertex>(boost::source(e, bg)), static_cast<Vertex>(boost::target(e, bg))));
    }
    std::sort(result.kuratowski.begin(), result.kuratowski.end());
    result.kuratowski = minimize_obstruction(g.num_vertices(), std::move(result.kuratowski));
  }
  return result;
}

bool is_planar(const BoundedDegreeGraph& g) {
  // Planar graphs on n >= 3 vertices have at most 3n - 6 edges.
  if (g.num_vertices() >= 3 && g.num_edges() > 3 * static_cast<std::size_t>(g.num_vertices()) - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_forest(const BoundedDegreeGraph& g) {
  return g.num_edges() + components(g).size() == static_cast<std::size_t>(g.num_vertices());
}

bool evaluate(Predicate p, const BoundedDegreeGraph& g) {
  switch (p) {
    case Predicate::planar:
      return is_planar(g);
    case Predicate::acyclic:
      return is_forest(g);
    case Predicate::always_true:
      return true;
  }
  return false;
}

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::planar:
      return "planar";
    case Predicate::acyclic:
      return "acyclic";
    case Predicate::always_true:
      return "true";
  }
  return "?";
}

std::optional<Predicate> parse_predicate(std::string_view name) {
  if (name == "planar") return Predicate::planar;
  if (name == "acyclic" || name == "forest") return Predicate::acyclic;
  if (name == "true" || name == "always-true") return Predicate::always_true;
  return std::nullopt;
}

}  // namespace apls
