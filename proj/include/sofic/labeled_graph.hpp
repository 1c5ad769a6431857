#ifndef SOFIC_LABELED_GRAPH_HPP_
#define SOFIC_LABELED_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sofic/fraction.hpp"
#include "sofic/monoid.hpp"

namespace sofic {

// A directed graph with labeled edges. Vertex ids are opaque strings and
// are kept sorted; the edge set is a set of (source, label, target)
// triples, so duplicate triples collapse while parallel edges with
// different labels are fine.
class LabeledGraph {
 public:
  struct Edge {
    uint32_t source;
    uint32_t label;
    uint32_t target;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  LabeledGraph(std::vector<std::string> labels,
               std::vector<std::string> vertices,
               const std::vector<std::array<std::string, 3>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& name) const;
  uint32_t vertex_index(const std::string& name) const;
  const std::string& vertex_name(uint32_t index) const {
    return vertices_[index];
  }
  const std::string& label_name(uint32_t index) const {
    return labels_[index];
  }

  // Out-edges of a vertex, sorted by (label, target).
  const std::vector<Edge>& out_edges(uint32_t vertex) const {
    return out_[vertex];
  }
  const std::vector<Edge>& in_edges(uint32_t vertex) const {
    return in_[vertex];
  }
  bool has_edge(uint32_t source, uint32_t label, uint32_t target) const;

  // At most one out-edge per (vertex, label)?
  bool deterministic() const;

  std::vector<std::array<std::string, 3>> edge_triples() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
};

// The induced subgraph on a directed-reachability ball, pointed at its
// center.
struct PointedBall {
  LabeledGraph graph;
  std::string center;
  unsigned radius;
  bool deterministic;
};

// Ball of the given radius around a vertex: all vertices reachable by a
// directed path of length <= r, with every edge among them.
PointedBall vertex_ball(const LabeledGraph& g, const std::string& center,
                        unsigned radius);

// The ball of radius r around the identity in the Cayley graph of the
// handle, as a pointed graph. Edges follow right multiplication by
// generators and stay inside the ball.
PointedBall cayley_ball_graph(const MonoidHandle& handle, unsigned radius,
                              std::size_t budget = kDefaultBallBudget);

inline constexpr std::size_t kDefaultIsoNodeBudget = 1'000'000;

// A pointed label-graph isomorphism from a to b, if one exists: a bijection
// of vertices fixing the centers and preserving labeled edges in both
// directions. Deterministic source balls are matched by synchronized
// traversal (the isomorphism is then unique); otherwise a pruned
// backtracking search runs under a node budget.
std::optional<std::map<std::string, std::string>> pointed_isomorphism(
    const PointedBall& a, const PointedBall& b,
    std::size_t node_budget = kDefaultIsoNodeBudget);

// Number of distinct pointed isomorphisms, capped at max_count; always uses
// the backtracking search.
std::size_t count_pointed_isomorphisms(
    const PointedBall& a, const PointedBall& b, std::size_t max_count,
    std::size_t node_budget = kDefaultIsoNodeBudget);

// Good vertices of g at radius r: those whose r-ball is pointed-isomorphic
// to the Cayley r-ball of the handle. jobs > 1 splits the per-vertex checks
// across threads; the result does not depend on the split.
std::vector<std::string> good_vertex_set(const LabeledGraph& g,
                                         const MonoidHandle& handle,
                                         unsigned radius, unsigned jobs = 1);

// Same, but also returns each good vertex's (unique) isomorphism from the
// Cayley ball, keyed by Cayley vertex name.
struct GoodVertexData {
  std::vector<std::string> good;
  std::map<std::string, std::map<std::string, std::string>> isomorphisms;
};
GoodVertexData good_vertex_isomorphisms(const LabeledGraph& g,
                                        const MonoidHandle& handle,
                                        unsigned radius, unsigned jobs = 1);

struct WeissReport {
  unsigned radius = 0;
  Fraction delta;
  std::size_t vertex_count = 0;
  std::vector<std::string> good;
  Fraction ratio;  // |V(r)| / |V|
  bool pass = false;
};

// Exact test of |V(r)| >= (1 - delta) |V|.
WeissReport weiss_check(const LabeledGraph& g, const MonoidHandle& handle,
                        unsigned radius, const Fraction& delta,
                        unsigned jobs = 1);

// --- Example graph families -------------------------------------------------

// x_count spoke vertices, each with an a-edge into the apex, plus the apex
// loop.
LabeledGraph fan_graph(std::size_t x_count);
// Vertices {0,1}^n; label a flips every coordinate, label c0 sends every
// vertex to the all-zero tuple.
LabeledGraph schreier_graph(unsigned n);
// Directed n-cycle over label "1".
LabeledGraph cycle_graph(std::size_t n);
// Directed path 0 -> 1 -> ... -> n-1 over label "1".
LabeledGraph path_graph(std::size_t n);

// A graph where every vertex has exactly one out-edge per label, targets
// drawn from a seeded generator.
LabeledGraph random_deterministic_graph(std::vector<std::string> labels,
                                        std::size_t n_vertices,
                                        uint64_t seed);

// --- Bicyclic obstruction ----------------------------------------------------

struct HalvingReport {
  unsigned radius = 0;
  std::size_t vertex_count = 0;
  std::vector<std::string> good;
  // p-successor of each good vertex
  std::map<std::string, std::string> successor;
  bool pass = false;
  std::vector<std::string> issues;
};

// Checks, against the bicyclic monoid on {p,q}, that (i) the p-edge of
// every good vertex leaves V(r), (ii) v -> v' is injective on V(r), and
// (iii) |V(r)| <= |V|/2. Requires r >= 2 and a graph labeled over p (and
// whatever else it uses).
HalvingReport bicyclic_halving_check(const LabeledGraph& g, unsigned radius,
                                     unsigned jobs = 1);

}  // namespace sofic

#endif  // SOFIC_LABELED_GRAPH_HPP_
