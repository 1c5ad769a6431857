#include "sofic/labeled_graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <thread>

namespace sofic {

// --- LabeledGraph -----------------------------------------------------------

LabeledGraph::LabeledGraph(std::vector<std::string> labels,
                           std::vector<std::string> vertices,
                           const std::vector<std::array<std::string, 3>>& edges)
    : labels_(std::move(labels)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  std::map<std::string, uint32_t> vertex_of;
  for (uint32_t i = 0; i < vertices_.size(); ++i) vertex_of[vertices_[i]] = i;
  std::map<std::string, uint32_t> label_of;
  for (uint32_t i = 0; i < labels_.size(); ++i) {
    if (!label_of.emplace(labels_[i], i).second) {
      throw ValidationError("graph: duplicate label '" + labels_[i] + "'");
    }
  }
  std::set<Edge> edge_set;
  for (const auto& [u, l, v] : edges) {
    auto ui = vertex_of.find(u);
    auto vi = vertex_of.find(v);
    auto li = label_of.find(l);
    if (ui == vertex_of.end() || vi == vertex_of.end()) {
      throw ValidationError("graph: edge endpoint not a declared vertex");
    }
    if (li == label_of.end()) {
      throw ValidationError("graph: edge label '" + l + "' not declared");
    }
    edge_set.insert(Edge{ui->second, li->second, vi->second});
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const Edge& e : edges_) {
    out_[e.source].push_back(e);
    in_[e.target].push_back(e);
  }
  for (auto& adj : out_) {
    std::sort(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.label, a.target) < std::tie(b.label, b.target);
    });
  }
  for (auto& adj : in_) {
    std::sort(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.label, a.source) < std::tie(b.label, b.source);
    });
  }
}

bool LabeledGraph::has_vertex(const std::string& name) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), name);
}

uint32_t LabeledGraph::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) {
    throw DomainError("graph: unknown vertex '" + name + "'");
  }
  return static_cast<uint32_t>(it - vertices_.begin());
}

bool LabeledGraph::has_edge(uint32_t source, uint32_t label,
                            uint32_t target) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            Edge{source, label, target});
}

bool LabeledGraph::deterministic() const {
  for (const auto& adj : out_) {
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].label == adj[i - 1].label) return false;
    }
  }
  return true;
}

std::vector<std::array<std::string, 3>> LabeledGraph::edge_triples() const {
  std::vector<std::array<std::string, 3>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    out.push_back({vertices_[e.source], labels_[e.label], vertices_[e.target]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Balls ------------------------------------------------------------------

namespace {

std::vector<uint32_t> reachable_set(const LabeledGraph& g, uint32_t start,
                                    unsigned radius) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<uint32_t> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    if (static_cast<unsigned>(dist[u]) == radius) continue;
    for (const auto& e : g.out_edges(u)) {
      if (dist[e.target] < 0) {
        dist[e.target] = dist[u] + 1;
        queue.push_back(e.target);
      }
    }
  }
  std::vector<uint32_t> inside;
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] >= 0) inside.push_back(v);
  }
  return inside;
}

PointedBall induced_ball(const LabeledGraph& g,
                         const std::vector<uint32_t>& inside,
                         const std::string& center, unsigned radius) {
  std::vector<bool> member(g.vertex_count(), false);
  for (uint32_t v : inside) member[v] = true;
  std::vector<std::string> vertices;
  vertices.reserve(inside.size());
  for (uint32_t v : inside) vertices.push_back(g.vertex_name(v));
  std::vector<std::array<std::string, 3>> edges;
  for (uint32_t v : inside) {
    for (const auto& e : g.out_edges(v)) {
      if (member[e.target]) {
        edges.push_back({g.vertex_name(e.source), g.label_name(e.label),
                         g.vertex_name(e.target)});
      }
    }
  }
  LabeledGraph sub(g.labels(), std::move(vertices), edges);
  bool det = sub.deterministic();
  return PointedBall{std::move(sub), center, radius, det};
}

}  // namespace

PointedBall vertex_ball(const LabeledGraph& g, const std::string& center,
                        unsigned radius) {
  const uint32_t start = g.vertex_index(center);
  return induced_ball(g, reachable_set(g, start, radius), center, radius);
}

PointedBall cayley_ball_graph(const MonoidHandle& handle, unsigned radius,
                              std::size_t budget) {
  std::vector<Element> ball = elements_ball(handle, radius, budget);
  std::set<std::string> inside;
  for (const Element& e : ball) inside.insert(to_string(e));
  std::vector<std::array<std::string, 3>> edges;
  for (const Element& e : ball) {
    for (std::size_t i = 0; i < handle.generator_count(); ++i) {
      Element next = multiply(e, handle.generator(i));
      std::string target = to_string(next);
      if (inside.count(target)) {
        edges.push_back(
            {to_string(e), handle.generator_labels()[i], target});
      }
    }
  }
  LabeledGraph sub(handle.generator_labels(),
                   std::vector<std::string>(inside.begin(), inside.end()),
                   edges);
  bool det = sub.deterministic();
  return PointedBall{std::move(sub), to_string(handle.identity()), radius,
                     det};
}

// --- Pointed isomorphism ----------------------------------------------------

namespace {

// label -> (out-degree, in-degree, loop count); the cheap invariant used to
// prune candidate images.
using Signature = std::vector<std::array<uint32_t, 3>>;

Signature signature_of(const LabeledGraph& g, uint32_t v,
                       std::size_t label_count,
                       const std::map<std::string, uint32_t>& label_ids) {
  Signature sig(label_count, {0, 0, 0});
  for (const auto& e : g.out_edges(v)) {
    uint32_t l = label_ids.at(g.label_name(e.label));
    ++sig[l][0];
    if (e.target == e.source) ++sig[l][2];
  }
  for (const auto& e : g.in_edges(v)) {
    ++sig[label_ids.at(g.label_name(e.label))][1];
  }
  return sig;
}

// Collects the union of edge labels actually used by both graphs so label
// indices can be compared across graphs.
std::map<std::string, uint32_t> shared_label_ids(const LabeledGraph& a,
                                                 const LabeledGraph& b) {
  std::set<std::string> names;
  for (const auto& e : a.edges()) names.insert(a.label_name(e.label));
  for (const auto& e : b.edges()) names.insert(b.label_name(e.label));
  std::map<std::string, uint32_t> ids;
  for (const auto& n : names) {
    ids.emplace(n, static_cast<uint32_t>(ids.size()));
  }
  return ids;
}

bool full_check(const LabeledGraph& a, const LabeledGraph& b,
                const std::vector<uint32_t>& image) {
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<bool> used(b.vertex_count(), false);
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    if (used[image[v]]) return false;
    used[image[v]] = true;
  }
  std::vector<uint32_t> label_a_to_b(a.labels().size(), UINT32_MAX);
  for (uint32_t i = 0; i < a.labels().size(); ++i) {
    auto it = std::find(b.labels().begin(), b.labels().end(), a.labels()[i]);
    if (it != b.labels().end()) {
      label_a_to_b[i] = static_cast<uint32_t>(it - b.labels().begin());
    }
  }
  for (const auto& e : a.edges()) {
    if (label_a_to_b[e.label] == UINT32_MAX) return false;
    if (!b.has_edge(image[e.source], label_a_to_b[e.label], image[e.target])) {
      return false;
    }
  }
  // Edge counts agree and the mapped edges are distinct, so the image of
  // the edge set is exactly b's edge set.
  return true;
}

std::vector<uint32_t> bfs_order(const LabeledGraph& g, uint32_t start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<uint32_t> order;
  std::deque<uint32_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (const auto& e : g.out_edges(u)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        queue.push_back(e.target);
      }
    }
  }
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) order.push_back(v);
  }
  return order;
}

struct IsoSearch {
  const LabeledGraph& a;
  const LabeledGraph& b;
  std::vector<uint32_t> order;       // a-vertices, center first
  std::vector<Signature> sig_a;
  std::vector<Signature> sig_b;
  std::vector<uint32_t> label_a_to_b;  // a label index -> b label index
  std::size_t budget;
  std::size_t nodes = 0;
  std::size_t max_solutions;
  std::vector<std::vector<uint32_t>> solutions;

  static constexpr uint32_t kUnset = UINT32_MAX;

  bool consistent(const std::vector<uint32_t>& image, uint32_t v,
                  uint32_t w) const {
    // every edge between v and an already-mapped vertex must exist in b
    for (const auto& e : a.out_edges(v)) {
      if (image[e.target] != kUnset &&
          !b.has_edge(w, label_a_to_b[e.label], image[e.target])) {
        return false;
      }
    }
    for (const auto& e : a.in_edges(v)) {
      if (image[e.source] != kUnset &&
          !b.has_edge(image[e.source], label_a_to_b[e.label], w)) {
        return false;
      }
    }
    return true;
  }

  void search(std::size_t depth, std::vector<uint32_t>& image,
              std::vector<bool>& used, uint32_t center_b) {
    if (solutions.size() >= max_solutions) return;
    if (++nodes > budget) {
      throw BudgetError("pointed_isomorphism: node budget exceeded");
    }
    if (depth == order.size()) {
      if (full_check(a, b, image)) solutions.push_back(image);
      return;
    }
    const uint32_t v = order[depth];
    const bool is_center = depth == 0;
    for (uint32_t w = 0; w < b.vertex_count(); ++w) {
      if (used[w]) continue;
      if (is_center && w != center_b) continue;
      if (sig_a[v] != sig_b[w]) continue;
      if (!consistent(image, v, w)) continue;
      image[v] = w;
      used[w] = true;
      search(depth + 1, image, used, center_b);
      image[v] = kUnset;
      used[w] = false;
      if (solutions.size() >= max_solutions) return;
    }
  }
};

std::vector<std::vector<uint32_t>> run_backtracking(
    const PointedBall& ball_a, const PointedBall& ball_b,
    std::size_t max_solutions, std::size_t node_budget) {
  const LabeledGraph& a = ball_a.graph;
  const LabeledGraph& b = ball_b.graph;
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return {};
  }
  auto label_ids = shared_label_ids(a, b);
  // a-labels must all exist in b for any edge-preserving map
  std::vector<uint32_t> label_a_to_b(a.labels().size(), UINT32_MAX);
  for (uint32_t i = 0; i < a.labels().size(); ++i) {
    auto it = std::find(b.labels().begin(), b.labels().end(), a.labels()[i]);
    if (it != b.labels().end()) {
      label_a_to_b[i] = static_cast<uint32_t>(it - b.labels().begin());
    }
  }
  for (const auto& e : a.edges()) {
    if (label_a_to_b[e.label] == UINT32_MAX) return {};
  }

  IsoSearch search{a, b, {}, {}, {}, label_a_to_b, node_budget, 0,
                   max_solutions, {}};
  search.order = bfs_order(a, a.vertex_index(ball_a.center));
  search.sig_a.resize(a.vertex_count());
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    search.sig_a[v] = signature_of(a, v, label_ids.size(), label_ids);
  }
  search.sig_b.resize(b.vertex_count());
  for (uint32_t v = 0; v < b.vertex_count(); ++v) {
    search.sig_b[v] = signature_of(b, v, label_ids.size(), label_ids);
  }
  std::vector<uint32_t> image(a.vertex_count(), IsoSearch::kUnset);
  std::vector<bool> used(b.vertex_count(), false);
  search.search(0, image, used, b.vertex_index(ball_b.center));
  return search.solutions;
}

// Synchronized traversal for deterministic sources: images are forced label
// by label from the centers, then verified.
std::optional<std::vector<uint32_t>> deterministic_match(
    const PointedBall& ball_a, const PointedBall& ball_b) {
  const LabeledGraph& a = ball_a.graph;
  const LabeledGraph& b = ball_b.graph;
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  if (!b.deterministic()) return std::nullopt;
  std::vector<uint32_t> label_a_to_b(a.labels().size(), UINT32_MAX);
  for (uint32_t i = 0; i < a.labels().size(); ++i) {
    auto it = std::find(b.labels().begin(), b.labels().end(), a.labels()[i]);
    if (it != b.labels().end()) {
      label_a_to_b[i] = static_cast<uint32_t>(it - b.labels().begin());
    }
  }
  std::vector<uint32_t> image(a.vertex_count(), UINT32_MAX);
  const uint32_t start = a.vertex_index(ball_a.center);
  image[start] = b.vertex_index(ball_b.center);
  std::deque<uint32_t> queue{start};
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    for (const auto& e : a.out_edges(u)) {
      if (label_a_to_b[e.label] == UINT32_MAX) return std::nullopt;
      const uint32_t bl = label_a_to_b[e.label];
      // unique b-edge from image[u] with this label
      uint32_t target = UINT32_MAX;
      for (const auto& be : b.out_edges(image[u])) {
        if (be.label == bl) {
          target = be.target;
          break;
        }
      }
      if (target == UINT32_MAX) return std::nullopt;
      if (image[e.target] == UINT32_MAX) {
        image[e.target] = target;
        queue.push_back(e.target);
      } else if (image[e.target] != target) {
        return std::nullopt;
      }
    }
  }
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    if (image[v] == UINT32_MAX) return std::nullopt;  // unreachable vertex
  }
  if (!full_check(a, b, image)) return std::nullopt;
  return image;
}

std::map<std::string, std::string> image_to_map(const LabeledGraph& a,
                                                const LabeledGraph& b,
                                                const std::vector<uint32_t>&
                                                    image) {
  std::map<std::string, std::string> out;
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    out[a.vertex_name(v)] = b.vertex_name(image[v]);
  }
  return out;
}

}  // namespace

namespace {

bool all_reachable_from_center(const PointedBall& ball) {
  const LabeledGraph& g = ball.graph;
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<uint32_t> queue{g.vertex_index(ball.center)};
  seen[queue.front()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(u)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        ++count;
        queue.push_back(e.target);
      }
    }
  }
  return count == g.vertex_count();
}

}  // namespace

std::optional<std::map<std::string, std::string>> pointed_isomorphism(
    const PointedBall& a, const PointedBall& b, std::size_t node_budget) {
  // Balls produced by vertex_ball/cayley_ball_graph are always reachable
  // from their center; the check guards hand-built inputs, for which the
  // synchronized traversal would not be forced.
  if (a.deterministic && all_reachable_from_center(a)) {
    auto image = deterministic_match(a, b);
    if (!image) return std::nullopt;
    return image_to_map(a.graph, b.graph, *image);
  }
  auto solutions = run_backtracking(a, b, 1, node_budget);
  if (solutions.empty()) return std::nullopt;
  return image_to_map(a.graph, b.graph, solutions.front());
}

std::size_t count_pointed_isomorphisms(const PointedBall& a,
                                       const PointedBall& b,
                                       std::size_t max_count,
                                       std::size_t node_budget) {
  return run_backtracking(a, b, max_count, node_budget).size();
}

// --- Good vertices / Weiss check ---------------------------------------------

GoodVertexData good_vertex_isomorphisms(const LabeledGraph& g,
                                        const MonoidHandle& handle,
                                        unsigned radius, unsigned jobs) {
  const PointedBall cayley = cayley_ball_graph(handle, radius);
  GoodVertexData data;
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<std::map<std::string, std::string>>> found(n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      PointedBall ball = vertex_ball(g, g.vertices()[i], radius);
      found[i] = pointed_isomorphism(cayley, ball);
    }
  };

  if (jobs <= 1 || n < 2) {
    work(0, n);
  } else {
    const unsigned workers = std::min<std::size_t>(jobs, n);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin < end) {
        threads.emplace_back([&, t, begin, end] {
          try {
            work(begin, end);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& th : threads) th.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (found[i]) {
      data.good.push_back(g.vertices()[i]);
      data.isomorphisms[g.vertices()[i]] = std::move(*found[i]);
    }
  }
  return data;
}

std::vector<std::string> good_vertex_set(const LabeledGraph& g,
                                         const MonoidHandle& handle,
                                         unsigned radius, unsigned jobs) {
  return good_vertex_isomorphisms(g, handle, radius, jobs).good;
}

WeissReport weiss_check(const LabeledGraph& g, const MonoidHandle& handle,
                        unsigned radius, const Fraction& delta,
                        unsigned jobs) {
  if (g.vertex_count() == 0) {
    throw DomainError("weiss_check: graph has no vertices");
  }
  WeissReport report;
  report.radius = radius;
  report.delta = delta;
  report.vertex_count = g.vertex_count();
  report.good = good_vertex_set(g, handle, radius, jobs);
  report.ratio = Fraction(static_cast<long long>(report.good.size()),
                          static_cast<long long>(g.vertex_count()));
  report.pass = report.ratio >= Fraction::one() - delta;
  return report;
}

// --- Families ----------------------------------------------------------------

namespace {

std::string padded(std::size_t value, std::size_t max_value) {
  std::size_t width = 1;
  while (max_value >= 10) {
    max_value /= 10;
    ++width;
  }
  std::string digits = std::to_string(value);
  return std::string(width - digits.size(), '0') + digits;
}

}  // namespace

LabeledGraph fan_graph(std::size_t x_count) {
  if (x_count == 0) throw DomainError("fan_graph: need at least one vertex");
  std::vector<std::string> vertices{"a"};
  std::vector<std::array<std::string, 3>> edges{{"a", "a", "a"}};
  for (std::size_t i = 0; i < x_count; ++i) {
    std::string x = "x" + padded(i, x_count - 1);
    vertices.push_back(x);
    edges.push_back({x, "a", "a"});
  }
  return LabeledGraph({"a"}, std::move(vertices), edges);
}

LabeledGraph schreier_graph(unsigned n) {
  if (n == 0) throw DomainError("schreier_graph: n must be positive");
  if (n > 20) throw BudgetError("schreier_graph: n > 20 (2^n vertices)");
  const std::size_t count = std::size_t{1} << n;
  auto bits = [n](std::size_t value) {
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i) {
      if (value & (std::size_t{1} << (n - 1 - i))) s[i] = '1';
    }
    return s;
  };
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  const std::size_t mask = count - 1;
  for (std::size_t v = 0; v < count; ++v) {
    vertices.push_back(bits(v));
    edges.push_back({bits(v), "a", bits(~v & mask)});
    edges.push_back({bits(v), "c0", bits(0)});
  }
  return LabeledGraph({"a", "c0"}, std::move(vertices), edges);
}

LabeledGraph cycle_graph(std::size_t n) {
  if (n == 0) throw DomainError("cycle_graph: n must be positive");
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  for (std::size_t k = 0; k < n; ++k) {
    vertices.push_back(padded(k, n - 1));
    edges.push_back({padded(k, n - 1), "1", padded((k + 1) % n, n - 1)});
  }
  return LabeledGraph({"1"}, std::move(vertices), edges);
}

LabeledGraph path_graph(std::size_t n) {
  if (n == 0) throw DomainError("path_graph: n must be positive");
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  for (std::size_t k = 0; k < n; ++k) {
    vertices.push_back(padded(k, n - 1));
    if (k + 1 < n) {
      edges.push_back({padded(k, n - 1), "1", padded(k + 1, n - 1)});
    }
  }
  return LabeledGraph({"1"}, std::move(vertices), edges);
}

LabeledGraph random_deterministic_graph(std::vector<std::string> labels,
                                        std::size_t n_vertices,
                                        uint64_t seed) {
  if (n_vertices == 0) {
    throw DomainError("random graph: need at least one vertex");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    vertices.push_back("v" + padded(v, n_vertices - 1));
  }
  std::vector<std::array<std::string, 3>> edges;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    for (const std::string& label : labels) {
      const std::size_t target = rng() % n_vertices;
      edges.push_back({vertices[v], label, vertices[target]});
    }
  }
  return LabeledGraph(std::move(labels), std::move(vertices), edges);
}

// --- Halving check ------------------------------------------------------------

HalvingReport bicyclic_halving_check(const LabeledGraph& g, unsigned radius,
                                     unsigned jobs) {
  if (radius < 2) {
    throw DomainError("bicyclic_halving_check: requires r >= 2");
  }
  const auto& labels = g.labels();
  if (std::find(labels.begin(), labels.end(), "p") == labels.end()) {
    throw DomainError("bicyclic_halving_check: graph has no label 'p'");
  }
  const uint32_t p_label = static_cast<uint32_t>(
      std::find(labels.begin(), labels.end(), "p") - labels.begin());

  HalvingReport report;
  report.radius = radius;
  report.vertex_count = g.vertex_count();
  report.good = good_vertex_set(g, MonoidHandle::bicyclic(), radius, jobs);
  std::set<std::string> good_set(report.good.begin(), report.good.end());

  std::set<std::string> successor_targets;
  for (const std::string& v : report.good) {
    std::vector<uint32_t> targets;
    for (const auto& e : g.out_edges(g.vertex_index(v))) {
      if (e.label == p_label) targets.push_back(e.target);
    }
    if (targets.size() != 1) {
      // a good vertex's ball is isomorphic to the Cayley ball, which has
      // exactly one p-edge at the center
      throw ValidationError("bicyclic_halving_check: good vertex '" + v +
                            "' has " + std::to_string(targets.size()) +
                            " p-edges");
    }
    const std::string& target = g.vertex_name(targets[0]);
    report.successor[v] = target;
    if (good_set.count(target)) {
      report.issues.push_back("p-successor of good vertex '" + v +
                              "' stays in V(r)");
    }
    if (!successor_targets.insert(target).second) {
      report.issues.push_back("p-successor map collides at '" + target + "'");
    }
  }
  if (2 * report.good.size() > report.vertex_count) {
    report.issues.push_back("|V(r)| > |V|/2");
  }
  report.pass = report.issues.empty();
  return report;
}

}  // namespace sofic
