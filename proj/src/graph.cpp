#include "coxbraid/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "coxbraid/errors.hpp"

namespace coxbraid {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw ValidationError("vertex " + std::to_string(v) + " out of range 0.." +
                          std::to_string(vertex_count() - 1));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    int u, v;
    try {
      u = std::stoi(first);
    } catch (...) {
      throw ValidationError("bad edge-list line: '" + line + "'");
    }
    if (!(ls >> v)) throw ValidationError("bad edge-list line: '" + line + "'");
    if (u < 0 || v < 0) throw ValidationError("edge-list vertices must be non-negative");
    edges.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  return from_edges(n, edges);
}

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw ValidationError("graph JSON needs 'vertices' and 'edges'");
  int n = static_cast<int>(j.at("vertices").size());
  Graph g(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2)
      throw ValidationError("graph JSON edge entries must be [i, j, ...]");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  auto verts = nlohmann::json::array();
  for (int v = 0; v < vertex_count(); ++v) verts.push_back(std::to_string(v));
  j["vertices"] = std::move(verts);
  auto es = nlohmann::json::array();
  for (auto [u, v] : edges()) es.push_back(nlohmann::json::array({u, v}));
  j["edges"] = std::move(es);
  return j;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto& av = adj_[static_cast<std::size_t>(v)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

int Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return static_cast<int>(total / 2);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::bfs_distances(int src) const {
  check_vertex(src);
  std::vector<int> dist(static_cast<std::size_t>(vertex_count()), -1);
  std::deque<int> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_bipartite() const {
  std::vector<int> color(static_cast<std::size_t>(vertex_count()), -1);
  for (int s = 0; s < vertex_count(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> Graph::all_pairs() const {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(vertex_count()));
  for (int v = 0; v < vertex_count(); ++v) {
    d.push_back(bfs_distances(v));
    for (int x : d.back())
      if (x < 0) throw ValidationError("graph is disconnected");
  }
  return d;
}

int Graph::distance(int u, int v) const {
  check_vertex(v);
  int d = bfs_distances(u)[static_cast<std::size_t>(v)];
  if (d < 0) throw ValidationError("graph is disconnected");
  return d;
}

int Graph::diameter() const {
  if (vertex_count() == 0) throw ValidationError("diameter of the empty graph");
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    auto dist = bfs_distances(v);
    for (int x : dist) {
      if (x < 0) throw ValidationError("graph is disconnected");
      best = std::max(best, x);
    }
  }
  return best;
}

std::vector<int> Graph::interval(int u, int v) const {
  auto du = bfs_distances(u);
  if (std::any_of(du.begin(), du.end(), [](int d) { return d < 0; }))
    throw ValidationError("graph is disconnected");
  auto dv = bfs_distances(v);
  int d = du[static_cast<std::size_t>(v)];
  std::vector<int> out;
  for (int x = 0; x < vertex_count(); ++x)
    if (du[static_cast<std::size_t>(x)] + dv[static_cast<std::size_t>(x)] == d)
      out.push_back(x);
  return out;
}

bool Graph::is_convex(const std::vector<int>& set) const {
  if (!connected()) throw ValidationError("graph is disconnected");
  std::vector<char> in(static_cast<std::size_t>(vertex_count()), 0);
  for (int v : set) {
    check_vertex(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (int u : set) {
    auto du = bfs_distances(u);
    for (int v : set) {
      if (v < u) continue;
      int d = du[static_cast<std::size_t>(v)];
      auto dv = bfs_distances(v);
      for (int x = 0; x < vertex_count(); ++x)
        if (!in[static_cast<std::size_t>(x)] &&
            du[static_cast<std::size_t>(x)] + dv[static_cast<std::size_t>(x)] == d)
          return false;
    }
  }
  return true;
}

SemicubePair semicube(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw ValidationError("semicube requires an edge; {" + std::to_string(u) + "," +
                          std::to_string(v) + "} is not one");
  auto du = g.bfs_distances(u);
  auto dv = g.bfs_distances(v);
  SemicubePair sc;
  sc.u = u;
  sc.v = v;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (du[static_cast<std::size_t>(x)] < 0) throw ValidationError("graph is disconnected");
    if (du[static_cast<std::size_t>(x)] < dv[static_cast<std::size_t>(x)])
      sc.w_uv.push_back(x);
    else if (dv[static_cast<std::size_t>(x)] < du[static_cast<std::size_t>(x)])
      sc.w_vu.push_back(x);
  }
  std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int x : sc.w_uv) side[static_cast<std::size_t>(x)] = 1;
  for (int x : sc.w_vu) side[static_cast<std::size_t>(x)] = 2;
  for (int a : sc.w_uv)
    for (int b : g.neighbors(a))
      if (side[static_cast<std::size_t>(b)] == 2) sc.f_uv.emplace_back(a, b);
  std::sort(sc.f_uv.begin(), sc.f_uv.end());
  for (int a : sc.w_uv)
    if (std::any_of(g.neighbors(a).begin(), g.neighbors(a).end(),
                    [&](int b) { return side[static_cast<std::size_t>(b)] == 2; }))
      sc.u_uv.push_back(a);
  for (int b : sc.w_vu)
    if (std::any_of(g.neighbors(b).begin(), g.neighbors(b).end(),
                    [&](int a) { return side[static_cast<std::size_t>(a)] == 1; }))
      sc.u_vu.push_back(b);
  return sc;
}

namespace {

// Raw relation as adjacency over edge indices, via the halfspace test on a
// precomputed distance matrix.
std::vector<std::vector<int>> theta_raw(const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<std::vector<int>>& dist) {
  std::size_t m = edges.size();
  std::vector<std::vector<int>> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [x, y] = edges[i];
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) continue;
      auto [u, v] = edges[k];
      int a = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] -
              dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(y)];
      int b = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] -
              dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(y)];
      if ((a < 0 && b > 0) || (a > 0 && b < 0)) rel[i].push_back(static_cast<int>(k));
    }
  }
  return rel;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

}  // namespace

ThetaPartition theta_classes(const Graph& g) {
  if (!g.connected()) throw ValidationError("graph is disconnected");
  ThetaPartition part;
  part.edges = g.edges();
  auto dist = g.all_pairs();
  auto rel = theta_raw(part.edges, dist);
  std::size_t m = part.edges.size();

  UnionFind uf(m);
  for (std::size_t i = 0; i < m; ++i)
    for (int k : rel[i]) uf.unite(static_cast<int>(i), k);

  // Transitive iff every class is a clique of the raw relation (the raw
  // relation is reflexive and symmetric).
  part.raw_transitive = true;
  std::vector<std::vector<int>> members(m);
  for (std::size_t i = 0; i < m; ++i)
    members[static_cast<std::size_t>(uf.find(static_cast<int>(i)))].push_back(
        static_cast<int>(i));
  for (const auto& cls : members) {
    if (cls.size() < 2) continue;
    for (int i : cls)
      if (rel[static_cast<std::size_t>(i)].size() + 1 != cls.size()) {
        part.raw_transitive = false;
        break;
      }
    if (!part.raw_transitive) break;
  }

  part.edge_class.assign(m, -1);
  int next_id = 0;
  std::vector<int> id(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    int root = uf.find(static_cast<int>(i));
    if (id[static_cast<std::size_t>(root)] < 0) id[static_cast<std::size_t>(root)] = next_id++;
    part.edge_class[i] = id[static_cast<std::size_t>(root)];
  }
  part.class_count = next_id;
  return part;
}

PartialCubeCheck is_partial_cube(const Graph& g) {
  if (!g.connected()) throw ValidationError("graph is disconnected");
  PartialCubeCheck out;
  if (!g.is_bipartite()) {
    out.witness = "graph is not bipartite";
    return out;
  }
  auto part = theta_classes(g);
  bool convex_ok = true;
  std::string convex_witness;
  for (auto [u, v] : part.edges) {
    auto sc = semicube(g, u, v);
    if (!g.is_convex(sc.w_uv)) {
      convex_ok = false;
      convex_witness = "semicube of edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} toward " + std::to_string(u) + " is not convex";
      break;
    }
    if (!g.is_convex(sc.w_vu)) {
      convex_ok = false;
      convex_witness = "semicube of edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} toward " + std::to_string(v) + " is not convex";
      break;
    }
  }
  if (convex_ok != part.raw_transitive)
    throw InvariantError(
        "partial-cube characterizations disagree: semicube convexity says " +
        std::to_string(convex_ok) + ", edge-relation transitivity says " +
        std::to_string(part.raw_transitive));
  out.ok = convex_ok;
  if (!out.ok)
    out.witness = part.raw_transitive ? convex_witness : "edge relation is not transitive";
  return out;
}

int isometric_dimension(const Graph& g) {
  auto check = is_partial_cube(g);
  if (!check.ok) throw ValidationError("not a partial cube: " + check.witness);
  return theta_classes(g).class_count;
}

int HypercubeEmbedding::hamming(int a, int b) const {
  const auto& ca = coords[static_cast<std::size_t>(a)];
  const auto& cb = coords[static_cast<std::size_t>(b)];
  int d = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) d += ca[i] != cb[i];
  return d;
}

HypercubeEmbedding embed_hypercube(const Graph& g) {
  auto check = is_partial_cube(g);
  if (!check.ok) throw ValidationError("not a partial cube: " + check.witness);
  auto part = theta_classes(g);
  HypercubeEmbedding emb;
  emb.dimension = part.class_count;
  int n = g.vertex_count();
  emb.coords.assign(static_cast<std::size_t>(n),
                    std::vector<std::uint8_t>(static_cast<std::size_t>(emb.dimension), 0));
  // Base vertex 0 gets all-zero coordinates; coordinate k of x is 0 iff x
  // lies in the same halfspace as the base for class k.
  std::vector<int> rep(static_cast<std::size_t>(part.class_count), -1);
  for (std::size_t i = 0; i < part.edges.size(); ++i)
    if (rep[static_cast<std::size_t>(part.edge_class[i])] < 0)
      rep[static_cast<std::size_t>(part.edge_class[i])] = static_cast<int>(i);
  for (int k = 0; k < part.class_count; ++k) {
    auto [u, v] = part.edges[static_cast<std::size_t>(rep[static_cast<std::size_t>(k)])];
    auto du = g.bfs_distances(u);
    auto dv = g.bfs_distances(v);
    bool base_closer_to_u = du[0] < dv[0];
    for (int x = 0; x < n; ++x) {
      bool x_closer_to_u = du[static_cast<std::size_t>(x)] < dv[static_cast<std::size_t>(x)];
      emb.coords[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] =
          (x_closer_to_u == base_closer_to_u) ? 0 : 1;
    }
  }
  auto dist = g.all_pairs();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (emb.hamming(a, b) != dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        throw InvariantError("hypercube embedding does not preserve the metric at pair (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
  return emb;
}

std::vector<int> median_triple(const Graph& g, int u, int v, int w) {
  auto du = g.bfs_distances(u);
  if (std::any_of(du.begin(), du.end(), [](int d) { return d < 0; }))
    throw ValidationError("graph is disconnected");
  auto dv = g.bfs_distances(v);
  auto dw = g.bfs_distances(w);
  auto on = [&](const std::vector<int>& da, const std::vector<int>& db, int dab, int x) {
    return da[static_cast<std::size_t>(x)] + db[static_cast<std::size_t>(x)] == dab;
  };
  int duv = du[static_cast<std::size_t>(v)];
  int duw = du[static_cast<std::size_t>(w)];
  int dvw = dv[static_cast<std::size_t>(w)];
  std::vector<int> out;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (on(du, dv, duv, x) && on(du, dw, duw, x) && on(dv, dw, dvw, x)) out.push_back(x);
  return out;
}

MedianCheck median_check(const Graph& g, bool force) {
  if (!g.connected()) throw ValidationError("graph is disconnected");
  if (g.vertex_count() > 2000 && !force)
    throw ValidationError("median test on " + std::to_string(g.vertex_count()) +
                          " vertices needs force=true");
  MedianCheck out;
  auto dist = g.all_pairs();
  int n = g.vertex_count();
  auto on = [&](int a, int b, int x) {
    return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] +
               dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)] ==
           dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      for (int w = v; w < n; ++w) {
        int count = 0;
        for (int x = 0; x < n && count < 2; ++x)
          if (on(u, v, x) && on(u, w, x) && on(v, w, x)) ++count;
        if (count != 1) {
          out.ok = false;
          out.witness = {u, v, w};
          out.median_count = count;
          return out;
        }
      }
  out.ok = true;
  return out;
}

bool is_median_graph(const Graph& g, bool force) { return median_check(g, force).ok; }

Graph box_product(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  Graph g(na * nb);
  auto id = [&](int x, int y) { return x * nb + y; };
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      for (int y2 : b.neighbors(y))
        if (y < y2) g.add_edge(id(x, y), id(x, y2));
      for (int x2 : a.neighbors(x))
        if (x < x2) g.add_edge(id(x, y), id(x2, y));
    }
  return g;
}

Graph peripheral_expansion(const Graph& g, const std::vector<int>& convex_set) {
  if (convex_set.empty()) throw ValidationError("peripheral expansion along the empty set");
  {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : convex_set) {
      if (v < 0 || v >= g.vertex_count()) throw ValidationError("expansion set vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) throw ValidationError("expansion set has duplicates");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (!g.is_convex(convex_set))
    throw ValidationError("peripheral expansion requires a convex set");
  int n = g.vertex_count();
  int k = static_cast<int>(convex_set.size());
  Graph out(n + k);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  std::vector<int> copy_index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i)
    copy_index[static_cast<std::size_t>(convex_set[static_cast<std::size_t>(i)])] = n + i;
  for (int i = 0; i < k; ++i) {
    int u = convex_set[static_cast<std::size_t>(i)];
    out.add_edge(u, n + i);
    for (int v : g.neighbors(u))
      if (copy_index[static_cast<std::size_t>(v)] >= 0 && v > u)
        out.add_edge(n + i, copy_index[static_cast<std::size_t>(v)]);
  }
  return out;
}

std::string cycle_class_name(CycleClass c) {
  switch (c) {
    case CycleClass::Convex: return "convex";
    case CycleClass::IsometricNotConvex: return "isometric-not-convex";
    case CycleClass::Neither: return "neither";
  }
  return "?";
}

CycleClass classify_cycle(const Graph& g, const std::vector<int>& cycle) {
  int len = static_cast<int>(cycle.size());
  if (len < 3) throw ValidationError("a cycle needs at least 3 vertices");
  {
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("cycle repeats a vertex");
  }
  for (int i = 0; i < len; ++i)
    if (!g.adjacent(cycle[static_cast<std::size_t>(i)],
                    cycle[static_cast<std::size_t>((i + 1) % len)]))
      throw ValidationError("cycle vertices " + std::to_string(cycle[static_cast<std::size_t>(i)]) +
                            "," + std::to_string(cycle[static_cast<std::size_t>((i + 1) % len)]) +
                            " are not adjacent");
  bool isometric = true;
  for (int i = 0; i < len && isometric; ++i) {
    auto d = g.bfs_distances(cycle[static_cast<std::size_t>(i)]);
    for (int j = 0; j < len; ++j) {
      int around = std::min(std::abs(i - j), len - std::abs(i - j));
      if (d[static_cast<std::size_t>(cycle[static_cast<std::size_t>(j)])] != around) {
        isometric = false;
        break;
      }
    }
  }
  if (isometric && g.is_convex(cycle)) return CycleClass::Convex;
  if (isometric) return CycleClass::IsometricNotConvex;
  return CycleClass::Neither;
}

std::vector<std::vector<int>> simple_cycles(const Graph& g, std::size_t max_cycles) {
  std::vector<std::vector<int>> cycles;
  int n = g.vertex_count();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;

  // Cycles are rooted at their least vertex; direction is fixed by
  // requiring the second vertex to be smaller than the last.
  auto dfs = [&](auto&& self, int root, int u) -> void {
    for (int v : g.neighbors(u)) {
      if (v == root && path.size() >= 3 && path[1] < path.back()) {
        if (cycles.size() >= max_cycles)
          throw BudgetError("cycle enumeration exceeded the cap", max_cycles);
        cycles.push_back(path);
      }
      if (v <= root || on_path[static_cast<std::size_t>(v)]) continue;
      on_path[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      self(self, root, v);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = 0;
    }
  };

  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path.assign(static_cast<std::size_t>(n), 0);
    on_path[static_cast<std::size_t>(root)] = 1;
    dfs(dfs, root, root);
  }
  return cycles;
}

Graph hypercube(int n) {
  if (n < 0) throw ValidationError("hypercube dimension must be non-negative");
  Graph g(1 << n);
  for (int x = 0; x < (1 << n); ++x)
    for (int b = 0; b < n; ++b)
      if (!(x & (1 << b))) g.add_edge(x, x | (1 << b));
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle graph needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw ValidationError("path graph needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace coxbraid
