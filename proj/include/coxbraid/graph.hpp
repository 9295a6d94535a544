#ifndef COXBRAID_GRAPH_HPP
#define COXBRAID_GRAPH_HPP

#include <array>
#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxbraid {

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
/// Operations that need a metric reject disconnected inputs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Plain edge-list text, one "u v" pair per line, 0-based; blank lines
  /// and lines starting with '#' are skipped.
  static Graph from_edge_list_text(std::string_view text);
  static Graph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool connected() const;
  bool is_bipartite() const;

  std::vector<int> bfs_distances(int src) const;
  /// Full distance matrix; throws on disconnected input.
  std::vector<std::vector<int>> all_pairs() const;
  int distance(int u, int v) const;
  int diameter() const;

  /// Vertices on some geodesic between u and v, sorted.
  std::vector<int> interval(int u, int v) const;
  /// True iff every interval between members of the set stays inside it.
  bool is_convex(const std::vector<int>& set) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
};

/// The halfspace decomposition of an edge {u, v}: vertices strictly closer
/// to u than v and vice versa, their boundary subsets, and the edges
/// joining opposite sides.
struct SemicubePair {
  int u, v;
  std::vector<int> w_uv, w_vu;             // sorted vertex sets
  std::vector<int> u_uv, u_vu;             // boundary subsets
  std::vector<std::pair<int, int>> f_uv;   // edges (a in w_uv, b in w_vu)
};

SemicubePair semicube(const Graph& g, int u, int v);

/// Edge classes of the reflexive-transitive closure of the edge relation
/// that pairs {x,y} with {u,v} whenever {u,v} joins the two halfspaces of
/// {x,y}. `raw_transitive` records whether the closure added anything.
struct ThetaPartition {
  std::vector<std::pair<int, int>> edges;  // graph.edges() order
  std::vector<int> edge_class;             // class id per edge, 0-based
  int class_count = 0;
  bool raw_transitive = false;
};

ThetaPartition theta_classes(const Graph& g);

/// Partial-cube test: bipartite, raw edge relation transitive, and all
/// semicubes convex. The two characterizations must agree; a mismatch is an
/// implementation bug. `witness` names the first failing object when !ok.
struct PartialCubeCheck {
  bool ok = false;
  std::string witness;
};

PartialCubeCheck is_partial_cube(const Graph& g);

/// Number of edge classes; requires a partial cube.
int isometric_dimension(const Graph& g);

/// Binary coordinates of length `dimension` per vertex, with vertex 0 at
/// all-zeros; Hamming distance equals graph distance (verified
/// exhaustively on construction).
struct HypercubeEmbedding {
  int dimension = 0;
  std::vector<std::vector<std::uint8_t>> coords;

  int hamming(int a, int b) const;
};

HypercubeEmbedding embed_hypercube(const Graph& g);

/// Vertices lying on geodesics between all three pairs, sorted.
std::vector<int> median_triple(const Graph& g, int u, int v, int w);

struct MedianCheck {
  bool ok = false;
  std::array<int, 3> witness{-1, -1, -1};  // offending triple when !ok
  int median_count = 0;                    // its triple-intersection size
};

/// Exhaustive triple test. Graphs above 2000 vertices require force=true.
MedianCheck median_check(const Graph& g, bool force = false);
bool is_median_graph(const Graph& g, bool force = false);

Graph box_product(const Graph& a, const Graph& b);

/// Attaches a matched copy of the subgraph induced by `convex_set`
/// (vertices n..n+|U|-1 in input order). Rejects non-convex sets.
Graph peripheral_expansion(const Graph& g, const std::vector<int>& convex_set);

enum class CycleClass { Convex, IsometricNotConvex, Neither };

std::string cycle_class_name(CycleClass c);

/// Classifies a simple cycle (given as its vertex sequence) against the
/// host metric. Rejects sequences that are not simple cycles of g.
CycleClass classify_cycle(const Graph& g, const std::vector<int>& cycle);

/// Every simple cycle, each reported once as a canonical vertex sequence
/// (least vertex first, lesser neighbor second). Throws when more than
/// `max_cycles` exist.
std::vector<std::vector<int>> simple_cycles(const Graph& g, std::size_t max_cycles = 1000000);

/// Hypercube Q_n.
Graph hypercube(int n);
/// Cycle C_n.
Graph cycle_graph(int n);
/// Path P_n on n vertices.
Graph path_graph(int n);

}  // namespace coxbraid

#endif  // COXBRAID_GRAPH_HPP
