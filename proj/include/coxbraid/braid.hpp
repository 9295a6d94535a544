#ifndef COXBRAID_BRAID_HPP
#define COXBRAID_BRAID_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "coxbraid/coxeter.hpp"
#include "coxbraid/graph.hpp"
#include "coxbraid/word.hpp"

namespace coxbraid {

/// The set of words reachable from a reduced word by braid moves only.
/// Members are sorted lexicographically; the representative is the least.
class BraidClass {
 public:
  /// Builds the class of w, rejecting non-reduced input.
  static BraidClass of(const CoxeterSystem& sys, const Word& w,
                       std::size_t budget = kDefaultBudget);

  /// Builds the class of a word the caller guarantees to be reduced
  /// (skips the reducedness search).
  static BraidClass of_reduced(const CoxeterSystem& sys, const Word& w,
                               std::size_t budget = kDefaultBudget);

  const CoxeterSystem& system() const { return system_; }
  const std::vector<Word>& members() const { return members_; }
  const Word& representative() const { return members_.front(); }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(const Word& w) const;
  /// 0-based index of w among the sorted members, or -1.
  int index_of(const Word& w) const;

 private:
  BraidClass(CoxeterSystem sys, std::vector<Word> members)
      : system_(std::move(sys)), members_(std::move(members)) {}

  CoxeterSystem system_;
  std::vector<Word> members_;
};

/// Closure of a reduced word under commutation moves only, sorted.
std::vector<Word> commutation_class(const CoxeterSystem& sys, const Word& w,
                                    std::size_t budget = kDefaultBudget);

/// All reduced expressions of the element of w (closure under both move
/// kinds), sorted.
std::vector<Word> reduced_expressions(const CoxeterSystem& sys, const Word& w,
                                      std::size_t budget = kDefaultBudget);

/// One edge of a braid graph: endpoint indices u < v into the vertex list
/// and the 1-based ordinal of the braid shadow the move occurs in.
struct LabeledEdge {
  int u, v, label;

  auto operator<=>(const LabeledEdge&) const = default;
};

/// The braid graph of a reduced word: vertices are the braid class in
/// lexicographic order, one edge per single braid move, each edge labeled
/// with the ordinal (1..dim) of its shadow among the class shadows ordered
/// left to right. Simple, connected, bipartite.
class BraidGraph {
 public:
  static BraidGraph of(const CoxeterSystem& sys, const Word& w,
                       std::size_t budget = kDefaultBudget);
  static BraidGraph of(BraidClass cls);

  const BraidClass& braid_class() const { return class_; }
  const CoxeterSystem& system() const { return class_.system(); }
  const std::vector<Word>& vertices() const { return class_.members(); }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  /// Sorted 1-based center positions of the class shadows; entry j-1 is
  /// the center of the shadow with ordinal j.
  const std::vector<int>& shadow_centers() const { return centers_; }
  int dimension() const { return static_cast<int>(centers_.size()); }
  int vertex_count() const { return class_.size(); }

  /// Unlabeled adjacency view for the generic graph toolkit.
  const Graph& skeleton() const { return skeleton_; }

  /// Label of the edge {u, v}, or -1 when not an edge.
  int edge_label(int u, int v) const;

  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  BraidGraph(BraidClass cls, std::vector<LabeledEdge> edges, std::vector<int> centers,
             Graph skeleton)
      : class_(std::move(cls)),
        edges_(std::move(edges)),
        centers_(std::move(centers)),
        skeleton_(std::move(skeleton)) {}

  BraidClass class_;
  std::vector<LabeledEdge> edges_;
  std::vector<int> centers_;
  Graph skeleton_;
};

struct KindedEdge {
  int u, v;
  MoveKind kind;

  auto operator<=>(const KindedEdge&) const = default;
};

/// All reduced expressions of an element with edges for single moves of
/// either kind. Connected and bipartite.
class MatsumotoGraph {
 public:
  static MatsumotoGraph of(const CoxeterSystem& sys, const Word& w,
                           std::size_t budget = kDefaultBudget);

  const CoxeterSystem& system() const { return system_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<KindedEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  const Graph& skeleton() const { return skeleton_; }

  /// Number of connected components after deleting all edges of `deleted`.
  /// Deleting commutation edges yields the braid classes; deleting braid
  /// edges yields the commutation classes.
  int component_count_without(MoveKind deleted) const;

  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  MatsumotoGraph(CoxeterSystem sys, std::vector<Word> vertices, std::vector<KindedEdge> edges,
                 Graph skeleton)
      : system_(std::move(sys)),
        vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        skeleton_(std::move(skeleton)) {}

  CoxeterSystem system_;
  std::vector<Word> vertices_;
  std::vector<KindedEdge> edges_;
  Graph skeleton_;
};

}  // namespace coxbraid

#endif  // COXBRAID_BRAID_HPP
