#ifndef COXBRAID_CHECKS_HPP
#define COXBRAID_CHECKS_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>
#include <vector>

#include "coxbraid/braid.hpp"
#include "coxbraid/links.hpp"

namespace coxbraid {

/// Structured outcome of one verification check on one instance.
///
/// Checks whose theorems assume a triangle-free system refuse on other
/// systems unless run in exploration mode, where they report what they saw
/// (status Observed) without asserting anything.
struct Report {
  enum class Status { Pass, Fail, Refused, Observed };

  std::string check;
  std::string system;
  std::string word;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;

  struct Stats {
    int vertices = 0;
    int edges = 0;
    int dim = 0;
    int diam = -1;
    int dim_i = -1;
  } stats;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }

  static std::string status_name(Status s);
  nlohmann::json to_json() const;
};

/// Number of positions where two equal-length signatures differ.
int delta(const Signature& a, const Signature& b);

/// Entry-wise two-of-three vote; entry i equals at least two of the three
/// input signatures at i.
Signature majority(const Signature& a, const Signature& b, const Signature& c);

/// Signature of every vertex, indexed like the graph's vertex list.
std::vector<Signature> vertex_signatures(const BraidGraph& bg);

/// Graph distance equals the signature difference count on every vertex
/// pair.
Report verify_distance_formula(const BraidGraph& bg, bool explore = false);

/// Shadow ordinals along one geodesic, in traversal order.
struct MinimalBraidSequence {
  Word source, target;
  std::vector<int> ordinals;
};

/// Extracts a minimal braid sequence from a BFS geodesic and, on
/// triangle-free systems, asserts that its ordinals are pairwise distinct,
/// that they are exactly the differing signature positions, and that every
/// geodesic between the pair uses the same ordinal set.
MinimalBraidSequence minimal_sequence(const BraidGraph& bg, const Word& a, const Word& b);

/// Every edge's halfspaces equal the matching sigbar sets, every edge
/// class equals the set of edges with its label, and sigbar sets are
/// convex.
Report semicube_sigbar_check(const BraidGraph& bg, bool explore = false);

/// The braid graph is a partial cube whose isometric dimension equals the
/// class dimension; the hypercube embedding is verified exhaustively.
Report verify_dimI_equals_dim(const BraidGraph& bg, bool explore = false);

/// 4-cycles have equal opposite labels with disjoint shadows, vertices of
/// degree >= 3 lie on 4-cycles, trees are paths, opposite edges of
/// even isometric cycles match, and every convex cycle has length 4.
Report cycle_laws_check(const BraidGraph& bg, bool explore = false);

/// BFS interval between a and b equals the sigbar set of the pair.
Report interval_sigbar_check(const BraidGraph& bg, const Word& a, const Word& b,
                             bool explore = false);

/// interval_sigbar_check over every vertex pair.
Report interval_sigbar_check_all(const BraidGraph& bg, bool explore = false);

/// The unique class member whose signature is the entry-wise majority of
/// the three inputs; cross-checked against the graph median. The three
/// words must be braid equivalent; the system must be triangle free.
Word median_via_majority(const CoxeterSystem& sys, const Word& a, const Word& b, const Word& c,
                         std::size_t budget = kDefaultBudget);
Word median_via_majority(const BraidGraph& bg, const Word& a, const Word& b, const Word& c);

/// Majority medians agree with graph medians on sampled triples
/// (`samples` triples drawn with the given seed, or all triples when the
/// class is small).
Report median_majority_check(const BraidGraph& bg, int samples, std::uint64_t seed,
                             bool explore = false);

/// The braid graph is isomorphic, label-preservingly and via the explicit
/// concatenation bijection, to the box product of its link factors' braid
/// graphs.
Report factorization_box_check(const CoxeterSystem& sys, const Word& w,
                               std::size_t budget = kDefaultBudget);

/// Pairwise-intersecting sigbar sets have a common element. Family members
/// are given as (class member, shadow ordinal) pairs. A family that is not
/// pairwise intersecting is a precondition violation, not a Helly failure.
Report helly_check(const BraidGraph& bg, const std::vector<std::pair<Word, int>>& family,
                   bool explore = false);

/// The braid graph is median, and each link factor's graph contracts to a
/// single vertex through the top-shadow sigbar split (reverse peripheral
/// contractions).
Report median_graph_check(const CoxeterSystem& sys, const Word& w, bool explore = false,
                          std::size_t budget = kDefaultBudget);

}  // namespace coxbraid

#endif  // COXBRAID_CHECKS_HPP
