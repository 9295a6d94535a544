#ifndef COXBRAID_LAB_HPP
#define COXBRAID_LAB_HPP

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coxbraid/checks.hpp"

namespace coxbraid {

/// Builds a system from either the named shorthand "FAMILY:RANK"
/// (A:3, D:4, affA:2, affD:4) or a textual spec ("n=3; 3: (1,2)(2,3)").
CoxeterSystem system_from_text(std::string_view text);

/// What to enumerate and how. Exhaustive mode walks every braid class of
/// reduced words up to max_length (one representative per class); random
/// mode grows `count` reduced words of length max_length from `seed`.
struct InstanceSpec {
  enum class Mode { Exhaustive, Random };

  std::string system;
  Mode mode = Mode::Exhaustive;
  int max_length = 0;
  std::uint64_t seed = 0;
  int count = 0;
  int min_dimension = 0;
  bool links_only = false;
  bool explore = false;
  std::size_t budget = kDefaultBudget;
  std::size_t sigbar_triple_cap = 100000;

  static InstanceSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Braid-class representatives matching the spec, ordered by (length,
/// word). Throws BudgetError when enumeration exceeds the node budget.
std::vector<Word> generate_instances(const CoxeterSystem& sys, const InstanceSpec& spec);

/// Diameter equals dimension.
Report check_diam_eq_dim(const BraidGraph& bg, bool explore = false);

/// The geodesic closure of some 2-set covers all vertices (1-set for the
/// singleton graph); for links the covering pair is additionally unique.
Report check_geodetic_number_two(const BraidGraph& bg, bool explore = false);

/// Links have exactly one vertex pair realizing the diameter.
Report check_unique_diametrical_pair(const BraidGraph& bg, bool explore = false);

/// No triple of sigbar sets is pairwise disjoint. Enumerates distinct sets;
/// samples triples with `seed` when more than `cap` exist.
Report check_sigbar_triples(const BraidGraph& bg, std::size_t cap, std::uint64_t seed,
                            bool explore = false);

/// Names accepted in sweep configurations.
extern const std::vector<std::string> kSweepCheckNames;

struct SweepReport {
  InstanceSpec spec;
  std::string system_label;
  int instances = 0;
  std::vector<Report> results;           // instance-major, check order as requested
  std::vector<Report> counterexamples;   // failed conjecture checks
  bool invariant_failure = false;
  std::string invariant_message;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Runs the named conjecture checks over every generated instance. Each
/// instance is first re-verified against the theorem-backed layer
/// (distance formula, partial cube with matching isometric dimension,
/// median); a violation there marks the sweep as an implementation bug
/// and stops it, which is distinct from a conjecture counterexample.
/// Instances are distributed over `workers` threads (0 = auto); the
/// report does not depend on the worker count.
SweepReport run_sweep(const CoxeterSystem& sys, const InstanceSpec& spec,
                      const std::vector<std::string>& checks, int workers = 0);

}  // namespace coxbraid

#endif  // COXBRAID_LAB_HPP
