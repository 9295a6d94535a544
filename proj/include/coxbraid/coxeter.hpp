#ifndef COXBRAID_COXETER_HPP
#define COXBRAID_COXETER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxbraid/word.hpp"

namespace coxbraid {

/// Default node budget for move-closure searches.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

enum class Family { A, D, AffineA, AffineD };

std::string family_name(Family f);

/// A simply-laced Coxeter system: generator count n plus the symmetric bond
/// values m(s,t) in {2,3} for distinct generators. m(s,s) = 1 is implicit.
class CoxeterSystem {
 public:
  /// A_n path, D_n branch, or the affine extensions thereof, with the
  /// standard vertex labelings. Affine families add generator n+1.
  static CoxeterSystem named(Family f, int rank);

  /// Parses a textual description: "n=3; 3: (1,2)(2,3)". Pairs listed after
  /// "3:" get bond 3; every other pair defaults to 2. Duplicate edges
  /// collapse; self-loops and out-of-range indices are rejected.
  static CoxeterSystem parse(std::string_view spec);

  static CoxeterSystem from_bonds(int n, const std::vector<std::pair<int, int>>& bond3_pairs,
                                  std::string name = "");

  int generators() const { return n_; }

  /// m(s,t): 1 when s == t, otherwise 2 or 3.
  int bond(int s, int t) const;

  const std::string& name() const { return name_; }

  /// Textual form accepted by parse().
  std::string spec_text() const;

  /// True iff no three generators are pairwise bonded with value 3.
  bool triangle_free() const;

  /// When false, commutation moves are disabled globally (every pair with
  /// m(s,t)=2 behaves as m(s,t)=infinity); braid graphs then coincide with
  /// the full move graph of the element. Defaults to true.
  bool commutations_enabled() const { return commutations_enabled_; }
  void set_commutations_enabled(bool enabled) { commutations_enabled_ = enabled; }

  bool valid(const Word& w) const;
  void validate(const Word& w) const;

  bool operator==(const CoxeterSystem& other) const {
    return n_ == other.n_ && bonds_ == other.bonds_;
  }

 private:
  CoxeterSystem(int n, std::string name);

  int n_ = 0;
  std::vector<std::uint8_t> bonds_;  // row-major n*n, entries 1/2/3
  std::string name_;
  bool commutations_enabled_ = true;
};

enum class MoveKind { Commutation, Braid };

/// A site where a move applies: 1-based start position. A commutation site
/// spans positions (i, i+1) with m = 2; a braid site spans (i, i+1, i+2)
/// with equal outer letters and m = 3.
struct MoveSite {
  MoveKind kind;
  int position;

  auto operator<=>(const MoveSite&) const = default;
};

/// Exactly the sites of w where a legal move applies. Braid sites coincide
/// with the braid shadows of w. Commutation sites are omitted when the
/// system has commutations disabled.
std::vector<MoveSite> enumerate_move_sites(const CoxeterSystem& sys, const Word& w);

/// Applies the move at `site`, which must be legal for w. Length is
/// preserved and applying the same-kind move at the same position again
/// restores w.
Word apply_move(const CoxeterSystem& sys, const Word& w, const MoveSite& site);

/// All words reachable from w by sequences of commutation and braid moves,
/// sorted lexicographically. Always finite; contains w. Throws BudgetError
/// when more than `budget` words are generated.
std::vector<Word> tits_closure(const CoxeterSystem& sys, const Word& w,
                               std::size_t budget = kDefaultBudget);

/// True iff no word in the move closure of w has two equal adjacent
/// letters. Short-circuits on the first witness.
bool is_reduced(const CoxeterSystem& sys, const Word& w, std::size_t budget = kDefaultBudget);

/// A reduced word for the same group element, obtained by repeatedly
/// locating a closure member with an adjacent equal pair and deleting it.
Word reduce(const CoxeterSystem& sys, const Word& w, std::size_t budget = kDefaultBudget);

namespace detail {

/// Breadth-first closure under the selected move kinds; sorted result.
std::vector<Word> closure(const CoxeterSystem& sys, const Word& seed, bool commutations,
                          bool braids, std::size_t budget);

}  // namespace detail

}  // namespace coxbraid

#endif  // COXBRAID_COXETER_HPP
