#ifndef COXBRAID_LINKS_HPP
#define COXBRAID_LINKS_HPP

#include <set>
#include <string>
#include <vector>

#include "coxbraid/braid.hpp"
#include "coxbraid/coxeter.hpp"
#include "coxbraid/word.hpp"

namespace coxbraid {

/// A braid shadow: the three positions lo..lo+2 holding an sts factor with
/// m(s,t)=3. The center is the middle position.
struct Shadow {
  int lo, hi;

  int center() const { return lo + 1; }

  auto operator<=>(const Shadow&) const = default;
};

std::string shadow_str(const Shadow& s);

/// Shadows of a single word, sorted by center.
std::vector<Shadow> shadows(const CoxeterSystem& sys, const Word& w);

/// Union of shadows over the whole braid class, sorted by center.
std::vector<Shadow> class_shadows(const BraidClass& cls);

/// Number of class shadows.
int dimension(const BraidClass& cls);
int dimension(const CoxeterSystem& sys, const Word& w, std::size_t budget = kDefaultBudget);

/// True iff the word has length 1, or odd length m with class shadows
/// exactly at 1..3, 3..5, ..., m-2..m. Rejects the empty word.
bool is_link(const BraidClass& cls);
bool is_link(const CoxeterSystem& sys, const Word& w, std::size_t budget = kDefaultBudget);

/// The ordered list of generators at the centers of the class shadows.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> entries) : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  /// Entry at 1-based ordinal.
  int at(int ordinal) const;
  const std::vector<int>& entries() const { return entries_; }

  /// "(4,1,2,4)"; "()" when empty.
  std::string str() const;

  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<int> entries_;
};

Signature signature(const BraidClass& cls, const Word& member);
Signature signature(const CoxeterSystem& sys, const Word& w, std::size_t budget = kDefaultBudget);

/// Class members agreeing with `member` at signature ordinal i, sorted.
std::vector<Word> sigbar(const BraidClass& cls, const Word& member, int ordinal);

/// Class members agreeing with `a` at every ordinal where sig(a) and
/// sig(b) agree. Both words must lie in the class.
std::vector<Word> sigbar_pair(const BraidClass& cls, const Word& a, const Word& b);

/// Letter set of w over 1-based positions i..j.
std::set<int> local_support(const Word& w, int i, int j);

/// Union of letter sets over the class at positions i..j.
std::set<int> class_local_support(const BraidClass& cls, int i, int j);

/// The unique decomposition into maximal link factors. Verified on
/// construction: each factor passes is_link and the braid class of the
/// whole word equals the set of concatenations of per-factor class
/// members; a failure of either check is an InvariantError.
struct LinkFactorization {
  std::vector<Word> factors;
  std::vector<int> cuts;  // 1-based start position of each factor

  /// "3231343 | 565 | 787"
  std::string str() const;
};

LinkFactorization link_factorization(const CoxeterSystem& sys, const Word& w,
                                     std::size_t budget = kDefaultBudget);

}  // namespace coxbraid

#endif  // COXBRAID_LINKS_HPP
