#include "coxbraid/links.hpp"

#include <algorithm>
#include <unordered_set>

#include "coxbraid/errors.hpp"

namespace coxbraid {

std::string shadow_str(const Shadow& s) {
  return "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]";
}

std::vector<Shadow> shadows(const CoxeterSystem& sys, const Word& w) {
  sys.validate(w);
  std::vector<Shadow> out;
  for (int i = 1; i + 2 <= w.size(); ++i)
    if (w.letter(i) == w.letter(i + 2) && sys.bond(w.letter(i), w.letter(i + 1)) == 3)
      out.push_back({i, i + 2});
  return out;
}

std::vector<Shadow> class_shadows(const BraidClass& cls) {
  std::set<Shadow> acc;
  for (const Word& w : cls.members())
    for (const Shadow& s : shadows(cls.system(), w)) acc.insert(s);
  return {acc.begin(), acc.end()};
}

int dimension(const BraidClass& cls) { return static_cast<int>(class_shadows(cls).size()); }

int dimension(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  return dimension(BraidClass::of(sys, w, budget));
}

bool is_link(const BraidClass& cls) {
  int m = cls.representative().size();
  if (m == 0) throw ValidationError("the empty word is not eligible as a link");
  if (m == 1) return true;
  if (m % 2 == 0) return false;
  auto cs = class_shadows(cls);
  if (static_cast<int>(cs.size()) != (m - 1) / 2) return false;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (cs[k].lo != static_cast<int>(2 * k + 1)) return false;
  return true;
}

bool is_link(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  return is_link(BraidClass::of(sys, w, budget));
}

int Signature::at(int ordinal) const {
  if (ordinal < 1 || ordinal > size())
    throw ValidationError("signature ordinal " + std::to_string(ordinal) + " out of range 1.." +
                          std::to_string(size()));
  return entries_[static_cast<std::size_t>(ordinal - 1)];
}

std::string Signature::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  out.push_back(')');
  return out;
}

namespace {

Signature signature_at_centers(const Word& w, const std::vector<Shadow>& class_shadow_list) {
  std::vector<int> entries;
  entries.reserve(class_shadow_list.size());
  for (const Shadow& s : class_shadow_list) entries.push_back(w.letter(s.center()));
  return Signature(std::move(entries));
}

}  // namespace

Signature signature(const BraidClass& cls, const Word& member) {
  if (!cls.contains(member))
    throw ValidationError("word '" + member.str() + "' is not in the braid class of '" +
                          cls.representative().str() + "'");
  return signature_at_centers(member, class_shadows(cls));
}

Signature signature(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  auto cls = BraidClass::of(sys, w, budget);
  return signature_at_centers(w, class_shadows(cls));
}

std::vector<Word> sigbar(const BraidClass& cls, const Word& member, int ordinal) {
  if (!cls.contains(member))
    throw ValidationError("word '" + member.str() + "' is not in the braid class");
  auto cs = class_shadows(cls);
  if (ordinal < 1 || ordinal > static_cast<int>(cs.size()))
    throw ValidationError("shadow ordinal " + std::to_string(ordinal) + " out of range 1.." +
                          std::to_string(cs.size()));
  int center = cs[static_cast<std::size_t>(ordinal - 1)].center();
  int want = member.letter(center);
  std::vector<Word> out;
  for (const Word& x : cls.members())
    if (x.letter(center) == want) out.push_back(x);
  return out;
}

std::vector<Word> sigbar_pair(const BraidClass& cls, const Word& a, const Word& b) {
  if (!cls.contains(a) || !cls.contains(b))
    throw ValidationError("sigbar_pair arguments must be braid equivalent members of the class");
  auto cs = class_shadows(cls);
  std::vector<int> fixed_centers;
  for (const Shadow& s : cs)
    if (a.letter(s.center()) == b.letter(s.center())) fixed_centers.push_back(s.center());
  std::vector<Word> out;
  for (const Word& x : cls.members()) {
    bool keep = true;
    for (int c : fixed_centers)
      if (x.letter(c) != a.letter(c)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(x);
  }
  return out;
}

std::set<int> local_support(const Word& w, int i, int j) {
  if (i < 1 || j < i || j > w.size())
    throw ValidationError("support interval " + std::to_string(i) + ".." + std::to_string(j) +
                          " out of range for word of length " + std::to_string(w.size()));
  std::set<int> out;
  for (int p = i; p <= j; ++p) out.insert(w.letter(p));
  return out;
}

std::set<int> class_local_support(const BraidClass& cls, int i, int j) {
  std::set<int> out;
  for (const Word& w : cls.members()) {
    auto sup = local_support(w, i, j);
    out.insert(sup.begin(), sup.end());
  }
  return out;
}

std::string LinkFactorization::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " | ";
    out += factors[i].str();
  }
  return out;
}

LinkFactorization link_factorization(const CoxeterSystem& sys, const Word& w,
                                     std::size_t budget) {
  LinkFactorization fact;
  if (w.empty()) {
    // The identity factors as a single copy of the empty word.
    fact.factors.push_back(Word{});
    fact.cuts.push_back(1);
    return fact;
  }
  auto cls = BraidClass::of(sys, w, budget);
  auto cs = class_shadows(cls);

  // Maximal chains of shadows overlapping by one position; each chain spans
  // a link factor, uncovered positions become length-1 factors.
  std::vector<std::pair<int, int>> spans;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (!spans.empty() && spans.back().second == cs[k].lo)
      spans.back().second = cs[k].hi;
    else
      spans.emplace_back(cs[k].lo, cs[k].hi);
  }
  std::vector<char> covered(static_cast<std::size_t>(w.size()), 0);
  for (auto [lo, hi] : spans)
    for (int p = lo; p <= hi; ++p) covered[static_cast<std::size_t>(p - 1)] = 1;
  for (int p = 1; p <= w.size(); ++p)
    if (!covered[static_cast<std::size_t>(p - 1)]) spans.emplace_back(p, p);
  std::sort(spans.begin(), spans.end());

  for (auto [lo, hi] : spans) {
    fact.factors.push_back(w.factor(lo, hi));
    fact.cuts.push_back(lo);
  }

  // Factor check and reconstruction identity.
  std::vector<BraidClass> factor_classes;
  long long product = 1;
  for (const Word& f : fact.factors) {
    auto fc = BraidClass::of_reduced(sys, f, budget);
    if (!is_link(fc))
      throw InvariantError("factor '" + f.str() + "' of '" + w.str() + "' is not a link");
    product *= fc.size();
    factor_classes.push_back(std::move(fc));
  }
  if (product != cls.size())
    throw InvariantError("factor class sizes do not multiply to the class size of '" + w.str() +
                         "'");
  std::unordered_set<Word, WordHash> rebuilt;
  std::vector<std::size_t> pick(factor_classes.size(), 0);
  while (true) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      auto part = factor_classes[i].members()[pick[i]].letters();
      letters.insert(letters.end(), part.begin(), part.end());
    }
    rebuilt.insert(Word::from_letters(letters));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < static_cast<std::size_t>(factor_classes[i].size())) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  if (rebuilt.size() != static_cast<std::size_t>(cls.size()))
    throw InvariantError("factor concatenations do not rebuild the braid class of '" + w.str() +
                         "'");
  for (const Word& x : cls.members())
    if (!rebuilt.count(x))
      throw InvariantError("braid class member '" + x.str() +
                           "' is not a concatenation of factor class members");
  return fact;
}

}  // namespace coxbraid
