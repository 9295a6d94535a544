#include "coxbraid/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>

#include "coxbraid/errors.hpp"

namespace coxbraid {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::AffineA: return "affA";
    case Family::AffineD: return "affD";
  }
  return "?";
}

CoxeterSystem::CoxeterSystem(int n, std::string name)
    : n_(n), bonds_(static_cast<std::size_t>(n) * n, 2), name_(std::move(name)) {
  for (int s = 1; s <= n; ++s) bonds_[static_cast<std::size_t>(s - 1) * n_ + (s - 1)] = 1;
}

int CoxeterSystem::bond(int s, int t) const {
  if (s < 1 || s > n_ || t < 1 || t > n_)
    throw ValidationError("generator index out of range 1.." + std::to_string(n_));
  return bonds_[static_cast<std::size_t>(s - 1) * n_ + (t - 1)];
}

CoxeterSystem CoxeterSystem::from_bonds(int n, const std::vector<std::pair<int, int>>& bond3_pairs,
                                        std::string name) {
  if (n < 1 || n > 255)
    throw ValidationError("generator count must be in 1..255; got " + std::to_string(n));
  CoxeterSystem sys(n, std::move(name));
  for (auto [s, t] : bond3_pairs) {
    if (s < 1 || s > n || t < 1 || t > n)
      throw ValidationError("bond generator index out of range 1.." + std::to_string(n));
    if (s == t)
      throw ValidationError("self-loop bond (" + std::to_string(s) + "," + std::to_string(t) + ")");
    sys.bonds_[static_cast<std::size_t>(s - 1) * n + (t - 1)] = 3;
    sys.bonds_[static_cast<std::size_t>(t - 1) * n + (s - 1)] = 3;
  }
  return sys;
}

CoxeterSystem CoxeterSystem::named(Family f, int rank) {
  auto reject = [&](int minimum) {
    if (rank < minimum)
      throw ValidationError("family " + family_name(f) + " requires rank >= " +
                            std::to_string(minimum) + "; got " + std::to_string(rank));
  };
  std::vector<std::pair<int, int>> e;
  int n = rank;
  switch (f) {
    case Family::A:
      reject(1);
      for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      reject(3);
      e.emplace_back(1, 3);
      e.emplace_back(2, 3);
      for (int i = 3; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::AffineA:
      reject(2);
      n = rank + 1;
      for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(1, rank + 1);
      e.emplace_back(rank, rank + 1);
      break;
    case Family::AffineD:
      reject(4);
      n = rank + 1;
      e.emplace_back(1, 3);
      e.emplace_back(2, 3);
      for (int i = 3; i < rank - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(rank - 1, rank);
      e.emplace_back(rank - 1, rank + 1);
      break;
  }
  return from_bonds(n, e, family_name(f) + ":" + std::to_string(rank));
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

bool eat(std::string_view& s, char c) {
  skip_ws(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

int eat_int(std::string_view& s) {
  skip_ws(s);
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front())))
    throw ValidationError("expected integer in system spec near '" + std::string(s.substr(0, 8)) + "'");
  long value = 0;
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
    value = value * 10 + (s.front() - '0');
    if (value > 100000) throw ValidationError("integer too large in system spec");
    s.remove_prefix(1);
  }
  return static_cast<int>(value);
}

}  // namespace

CoxeterSystem CoxeterSystem::parse(std::string_view spec) {
  std::string_view s = spec;
  if (!eat(s, 'n') || !eat(s, '='))
    throw ValidationError("system spec must start with 'n=<count>'");
  int n = eat_int(s);
  std::vector<std::pair<int, int>> pairs;
  if (eat(s, ';')) {
    skip_ws(s);
    if (!s.empty()) {
      int bond_value = eat_int(s);
      if (bond_value != 3)
        throw ValidationError("only bond value 3 may be listed; got " + std::to_string(bond_value));
      if (!eat(s, ':')) throw ValidationError("expected ':' after bond value");
      while (true) {
        skip_ws(s);
        if (s.empty() || s.front() == ';') break;
        if (!eat(s, '(')) throw ValidationError("expected '(' in bond list");
        int a = eat_int(s);
        if (!eat(s, ',')) throw ValidationError("expected ',' in bond pair");
        int b = eat_int(s);
        if (!eat(s, ')')) throw ValidationError("expected ')' in bond pair");
        pairs.emplace_back(a, b);
      }
      eat(s, ';');
    }
  }
  skip_ws(s);
  if (!s.empty())
    throw ValidationError("trailing text in system spec: '" + std::string(s.substr(0, 16)) + "'");
  return from_bonds(n, pairs);
}

std::string CoxeterSystem::spec_text() const {
  std::string out = "n=" + std::to_string(n_);
  std::string edges;
  for (int s = 1; s <= n_; ++s)
    for (int t = s + 1; t <= n_; ++t)
      if (bond(s, t) == 3)
        edges += "(" + std::to_string(s) + "," + std::to_string(t) + ")";
  if (!edges.empty()) out += "; 3: " + edges;
  return out;
}

bool CoxeterSystem::triangle_free() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b) {
      if (bond(a, b) != 3) continue;
      for (int c = b + 1; c <= n_; ++c)
        if (bond(a, c) == 3 && bond(b, c) == 3) return false;
    }
  return true;
}

bool CoxeterSystem::valid(const Word& w) const {
  for (int i = 1; i <= w.size(); ++i)
    if (w.letter(i) < 1 || w.letter(i) > n_) return false;
  return true;
}

void CoxeterSystem::validate(const Word& w) const {
  for (int i = 1; i <= w.size(); ++i)
    if (w.letter(i) < 1 || w.letter(i) > n_)
      throw ValidationError("letter " + std::to_string(w.letter(i)) + " at position " +
                            std::to_string(i) + " out of range 1.." + std::to_string(n_));
}

std::vector<MoveSite> enumerate_move_sites(const CoxeterSystem& sys, const Word& w) {
  sys.validate(w);
  std::vector<MoveSite> sites;
  int m = w.size();
  for (int i = 1; i < m; ++i) {
    if (sys.commutations_enabled() && sys.bond(w.letter(i), w.letter(i + 1)) == 2)
      sites.push_back({MoveKind::Commutation, i});
    if (i + 2 <= m && w.letter(i) == w.letter(i + 2) &&
        sys.bond(w.letter(i), w.letter(i + 1)) == 3)
      sites.push_back({MoveKind::Braid, i});
  }
  return sites;
}

Word apply_move(const CoxeterSystem& sys, const Word& w, const MoveSite& site) {
  sys.validate(w);
  int i = site.position;
  if (site.kind == MoveKind::Commutation) {
    if (i < 1 || i + 1 > w.size())
      throw ValidationError("commutation site position " + std::to_string(i) + " out of range");
    if (!sys.commutations_enabled())
      throw ValidationError("commutation moves are disabled on this system");
    if (sys.bond(w.letter(i), w.letter(i + 1)) != 2)
      throw ValidationError("letters at positions " + std::to_string(i) + "," +
                            std::to_string(i + 1) + " do not commute (m != 2)");
    Word out = w;
    out.swap_at(i);
    return out;
  }
  if (i < 1 || i + 2 > w.size())
    throw ValidationError("braid site position " + std::to_string(i) + " out of range");
  if (w.letter(i) != w.letter(i + 2))
    throw ValidationError("letters at positions " + std::to_string(i) + ".." +
                          std::to_string(i + 2) + " are not of the form sts");
  if (sys.bond(w.letter(i), w.letter(i + 1)) != 3)
    throw ValidationError("letters at positions " + std::to_string(i) + "," +
                          std::to_string(i + 1) + " have no braid relation (m != 3)");
  Word out = w;
  out.braid_at(i);
  return out;
}

namespace detail {

// Breadth-first closure under the requested move kinds. `visit` sees every
// discovered word (the seed first) and may stop the search by returning true.
// Returns true when stopped early.
bool closure_scan(const CoxeterSystem& sys, const Word& seed, bool commutations, bool braids,
                  std::size_t budget, std::vector<Word>& out,
                  const std::function<bool(const Word&)>& visit) {
  std::unordered_set<Word, WordHash> seen;
  seen.insert(seed);
  out.clear();
  out.push_back(seed);
  int m = seed.size();
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    Word cur = out[qi];
    if (visit && visit(cur)) return true;
    for (int i = 1; i < m; ++i) {
      if (commutations && sys.commutations_enabled() &&
          sys.bond(cur.letter(i), cur.letter(i + 1)) == 2) {
        Word nxt = cur;
        nxt.swap_at(i);
        if (seen.insert(nxt).second) {
          if (seen.size() > budget)
            throw BudgetError("move closure of '" + seed.str() + "' exceeded the node budget",
                              budget);
          out.push_back(std::move(nxt));
        }
      }
      if (braids && i + 2 <= m && cur.letter(i) == cur.letter(i + 2) &&
          sys.bond(cur.letter(i), cur.letter(i + 1)) == 3) {
        Word nxt = cur;
        nxt.braid_at(i);
        if (seen.insert(nxt).second) {
          if (seen.size() > budget)
            throw BudgetError("move closure of '" + seed.str() + "' exceeded the node budget",
                              budget);
          out.push_back(std::move(nxt));
        }
      }
    }
  }
  return false;
}

std::vector<Word> closure(const CoxeterSystem& sys, const Word& seed, bool commutations,
                          bool braids, std::size_t budget) {
  std::vector<Word> out;
  closure_scan(sys, seed, commutations, braids, budget, out, nullptr);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

std::vector<Word> tits_closure(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  sys.validate(w);
  return detail::closure(sys, w, true, true, budget);
}

bool is_reduced(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  sys.validate(w);
  if (w.has_adjacent_repeat()) return false;
  std::vector<Word> scratch;
  bool found = detail::closure_scan(sys, w, true, true, budget, scratch,
                                    [](const Word& x) { return x.has_adjacent_repeat(); });
  return !found;
}

Word reduce(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  sys.validate(w);
  Word cur = w;
  while (true) {
    Word witness;
    std::vector<Word> scratch;
    bool found = detail::closure_scan(sys, cur, true, true, budget, scratch,
                                      [&](const Word& x) {
                                        if (!x.has_adjacent_repeat()) return false;
                                        witness = x;
                                        return true;
                                      });
    if (!found) return cur;
    int pos = 1;
    while (witness.letter(pos) != witness.letter(pos + 1)) ++pos;
    cur = witness.without_pair(pos);
  }
}

}  // namespace coxbraid
