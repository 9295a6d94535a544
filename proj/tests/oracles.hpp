#ifndef COXBRAID_TESTS_ORACLES_HPP
#define COXBRAID_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by tests. They are kept
// deliberately independent of the library: plain containers, recursion from
// the definitions, no shared helpers.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Wd = std::vector<int>;

struct Sys {
  int n = 0;
  std::set<std::pair<int, int>> bond3;  // normalized (min,max)

  int m(int s, int t) const {
    if (s == t) return 1;
    return bond3.count({std::min(s, t), std::max(s, t)}) ? 3 : 2;
  }
};

inline Sys sys_a(int n) {
  Sys s{n, {}};
  for (int i = 1; i < n; ++i) s.bond3.insert({i, i + 1});
  return s;
}

inline Sys sys_d(int n) {
  Sys s{n, {{1, 3}, {2, 3}}};
  for (int i = 3; i < n; ++i) s.bond3.insert({i, i + 1});
  return s;
}

inline Sys sys_aff_a(int n) {
  Sys s = sys_a(n);
  s.n = n + 1;
  s.bond3.insert({1, n + 1});
  s.bond3.insert({std::min(n, n + 1), std::max(n, n + 1)});
  return s;
}

// All words one move away, straight from the definition.
inline std::set<Wd> moves(const Sys& sys, const Wd& w, bool commutations, bool braids) {
  std::set<Wd> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (commutations && sys.m(w[i], w[i + 1]) == 2) {
      Wd x = w;
      std::swap(x[i], x[i + 1]);
      out.insert(x);
    }
    if (braids && i + 2 < w.size() && w[i] == w[i + 2] && sys.m(w[i], w[i + 1]) == 3) {
      Wd x = w;
      x[i] = w[i + 1];
      x[i + 1] = w[i];
      x[i + 2] = w[i + 1];
      out.insert(x);
    }
  }
  return out;
}

inline void closure_rec(const Sys& sys, const Wd& w, bool commutations, bool braids,
                        std::set<Wd>& seen) {
  if (!seen.insert(w).second) return;
  for (const Wd& x : moves(sys, w, commutations, braids))
    closure_rec(sys, x, commutations, braids, seen);
}

inline std::set<Wd> closure(const Sys& sys, const Wd& w, bool commutations = true,
                            bool braids = true) {
  std::set<Wd> seen;
  closure_rec(sys, w, commutations, braids, seen);
  return seen;
}

inline bool reduced(const Sys& sys, const Wd& w) {
  for (const Wd& x : closure(sys, w))
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] == x[i + 1]) return false;
  return true;
}

// Type-A words act on permutations of 1..n+1; a word is reduced iff the
// inversion count of its product equals its length.
inline std::vector<int> permutation_of(int n, const Wd& w) {
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  std::iota(p.begin(), p.end(), 1);
  for (int g : w) std::swap(p[static_cast<std::size_t>(g - 1)], p[static_cast<std::size_t>(g)]);
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  return count;
}

inline bool reduced_type_a(int n, const Wd& w) {
  return inversions(permutation_of(n, w)) == static_cast<int>(w.size());
}

// Undirected-graph helpers on adjacency sets.
using Adj = std::map<int, std::set<int>>;

inline Adj adj_of(const std::vector<std::pair<int, int>>& edges) {
  Adj a;
  for (auto [u, v] : edges) {
    a[u].insert(v);
    a[v].insert(u);
  }
  return a;
}

inline std::map<int, int> bfs(const Adj& a, int src) {
  std::map<int, int> dist{{src, 0}};
  std::vector<int> frontier{src};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier)
      for (int v : a.at(u))
        if (!dist.count(v)) {
          dist[v] = dist[u] + 1;
          next.push_back(v);
        }
    frontier = next;
  }
  return dist;
}

inline std::set<int> interval(const Adj& a, int u, int v) {
  auto du = bfs(a, u);
  auto dv = bfs(a, v);
  std::set<int> out;
  for (const auto& [x, d] : du)
    if (dv.count(x) && d + dv.at(x) == du.at(v)) out.insert(x);
  return out;
}

inline std::set<int> median_candidates(const Adj& a, int u, int v, int w) {
  auto iuv = interval(a, u, v);
  auto iuw = interval(a, u, w);
  auto ivw = interval(a, v, w);
  std::set<int> out;
  for (int x : iuv)
    if (iuw.count(x) && ivw.count(x)) out.insert(x);
  return out;
}

inline bool median_graph(const Adj& a) {
  for (const auto& [u, nu] : a)
    for (const auto& [v, nv] : a)
      for (const auto& [w, nw] : a)
        if (median_candidates(a, u, v, w).size() != 1) return false;
  return true;
}

// Brute-force isomorphism with degree pruning; fine for the graph sizes in
// these tests.
inline bool isomorphic_rec(const Adj& a, const Adj& b, std::vector<int>& order,
                           std::map<int, int>& assign, std::set<int>& used, std::size_t i) {
  if (i == order.size()) return true;
  int u = order[i];
  for (const auto& [v, nv] : b) {
    if (used.count(v) || nv.size() != a.at(u).size()) continue;
    bool ok = true;
    for (const auto& [w, img] : assign) {
      bool e1 = a.at(u).count(w) > 0;
      bool e2 = nv.count(img) > 0;
      if (e1 != e2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    assign[u] = v;
    used.insert(v);
    if (isomorphic_rec(a, b, order, assign, used, i + 1)) return true;
    assign.erase(u);
    used.erase(v);
  }
  return false;
}

inline bool isomorphic(const Adj& a, const Adj& b) {
  if (a.size() != b.size()) return false;
  std::multiset<std::size_t> da, db;
  for (const auto& [u, nu] : a) da.insert(nu.size());
  for (const auto& [v, nv] : b) db.insert(nv.size());
  if (da != db) return false;
  std::vector<int> order;
  for (const auto& [u, nu] : a) order.push_back(u);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.at(x).size() > a.at(y).size(); });
  std::map<int, int> assign;
  std::set<int> used;
  return isomorphic_rec(a, b, order, assign, used, 0);
}

}  // namespace oracle

#endif  // COXBRAID_TESTS_ORACLES_HPP
