#include "coxbraid/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "coxbraid/errors.hpp"
#include "coxbraid/graph.hpp"

namespace coxbraid {

std::string Report::status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Refused: return "refused";
    case Status::Observed: return "observed";
  }
  return "?";
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["system"] = system;
  j["word"] = word;
  j["status"] = status_name(status);
  j["witnesses"] = witnesses;
  nlohmann::json s;
  s["vertices"] = stats.vertices;
  s["edges"] = stats.edges;
  s["dim"] = stats.dim;
  s["diam"] = stats.diam < 0 ? nlohmann::json() : nlohmann::json(stats.diam);
  s["dimI"] = stats.dim_i < 0 ? nlohmann::json() : nlohmann::json(stats.dim_i);
  j["stats"] = s;
  return j;
}

int delta(const Signature& a, const Signature& b) {
  if (a.size() != b.size())
    throw ValidationError("signature lengths differ: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  int count = 0;
  for (int i = 1; i <= a.size(); ++i) count += a.at(i) != b.at(i);
  return count;
}

Signature majority(const Signature& a, const Signature& b, const Signature& c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw ValidationError("majority needs three signatures of equal length");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i)
    entries.push_back((a.at(i) == b.at(i) || a.at(i) == c.at(i)) ? a.at(i) : b.at(i));
  return Signature(std::move(entries));
}

std::vector<Signature> vertex_signatures(const BraidGraph& bg) {
  std::vector<Signature> sigs;
  sigs.reserve(bg.vertices().size());
  for (const Word& w : bg.vertices()) {
    std::vector<int> entries;
    entries.reserve(bg.shadow_centers().size());
    for (int c : bg.shadow_centers()) entries.push_back(w.letter(c));
    sigs.emplace_back(std::move(entries));
  }
  return sigs;
}

namespace {

std::string system_label(const CoxeterSystem& sys) {
  return sys.name().empty() ? sys.spec_text() : sys.name();
}

Report base_report(std::string check, const BraidGraph& bg) {
  Report r;
  r.check = std::move(check);
  r.system = system_label(bg.system());
  r.word = bg.braid_class().representative().str();
  r.stats.vertices = bg.vertex_count();
  r.stats.edges = static_cast<int>(bg.edges().size());
  r.stats.dim = bg.dimension();
  r.stats.diam = bg.skeleton().diameter();
  return r;
}

// Refusal/observation boilerplate shared by triangle-free-only checks.
// Returns true when the caller must stop and return the refusal.
bool gate_lambda(Report& r, const CoxeterSystem& sys, bool explore) {
  if (sys.triangle_free()) return false;
  if (!explore) {
    r.status = Report::Status::Refused;
    r.witnesses.push_back(
        "system is not triangle-free, outside the hypotheses of this check; "
        "rerun with exploration enabled to observe outcomes");
    return true;
  }
  r.witnesses.push_back("system is not triangle-free; outcomes observed, nothing asserted");
  return false;
}

void finish(Report& r, const CoxeterSystem& sys, bool violations) {
  if (!sys.triangle_free())
    r.status = Report::Status::Observed;
  else
    r.status = violations ? Report::Status::Fail : Report::Status::Pass;
}

// All geodesics from a to b as vertex index sequences.
std::vector<std::vector<int>> all_geodesics(const Graph& g, int a, int b) {
  auto da = g.bfs_distances(a);
  std::vector<std::vector<int>> out;
  std::vector<int> path{b};
  auto walk = [&](auto&& self, int v) -> void {
    if (v == a) {
      out.emplace_back(path.rbegin(), path.rend());
      if (out.size() > 100000)
        throw BudgetError("geodesic enumeration exceeded the cap", 100000);
      return;
    }
    for (int u : g.neighbors(v)) {
      if (da[static_cast<std::size_t>(u)] + 1 != da[static_cast<std::size_t>(v)]) continue;
      path.push_back(u);
      self(self, u);
      path.pop_back();
    }
  };
  walk(walk, b);
  return out;
}

}  // namespace

Report verify_distance_formula(const BraidGraph& bg, bool explore) {
  Report r = base_report("distance-formula", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  auto sigs = vertex_signatures(bg);
  auto dist = bg.skeleton().all_pairs();
  bool violated = false;
  for (int i = 0; i < bg.vertex_count() && !violated; ++i)
    for (int j = i + 1; j < bg.vertex_count(); ++j) {
      int d = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      int dl = delta(sigs[static_cast<std::size_t>(i)], sigs[static_cast<std::size_t>(j)]);
      if (d != dl) {
        r.witnesses.push_back("pair (" + bg.vertices()[static_cast<std::size_t>(i)].str() + ", " +
                              bg.vertices()[static_cast<std::size_t>(j)].str() + "): distance " +
                              std::to_string(d) + " != signature difference " +
                              std::to_string(dl));
        violated = true;
        break;
      }
    }
  finish(r, bg.system(), violated);
  return r;
}

MinimalBraidSequence minimal_sequence(const BraidGraph& bg, const Word& a, const Word& b) {
  int ia = bg.braid_class().index_of(a);
  int ib = bg.braid_class().index_of(b);
  if (ia < 0 || ib < 0)
    throw ValidationError("both endpoints must be vertices of the braid graph");
  MinimalBraidSequence seq;
  seq.source = a;
  seq.target = b;

  auto geos = all_geodesics(bg.skeleton(), ia, ib);
  for (std::size_t k = 0; k + 1 < geos.front().size(); ++k)
    seq.ordinals.push_back(bg.edge_label(geos.front()[k], geos.front()[k + 1]));

  // Replay: the extracted moves must transform a into b.
  Word cur = a;
  for (int ordinal : seq.ordinals) {
    int center = bg.shadow_centers()[static_cast<std::size_t>(ordinal - 1)];
    cur = apply_move(bg.system(), cur, MoveSite{MoveKind::Braid, center - 1});
  }
  if (cur != b) throw InvariantError("minimal braid sequence replay did not reach the target");

  if (bg.system().triangle_free()) {
    std::set<int> labels(seq.ordinals.begin(), seq.ordinals.end());
    if (labels.size() != seq.ordinals.size())
      throw InvariantError("a geodesic repeated a braid-shadow ordinal between '" + a.str() +
                           "' and '" + b.str() + "'");
    auto sigs = vertex_signatures(bg);
    std::set<int> differing;
    for (int i = 1; i <= sigs[static_cast<std::size_t>(ia)].size(); ++i)
      if (sigs[static_cast<std::size_t>(ia)].at(i) != sigs[static_cast<std::size_t>(ib)].at(i))
        differing.insert(i);
    if (labels != differing)
      throw InvariantError("geodesic ordinals differ from the differing signature positions");
    for (const auto& geo : geos) {
      std::set<int> other;
      for (std::size_t k = 0; k + 1 < geo.size(); ++k)
        other.insert(bg.edge_label(geo[k], geo[k + 1]));
      if (other != labels)
        throw InvariantError("two geodesics between '" + a.str() + "' and '" + b.str() +
                             "' use different ordinal sets");
    }
  }
  return seq;
}

Report semicube_sigbar_check(const BraidGraph& bg, bool explore) {
  Report r = base_report("semicube-sigbar", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  auto sigs = vertex_signatures(bg);
  const Graph& g = bg.skeleton();
  bool violated = false;
  std::set<int> labels_seen;
  for (const LabeledEdge& e : bg.edges()) {
    labels_seen.insert(e.label);
    auto sc = semicube(g, e.u, e.v);
    std::vector<int> sigbar_u;
    for (int x = 0; x < bg.vertex_count(); ++x)
      if (sigs[static_cast<std::size_t>(x)].at(e.label) ==
          sigs[static_cast<std::size_t>(e.u)].at(e.label))
        sigbar_u.push_back(x);
    if (sc.w_uv != sigbar_u) {
      r.witnesses.push_back("edge {" + bg.vertices()[static_cast<std::size_t>(e.u)].str() + ", " +
                            bg.vertices()[static_cast<std::size_t>(e.v)].str() +
                            "}: halfspace differs from the sigbar set of ordinal " +
                            std::to_string(e.label));
      violated = true;
      break;
    }
    std::vector<std::pair<int, int>> labeled;
    for (const LabeledEdge& f : bg.edges())
      if (f.label == e.label) labeled.emplace_back(f.u, f.v);
    std::vector<std::pair<int, int>> f_edges;
    for (auto [a, b] : sc.f_uv) f_edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(f_edges.begin(), f_edges.end());
    if (f_edges != labeled) {
      r.witnesses.push_back("edge class of {" +
                            bg.vertices()[static_cast<std::size_t>(e.u)].str() + ", " +
                            bg.vertices()[static_cast<std::size_t>(e.v)].str() +
                            "} differs from the edges labeled " + std::to_string(e.label));
      violated = true;
      break;
    }
    if (!g.is_convex(sc.w_uv) || !g.is_convex(sc.w_vu)) {
      r.witnesses.push_back("a sigbar halfspace of ordinal " + std::to_string(e.label) +
                            " is not convex");
      violated = true;
      break;
    }
  }
  if (!violated)
    r.witnesses.push_back("edge classes: " + std::to_string(labels_seen.size()));
  finish(r, bg.system(), violated);
  return r;
}

Report verify_dimI_equals_dim(const BraidGraph& bg, bool explore) {
  Report r = base_report("isometric-dimension", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  const Graph& g = bg.skeleton();
  bool violated = false;
  auto cube = is_partial_cube(g);
  if (!cube.ok) {
    r.witnesses.push_back("not a partial cube: " + cube.witness);
    violated = true;
  } else {
    int dim_i = theta_classes(g).class_count;
    r.stats.dim_i = dim_i;
    if (dim_i != bg.dimension()) {
      r.witnesses.push_back("isometric dimension " + std::to_string(dim_i) +
                            " != class dimension " + std::to_string(bg.dimension()));
      violated = true;
    } else if (bg.vertex_count() > 1) {
      embed_hypercube(g);  // self-verifies Hamming = graph distance
    }
  }
  finish(r, bg.system(), violated);
  return r;
}

Report cycle_laws_check(const BraidGraph& bg, bool explore) {
  Report r = base_report("cycle-laws", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  const Graph& g = bg.skeleton();
  bool violated = false;
  auto note = [&](std::string w) {
    r.witnesses.push_back(std::move(w));
    violated = true;
  };

  std::vector<std::vector<int>> cycles;
  bool capped = false;
  try {
    cycles = simple_cycles(g, 100000);
  } catch (const BudgetError&) {
    capped = true;
    r.witnesses.push_back("cycle enumeration capped; only 4-cycles checked");
  }
  if (capped) {
    cycles.clear();
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
      for (int b : g.neighbors(a)) {
        if (b <= a) continue;
        for (int c : g.neighbors(b)) {
          if (c <= a || c == b) continue;
          for (int d : g.neighbors(c))
            if (d > a && d != b && g.adjacent(d, a) && b < d)
              cycles.push_back({a, b, c, d});
        }
      }
  }

  auto shadows_disjoint = [&](int ord1, int ord2) {
    int c1 = bg.shadow_centers()[static_cast<std::size_t>(ord1 - 1)];
    int c2 = bg.shadow_centers()[static_cast<std::size_t>(ord2 - 1)];
    return std::abs(c1 - c2) >= 3;
  };

  auto dist = g.all_pairs();
  std::vector<char> on_4cycle(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& cyc : cycles) {
    int len = static_cast<int>(cyc.size());
    if (len == 4) {
      for (int v : cyc) on_4cycle[static_cast<std::size_t>(v)] = 1;
      int l0 = bg.edge_label(cyc[0], cyc[1]);
      int l1 = bg.edge_label(cyc[1], cyc[2]);
      int l2 = bg.edge_label(cyc[2], cyc[3]);
      int l3 = bg.edge_label(cyc[3], cyc[0]);
      if (l0 != l2 || l1 != l3) {
        note("4-cycle through '" + bg.vertices()[static_cast<std::size_t>(cyc[0])].str() +
             "' has unequal opposite labels");
        break;
      }
      if (l0 == l1 || !shadows_disjoint(l0, l1)) {
        note("4-cycle labels " + std::to_string(l0) + "," + std::to_string(l1) +
             " do not come from disjoint shadows");
        break;
      }
    }
    if (!violated && !capped && len >= 4 && len % 2 == 0) {
      bool isometric = true;
      for (int i = 0; i < len && isometric; ++i)
        for (int j = 0; j < len; ++j) {
          int around = std::min(std::abs(i - j), len - std::abs(i - j));
          if (dist[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])]
                  [static_cast<std::size_t>(cyc[static_cast<std::size_t>(j)])] != around) {
            isometric = false;
            break;
          }
        }
      if (isometric) {
        for (int i = 0; i < len / 2; ++i) {
          int a1 = cyc[static_cast<std::size_t>(i)],
              b1 = cyc[static_cast<std::size_t>((i + 1) % len)];
          int a2 = cyc[static_cast<std::size_t>((i + len / 2) % len)],
              b2 = cyc[static_cast<std::size_t>((i + len / 2 + 1) % len)];
          if (bg.edge_label(a1, b1) != bg.edge_label(a2, b2)) {
            note("isometric cycle of length " + std::to_string(len) +
                 " has opposite edges with different labels");
            break;
          }
        }
        if (!violated && classify_cycle(g, cyc) == CycleClass::Convex && len != 4) {
          note("convex cycle of length " + std::to_string(len) + " found");
        }
      }
    }
    if (violated) break;
  }

  if (!violated) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) >= 3 && !on_4cycle[static_cast<std::size_t>(v)]) {
        note("vertex '" + bg.vertices()[static_cast<std::size_t>(v)].str() +
             "' of degree >= 3 lies on no 4-cycle");
        break;
      }
  }
  if (!violated && g.edge_count() == g.vertex_count() - 1) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 2) {
        note("tree-shaped braid graph is not a path");
        break;
      }
  }
  finish(r, bg.system(), violated);
  return r;
}

Report interval_sigbar_check(const BraidGraph& bg, const Word& a, const Word& b, bool explore) {
  Report r = base_report("interval-sigbar", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  int ia = bg.braid_class().index_of(a);
  int ib = bg.braid_class().index_of(b);
  if (ia < 0 || ib < 0)
    throw ValidationError("both endpoints must be vertices of the braid graph");
  auto ival = bg.skeleton().interval(ia, ib);
  std::vector<int> sb;
  for (const Word& x : sigbar_pair(bg.braid_class(), a, b)) sb.push_back(bg.braid_class().index_of(x));
  std::sort(sb.begin(), sb.end());
  bool violated = ival != sb;
  if (violated)
    r.witnesses.push_back("interval between '" + a.str() + "' and '" + b.str() +
                          "' differs from the pair's sigbar set");
  finish(r, bg.system(), violated);
  return r;
}

Report interval_sigbar_check_all(const BraidGraph& bg, bool explore) {
  Report r = base_report("interval-sigbar", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  bool violated = false;
  for (int i = 0; i < bg.vertex_count() && !violated; ++i)
    for (int j = i; j < bg.vertex_count(); ++j) {
      const Word& a = bg.vertices()[static_cast<std::size_t>(i)];
      const Word& b = bg.vertices()[static_cast<std::size_t>(j)];
      auto ival = bg.skeleton().interval(i, j);
      std::vector<int> sb;
      for (const Word& x : sigbar_pair(bg.braid_class(), a, b))
        sb.push_back(bg.braid_class().index_of(x));
      std::sort(sb.begin(), sb.end());
      if (ival != sb) {
        r.witnesses.push_back("interval between '" + a.str() + "' and '" + b.str() +
                              "' differs from the pair's sigbar set");
        violated = true;
        break;
      }
    }
  finish(r, bg.system(), violated);
  return r;
}

Word median_via_majority(const BraidGraph& bg, const Word& a, const Word& b, const Word& c) {
  if (!bg.system().triangle_free())
    throw ValidationError(
        "median via majority requires a triangle-free system; the majority theorem does not "
        "apply here");
  const BraidClass& cls = bg.braid_class();
  int ia = cls.index_of(a), ib = cls.index_of(b), ic = cls.index_of(c);
  if (ia < 0 || ib < 0 || ic < 0)
    throw ValidationError("the three words must be braid equivalent");
  auto sigs = vertex_signatures(bg);
  Signature maj = majority(sigs[static_cast<std::size_t>(ia)], sigs[static_cast<std::size_t>(ib)],
                           sigs[static_cast<std::size_t>(ic)]);
  std::vector<int> hits;
  for (int x = 0; x < bg.vertex_count(); ++x)
    if (sigs[static_cast<std::size_t>(x)] == maj) hits.push_back(x);
  if (hits.size() != 1)
    throw InvariantError("majority signature " + maj.str() + " selects " +
                         std::to_string(hits.size()) + " members instead of one");
  auto med = median_triple(bg.skeleton(), ia, ib, ic);
  if (med.size() != 1 || med.front() != hits.front())
    throw InvariantError("majority median disagrees with the graph median for (" + a.str() +
                         ", " + b.str() + ", " + c.str() + ")");
  return bg.vertices()[static_cast<std::size_t>(hits.front())];
}

Word median_via_majority(const CoxeterSystem& sys, const Word& a, const Word& b, const Word& c,
                         std::size_t budget) {
  auto bg = BraidGraph::of(sys, a, budget);
  return median_via_majority(bg, a, b, c);
}

Report median_majority_check(const BraidGraph& bg, int samples, std::uint64_t seed,
                             bool explore) {
  Report r = base_report("median-majority", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  int n = bg.vertex_count();
  auto sigs = vertex_signatures(bg);
  bool violated = false;
  auto check_triple = [&](int ia, int ib, int ic) {
    Signature maj = majority(sigs[static_cast<std::size_t>(ia)],
                             sigs[static_cast<std::size_t>(ib)],
                             sigs[static_cast<std::size_t>(ic)]);
    std::vector<int> hits;
    for (int x = 0; x < n; ++x)
      if (sigs[static_cast<std::size_t>(x)] == maj) hits.push_back(x);
    auto med = median_triple(bg.skeleton(), ia, ib, ic);
    if (hits.size() != 1 || med.size() != 1 || hits.front() != med.front()) {
      r.witnesses.push_back("triple (" + bg.vertices()[static_cast<std::size_t>(ia)].str() +
                            ", " + bg.vertices()[static_cast<std::size_t>(ib)].str() + ", " +
                            bg.vertices()[static_cast<std::size_t>(ic)].str() +
                            "): majority median and graph median disagree");
      violated = true;
    }
  };
  long long total = static_cast<long long>(n) * n * n;
  if (total <= samples) {
    for (int ia = 0; ia < n && !violated; ++ia)
      for (int ib = ia; ib < n && !violated; ++ib)
        for (int ic = ib; ic < n && !violated; ++ic) check_triple(ia, ib, ic);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < samples && !violated; ++k)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
  finish(r, bg.system(), violated);
  return r;
}

Report factorization_box_check(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  Report r;
  r.check = "factorization-box";
  r.system = system_label(sys);
  r.word = w.str();
  bool violated = false;
  auto note = [&](std::string msg) {
    r.witnesses.push_back(std::move(msg));
    violated = true;
  };
  try {
    auto fact = link_factorization(sys, w, budget);
    r.witnesses.push_back("factorization: " + fact.str());
    if (w.empty()) {
      r.stats.vertices = 1;
      r.stats.diam = 0;
      r.status = Report::Status::Pass;
      return r;
    }
    auto bg = BraidGraph::of(sys, w, budget);
    r.stats.vertices = bg.vertex_count();
    r.stats.edges = static_cast<int>(bg.edges().size());
    r.stats.dim = bg.dimension();
    r.stats.diam = bg.skeleton().diameter();

    std::vector<BraidGraph> parts;
    std::vector<int> offset{0};
    long long expected_vertices = 1;
    for (const Word& f : fact.factors) {
      parts.push_back(BraidGraph::of(BraidClass::of_reduced(sys, f, budget)));
      offset.push_back(offset.back() + parts.back().dimension());
      expected_vertices *= parts.back().vertex_count();
    }
    if (offset.back() != bg.dimension())
      note("factor dimensions sum to " + std::to_string(offset.back()) + ", class dimension is " +
           std::to_string(bg.dimension()));
    if (expected_vertices != bg.vertex_count())
      note("factor class sizes multiply to " + std::to_string(expected_vertices) +
           ", class size is " + std::to_string(bg.vertex_count()));

    if (!violated) {
      std::size_t k = parts.size();
      std::vector<std::size_t> pick(k, 0);
      std::vector<int> image;  // braid-graph vertex per tuple, mixed-radix order
      std::vector<long long> radix(k, 1);
      for (std::size_t i = 1; i < k; ++i)
        radix[i] = radix[i - 1] * parts[i - 1].vertex_count();
      image.assign(static_cast<std::size_t>(expected_vertices), -1);
      std::vector<char> hit(static_cast<std::size_t>(bg.vertex_count()), 0);
      while (true) {
        std::vector<int> letters;
        long long code = 0;
        for (std::size_t i = 0; i < k; ++i) {
          auto part = parts[i].vertices()[pick[i]].letters();
          letters.insert(letters.end(), part.begin(), part.end());
          code += radix[i] * static_cast<long long>(pick[i]);
        }
        int idx = bg.braid_class().index_of(Word::from_letters(letters));
        if (idx < 0) {
          note("a concatenation of factor members is outside the braid class");
          break;
        }
        if (hit[static_cast<std::size_t>(idx)]) {
          note("the concatenation map is not injective");
          break;
        }
        hit[static_cast<std::size_t>(idx)] = 1;
        image[static_cast<std::size_t>(code)] = idx;
        std::size_t i = 0;
        for (; i < k; ++i) {
          if (++pick[i] < static_cast<std::size_t>(parts[i].vertex_count())) break;
          pick[i] = 0;
        }
        if (i == k) break;
      }
      if (!violated) {
        long long box_edges = 0;
        for (long long code = 0; code < expected_vertices && !violated; ++code) {
          // decode tuple
          std::vector<long long> tuple(k);
          long long rest = code;
          for (std::size_t i = k; i-- > 0;) {
            tuple[i] = rest / radix[i];
            rest %= radix[i];
          }
          for (std::size_t i = 0; i < k && !violated; ++i) {
            for (const LabeledEdge& e : parts[i].edges()) {
              long long other;
              if (tuple[i] == e.u)
                other = code + radix[i] * (e.v - e.u);
              else if (tuple[i] == e.v)
                continue;  // counted from the lesser endpoint
              else
                continue;
              ++box_edges;
              int a = image[static_cast<std::size_t>(code)];
              int b = image[static_cast<std::size_t>(other)];
              int want = offset[i] + e.label;
              if (bg.edge_label(a, b) != want) {
                note("box edge between tuples maps to label " +
                     std::to_string(bg.edge_label(a, b)) + ", expected " + std::to_string(want));
                break;
              }
            }
          }
        }
        if (!violated && box_edges != static_cast<long long>(bg.edges().size()))
          note("box product has " + std::to_string(box_edges) + " edges, braid graph has " +
               std::to_string(bg.edges().size()));
      }
    }
  } catch (const InvariantError& e) {
    note(e.what());
  }
  r.status = violated ? Report::Status::Fail : Report::Status::Pass;
  return r;
}

Report helly_check(const BraidGraph& bg, const std::vector<std::pair<Word, int>>& family,
                   bool explore) {
  Report r = base_report("helly", bg);
  if (gate_lambda(r, bg.system(), explore)) return r;
  std::vector<std::vector<Word>> sets;
  for (const auto& [member, ordinal] : family)
    sets.push_back(sigbar(bg.braid_class(), member, ordinal));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<Word> inter;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(inter));
      if (inter.empty()) {
        r.status = Report::Status::Refused;
        r.witnesses.push_back("family members " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " are disjoint; the family is not pairwise intersecting");
        return r;
      }
    }
  std::vector<Word> common = sets.empty() ? std::vector<Word>(bg.vertices()) : sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    std::vector<Word> inter;
    std::set_intersection(common.begin(), common.end(), sets[i].begin(), sets[i].end(),
                          std::back_inserter(inter));
    common = std::move(inter);
  }
  bool violated = common.empty();
  if (violated)
    r.witnesses.push_back("pairwise-intersecting sigbar family has empty common intersection");
  finish(r, bg.system(), violated);
  return r;
}

namespace {

// Two class members are braid-graph adjacent iff one braid move apart.
bool braid_adjacent(const CoxeterSystem& sys, const Word& a, const Word& b) {
  for (const Shadow& s : shadows(sys, a))
    if (apply_move(sys, a, MoveSite{MoveKind::Braid, s.lo}) == b) return true;
  return false;
}

// Contracts the braid graph of a link to a single vertex through the
// top-shadow split. Appends a diagnostic and returns false on the first
// step that does not behave as the structure theory predicts.
bool contract_link(const CoxeterSystem& sys, Word link, std::size_t budget,
                   std::vector<std::string>& notes) {
  while (true) {
    BraidClass cls = BraidClass::of_reduced(sys, link, budget);
    auto cs = class_shadows(cls);
    int r = static_cast<int>(cs.size());
    if (r == 0) {
      if (cls.size() != 1) {
        notes.push_back("dimension-0 class of '" + link.str() + "' is not a singleton");
        return false;
      }
      return true;
    }
    if (r == 1) {
      if (cls.size() != 2) {
        notes.push_back("dimension-1 link class of '" + link.str() + "' does not have 2 members");
        return false;
      }
      return true;
    }
    Word sigma;
    bool found = false;
    for (const Word& x : cls.members()) {
      bool lower = false, upper = false;
      for (const Shadow& s : shadows(sys, x)) {
        if (s.center() == 2 * r - 2) lower = true;
        if (s.center() == 2 * r) upper = true;
      }
      if (lower && upper) {
        sigma = x;
        found = true;
        break;
      }
    }
    if (!found) {
      notes.push_back("no member of the class of '" + link.str() +
                      "' realizes the top two overlapping shadows together");
      return false;
    }
    int top_center = 2 * r;
    int keep_letter = sigma.letter(top_center);
    std::vector<Word> keep, peel;
    for (const Word& x : cls.members())
      (x.letter(top_center) == keep_letter ? keep : peel).push_back(x);
    if (keep.empty() || peel.empty()) {
      notes.push_back("top-shadow split of '" + link.str() + "' is not a partition");
      return false;
    }
    std::unordered_set<Word, WordHash> keep_set(keep.begin(), keep.end());
    std::unordered_map<Word, Word, WordHash> match;
    for (const Word& y : peel) {
      bool has_top = y.letter(top_center - 1) == y.letter(top_center + 1) &&
                     sys.bond(y.letter(top_center - 1), y.letter(top_center)) == 3;
      if (!has_top) {
        notes.push_back("member '" + y.str() + "' of the peeled side misses the top shadow");
        return false;
      }
      Word moved = apply_move(sys, y, MoveSite{MoveKind::Braid, top_center - 1});
      if (!keep_set.count(moved)) {
        notes.push_back("top move from '" + y.str() + "' leaves the kept side");
        return false;
      }
      match.emplace(y, moved);
    }
    for (std::size_t i = 0; i < peel.size(); ++i)
      for (std::size_t j = i + 1; j < peel.size(); ++j) {
        bool a1 = braid_adjacent(sys, peel[i], peel[j]);
        bool a2 = braid_adjacent(sys, match.at(peel[i]), match.at(peel[j]));
        if (a1 != a2) {
          notes.push_back("the top matching does not preserve adjacency between '" +
                          peel[i].str() + "' and '" + peel[j].str() + "'");
          return false;
        }
      }
    {
      // The attachment set must be convex inside the kept side, as a
      // peripheral contraction demands.
      Graph kept_graph(static_cast<int>(keep.size()));
      for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
          if (braid_adjacent(sys, keep[i], keep[j]))
            kept_graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      std::vector<int> attachment;
      std::unordered_set<Word, WordHash> matched;
      for (const auto& [y, x] : match) matched.insert(x);
      for (std::size_t i = 0; i < keep.size(); ++i)
        if (matched.count(keep[i])) attachment.push_back(static_cast<int>(i));
      if (!kept_graph.is_convex(attachment)) {
        notes.push_back("the attachment set of '" + link.str() +
                        "' is not convex in the kept side");
        return false;
      }
    }
    Word contracted = sigma.factor(1, 2 * r - 1);
    BraidClass down = BraidClass::of_reduced(sys, contracted, budget);
    std::unordered_set<Word, WordHash> hats;
    for (const Word& x : keep) hats.insert(x.factor(1, 2 * r - 1));
    if (hats.size() != keep.size() ||
        static_cast<int>(hats.size()) != down.size()) {
      notes.push_back("kept side of '" + link.str() +
                      "' does not project bijectively onto the contracted class");
      return false;
    }
    for (const Word& d : down.members())
      if (!hats.count(d)) {
        notes.push_back("contracted class member '" + d.str() + "' has no preimage");
        return false;
      }
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        bool a1 = braid_adjacent(sys, keep[i], keep[j]);
        bool a2 = braid_adjacent(sys, keep[i].factor(1, 2 * r - 1),
                                 keep[j].factor(1, 2 * r - 1));
        if (a1 != a2) {
          notes.push_back("projection of the kept side does not preserve adjacency");
          return false;
        }
      }
    link = contracted;
  }
}

}  // namespace

Report median_graph_check(const CoxeterSystem& sys, const Word& w, bool explore,
                          std::size_t budget) {
  auto bg = BraidGraph::of(sys, w, budget);
  Report r = base_report("median-graph", bg);
  if (gate_lambda(r, sys, explore)) return r;
  bool violated = false;
  auto med = median_check(bg.skeleton());
  r.witnesses.push_back(std::string("is-median: ") + (med.ok ? "yes" : "no"));
  if (!med.ok) {
    r.witnesses.push_back(
        "offending triple (" +
        bg.vertices()[static_cast<std::size_t>(med.witness[0])].str() + ", " +
        bg.vertices()[static_cast<std::size_t>(med.witness[1])].str() + ", " +
        bg.vertices()[static_cast<std::size_t>(med.witness[2])].str() + ") has " +
        std::to_string(med.median_count) + " medians");
    violated = true;
  }
  if (!w.empty()) {
    auto fact = link_factorization(sys, w, budget);
    for (const Word& f : fact.factors) {
      std::vector<std::string> notes;
      if (!contract_link(sys, f, budget, notes)) {
        r.witnesses.push_back("contraction route failed for factor '" + f.str() + "'");
        r.witnesses.insert(r.witnesses.end(), notes.begin(), notes.end());
        violated = true;
      }
    }
  }
  finish(r, sys, violated);
  return r;
}

}  // namespace coxbraid
