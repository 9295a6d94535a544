#include "coxbraid/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <thread>
#include <unordered_set>

#include "coxbraid/errors.hpp"

namespace coxbraid {

CoxeterSystem system_from_text(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.rfind("n=", 0) == 0) return CoxeterSystem::parse(s);
  auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw ValidationError("system must be FAMILY:RANK (A, D, affA, affD) or an 'n=...' spec; got '" +
                          std::string(s) + "'");
  std::string_view fam = s.substr(0, colon);
  std::string_view rank_text = s.substr(colon + 1);
  Family family;
  if (fam == "A") family = Family::A;
  else if (fam == "D") family = Family::D;
  else if (fam == "affA") family = Family::AffineA;
  else if (fam == "affD") family = Family::AffineD;
  else throw ValidationError("unknown family '" + std::string(fam) + "' (use A, D, affA, affD)");
  int rank = 0;
  for (char c : rank_text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ValidationError("bad rank '" + std::string(rank_text) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 250) throw ValidationError("rank too large");
  }
  if (rank_text.empty()) throw ValidationError("missing rank after '" + std::string(fam) + ":'");
  return CoxeterSystem::named(family, rank);
}

InstanceSpec InstanceSpec::from_json(const nlohmann::json& j) {
  InstanceSpec spec;
  if (!j.contains("system")) throw ValidationError("sweep config needs 'system'");
  spec.system = j.at("system").get<std::string>();
  std::string mode = j.value("mode", std::string("exhaustive"));
  if (mode == "exhaustive") spec.mode = Mode::Exhaustive;
  else if (mode == "random") spec.mode = Mode::Random;
  else throw ValidationError("mode must be 'exhaustive' or 'random'");
  spec.max_length = j.value("L", 0);
  if (spec.max_length < 0) throw ValidationError("'L' must be non-negative");
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.count = j.value("count", 0);
  if (spec.mode == Mode::Random && spec.count <= 0)
    throw ValidationError("random mode needs a positive 'count'");
  if (j.contains("filters")) {
    const auto& f = j.at("filters");
    spec.min_dimension = f.value("minDimension", 0);
    spec.links_only = f.value("linksOnly", false);
  }
  spec.explore = j.value("explore", false);
  if (j.contains("caps")) {
    const auto& c = j.at("caps");
    spec.budget = c.value("budget", kDefaultBudget);
    spec.sigbar_triple_cap = c.value("sigbarTriples", std::size_t{100000});
  }
  return spec;
}

nlohmann::json InstanceSpec::to_json() const {
  nlohmann::json j;
  j["system"] = system;
  j["mode"] = mode == Mode::Exhaustive ? "exhaustive" : "random";
  j["L"] = max_length;
  if (mode == Mode::Random) {
    j["seed"] = seed;
    j["count"] = count;
  }
  j["filters"] = {{"minDimension", min_dimension}, {"linksOnly", links_only}};
  j["explore"] = explore;
  j["caps"] = {{"budget", budget}, {"sigbarTriples", sigbar_triple_cap}};
  return j;
}

namespace {

bool class_passes_filters(const BraidClass& cls,
                          const InstanceSpec& spec) {
  if (spec.links_only && (cls.representative().empty() || !is_link(cls))) return false;
  if (spec.min_dimension > 0 && dimension(cls) < spec.min_dimension) return false;
  return true;
}

std::vector<Word> exhaustive_instances(const CoxeterSystem& sys, const InstanceSpec& spec) {
  std::vector<Word> reps;
  std::size_t words_seen = 1;

  // Elements of one length, each carried as its full set of reduced
  // expressions; canonical key is the least member.
  std::map<Word, std::vector<Word>> level;
  level.emplace(Word{}, std::vector<Word>{Word{}});

  auto harvest = [&](const std::vector<Word>& closure) {
    std::unordered_set<Word, WordHash> assigned;
    for (const Word& m : closure) {
      if (assigned.count(m)) continue;
      auto cls = BraidClass::of_reduced(sys, m, spec.budget);
      for (const Word& x : cls.members()) assigned.insert(x);
      if (class_passes_filters(cls, spec)) reps.push_back(cls.representative());
    }
  };

  harvest(level.begin()->second);
  for (int len = 1; len <= spec.max_length; ++len) {
    std::map<Word, std::vector<Word>> next;
    std::unordered_set<Word, WordHash> seen;
    for (const auto& [canon, closure] : level) {
      std::vector<char> blocked(256, 0);
      for (const Word& r : closure)
        if (!r.empty()) blocked[static_cast<std::size_t>(r.letter(r.size()))] = 1;
      for (int s = 1; s <= sys.generators(); ++s) {
        if (blocked[static_cast<std::size_t>(s)]) continue;
        Word candidate = canon.appended(s);
        if (seen.count(candidate)) continue;
        auto closure_next = tits_closure(sys, candidate, spec.budget);
        words_seen += closure_next.size();
        if (words_seen > spec.budget)
          throw BudgetError("exhaustive enumeration exceeded the node budget", spec.budget);
        for (const Word& x : closure_next) seen.insert(x);
        Word canon_next = closure_next.front();
        next.emplace(std::move(canon_next), std::move(closure_next));
      }
    }
    level = std::move(next);
    for (const auto& [canon, closure] : level) harvest(closure);
  }
  std::sort(reps.begin(), reps.end(), [](const Word& a, const Word& b) {
    return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
  });
  return reps;
}

std::vector<Word> random_instances(const CoxeterSystem& sys, const InstanceSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Word> reps;
  std::unordered_set<Word, WordHash> taken;
  int attempts = 0;
  int max_attempts = spec.count * 50 + 100;
  while (static_cast<int>(reps.size()) < spec.count && attempts < max_attempts) {
    ++attempts;
    Word cur;
    std::vector<Word> closure{Word{}};
    bool dead = false;
    for (int len = 1; len <= spec.max_length; ++len) {
      std::vector<int> candidates;
      for (int s = 1; s <= sys.generators(); ++s) {
        bool blocked = false;
        for (const Word& r : closure)
          if (!r.empty() && r.letter(r.size()) == s) {
            blocked = true;
            break;
          }
        if (!blocked) candidates.push_back(s);
      }
      if (candidates.empty()) {
        dead = true;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      cur = cur.appended(candidates[pick(rng)]);
      closure = tits_closure(sys, cur, spec.budget);
    }
    if (dead) continue;
    auto cls = BraidClass::of_reduced(sys, cur, spec.budget);
    if (!class_passes_filters(cls, spec)) continue;
    if (taken.insert(cls.representative()).second) reps.push_back(cls.representative());
  }
  std::sort(reps.begin(), reps.end(), [](const Word& a, const Word& b) {
    return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
  });
  return reps;
}

}  // namespace

std::vector<Word> generate_instances(const CoxeterSystem& sys, const InstanceSpec& spec) {
  if (spec.mode == InstanceSpec::Mode::Exhaustive) return exhaustive_instances(sys, spec);
  return random_instances(sys, spec);
}

Report check_diam_eq_dim(const BraidGraph& bg, bool explore) {
  Report r;
  r.check = "diam-eq-dim";
  r.system = bg.system().name().empty() ? bg.system().spec_text() : bg.system().name();
  r.word = bg.braid_class().representative().str();
  r.stats.vertices = bg.vertex_count();
  r.stats.edges = static_cast<int>(bg.edges().size());
  r.stats.dim = bg.dimension();
  r.stats.diam = bg.skeleton().diameter();
  bool lambda = bg.system().triangle_free();
  if (!lambda && !explore) {
    r.status = Report::Status::Refused;
    r.witnesses.push_back("system is not triangle-free; rerun with exploration enabled");
    return r;
  }
  bool violated = r.stats.diam != r.stats.dim;
  if (violated)
    r.witnesses.push_back("diameter " + std::to_string(r.stats.diam) + " != dimension " +
                          std::to_string(r.stats.dim));
  r.status = !lambda ? Report::Status::Observed
                     : (violated ? Report::Status::Fail : Report::Status::Pass);
  return r;
}

namespace {

Report conjecture_report(const char* name, const BraidGraph& bg) {
  Report r;
  r.check = name;
  r.system = bg.system().name().empty() ? bg.system().spec_text() : bg.system().name();
  r.word = bg.braid_class().representative().str();
  r.stats.vertices = bg.vertex_count();
  r.stats.edges = static_cast<int>(bg.edges().size());
  r.stats.dim = bg.dimension();
  r.stats.diam = bg.skeleton().diameter();
  return r;
}

void conjecture_finish(Report& r, const BraidGraph& bg, bool explore, bool violated) {
  bool lambda = bg.system().triangle_free();
  if (!lambda && !explore) {
    r.status = Report::Status::Refused;
    r.witnesses.assign({"system is not triangle-free; rerun with exploration enabled"});
    return;
  }
  r.status = !lambda ? Report::Status::Observed
                     : (violated ? Report::Status::Fail : Report::Status::Pass);
}

}  // namespace

Report check_geodetic_number_two(const BraidGraph& bg, bool explore) {
  Report r = conjecture_report("geodetic-number-two", bg);
  int n = bg.vertex_count();
  bool violated = false;
  if (n == 1) {
    r.witnesses.push_back("geodetic number: 1");
  } else {
    int covering_pairs = 0;
    std::pair<int, int> first{-1, -1};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto ival = bg.skeleton().interval(i, j);
        if (static_cast<int>(ival.size()) == n) {
          if (covering_pairs == 0) first = {i, j};
          ++covering_pairs;
        }
      }
    if (covering_pairs == 0) {
      violated = true;
      r.witnesses.push_back("no 2-set covers the graph; geodetic number exceeds 2");
    } else {
      r.witnesses.push_back("geodetic number: 2");
      r.witnesses.push_back("covering pairs: " + std::to_string(covering_pairs));
      bool link = !bg.braid_class().representative().empty() && is_link(bg.braid_class());
      if (link && covering_pairs != 1) {
        violated = true;
        r.witnesses.push_back("link has " + std::to_string(covering_pairs) +
                              " covering pairs instead of a unique one");
      } else if (covering_pairs >= 1) {
        r.witnesses.push_back("first covering pair: (" +
                              bg.vertices()[static_cast<std::size_t>(first.first)].str() + ", " +
                              bg.vertices()[static_cast<std::size_t>(first.second)].str() + ")");
      }
    }
  }
  conjecture_finish(r, bg, explore, violated);
  return r;
}

Report check_unique_diametrical_pair(const BraidGraph& bg, bool explore) {
  Report r = conjecture_report("unique-diametrical-pair", bg);
  int n = bg.vertex_count();
  bool violated = false;
  if (n > 1) {
    auto dist = bg.skeleton().all_pairs();
    int diam = r.stats.diam;
    int count = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == diam) ++count;
    r.witnesses.push_back("diametrical pairs: " + std::to_string(count));
    bool link = !bg.braid_class().representative().empty() && is_link(bg.braid_class());
    if (link && count != 1) {
      violated = true;
      r.witnesses.push_back("link has " + std::to_string(count) +
                            " diametrical pairs instead of a unique one");
    }
  }
  conjecture_finish(r, bg, explore, violated);
  return r;
}

Report check_sigbar_triples(const BraidGraph& bg, std::size_t cap, std::uint64_t seed,
                            bool explore) {
  Report r = conjecture_report("sigbar-triples", bg);
  bool violated = false;
  // Distinct sigbar sets, as sorted member-index vectors.
  std::vector<std::vector<int>> sets;
  auto sigs = vertex_signatures(bg);
  for (int ordinal = 1; ordinal <= bg.dimension(); ++ordinal) {
    std::map<int, std::vector<int>> by_value;
    for (int x = 0; x < bg.vertex_count(); ++x)
      by_value[sigs[static_cast<std::size_t>(x)].at(ordinal)].push_back(x);
    for (auto& [value, members] : by_value) sets.push_back(members);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return true;
  };

  std::size_t k = sets.size();
  std::size_t total = k >= 3 ? k * (k - 1) * (k - 2) / 6 : 0;
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (disjoint(sets[a], sets[b]) && disjoint(sets[a], sets[c]) && disjoint(sets[b], sets[c])) {
      violated = true;
      r.witnesses.push_back("pairwise disjoint triple of sigbar sets found (sets " +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + " of " + std::to_string(k) + ")");
    }
  };
  if (total <= cap) {
    for (std::size_t a = 0; a < k && !violated; ++a)
      for (std::size_t b = a + 1; b < k && !violated; ++b)
        for (std::size_t c = b + 1; c < k && !violated; ++c) check_triple(a, b, c);
  } else {
    r.witnesses.push_back("triples sampled: " + std::to_string(cap) + " of " +
                          std::to_string(total));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (std::size_t t = 0; t < cap && !violated; ++t) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (a == b || a == c || b == c) continue;
      check_triple(a, b, c);
    }
  }
  conjecture_finish(r, bg, explore, violated);
  return r;
}

const std::vector<std::string> kSweepCheckNames = {
    "diam-eq-dim", "geodetic-number-two", "unique-diametrical-pair", "sigbar-triples"};

namespace {

struct InstanceOutcome {
  std::vector<Report> reports;
  std::string invariant_message;  // non-empty on theorem violation
  std::string budget_message;     // non-empty on budget exhaustion
};

InstanceOutcome process_instance(const CoxeterSystem& sys, const InstanceSpec& spec,
                                 const std::vector<std::string>& checks, const Word& rep,
                                 std::size_t index) {
  // Per-instance seed derived from the master seed, so results do not
  // depend on which worker picks the instance up.
  std::uint64_t seed = spec.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  InstanceOutcome out;
  try {
    auto bg = BraidGraph::of(BraidClass::of_reduced(sys, rep, spec.budget));
    bool lambda = sys.triangle_free();
    if (lambda) {
      // Theorem-backed sanity layer; a failure here is an implementation
      // bug, not a conjecture counterexample.
      Report sanity = verify_distance_formula(bg);
      if (!sanity.passed()) {
        out.invariant_message = "distance formula violated on '" + rep.str() + "'";
        return out;
      }
      sanity = verify_dimI_equals_dim(bg);
      if (!sanity.passed()) {
        out.invariant_message = "partial-cube structure violated on '" + rep.str() + "'";
        return out;
      }
      if (!is_median_graph(bg.skeleton())) {
        out.invariant_message = "median property violated on '" + rep.str() + "'";
        return out;
      }
    }
    for (const std::string& name : checks) {
      if (name == "diam-eq-dim")
        out.reports.push_back(check_diam_eq_dim(bg, spec.explore));
      else if (name == "geodetic-number-two")
        out.reports.push_back(check_geodetic_number_two(bg, spec.explore));
      else if (name == "unique-diametrical-pair")
        out.reports.push_back(check_unique_diametrical_pair(bg, spec.explore));
      else if (name == "sigbar-triples")
        out.reports.push_back(check_sigbar_triples(bg, spec.sigbar_triple_cap, seed,
                                                   spec.explore));
      else
        throw ValidationError("unknown sweep check '" + name + "'");
    }
  } catch (const BudgetError& e) {
    out.budget_message = e.what();
  } catch (const std::exception& e) {
    // Anything else thrown while processing a generated instance is an
    // implementation problem, not user input.
    out.invariant_message = e.what();
  }
  return out;
}

}  // namespace

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j;
  j["config"] = spec.to_json();
  j["system"] = system_label;
  j["instances"] = instances;
  j["counterexamples"] = nlohmann::json::array();
  for (const Report& r : counterexamples) j["counterexamples"].push_back(r.to_json());
  j["invariantFailure"] = invariant_failure;
  if (invariant_failure) j["invariantMessage"] = invariant_message;
  j["results"] = nlohmann::json::array();
  for (const Report& r : results) j["results"].push_back(r.to_json());
  return j;
}

std::string SweepReport::to_csv() const {
  std::string out = "word,check,status,detail\n";
  auto quote = [](std::string s) {
    for (auto& c : s)
      if (c == '"') c = '\'';
    return '"' + s + '"';
  };
  for (const Report& r : results) {
    std::string detail;
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      if (i) detail += "; ";
      detail += r.witnesses[i];
    }
    out += quote(r.word) + "," + r.check + "," + Report::status_name(r.status) + "," +
           quote(detail) + "\n";
  }
  return out;
}

SweepReport run_sweep(const CoxeterSystem& sys, const InstanceSpec& spec,
                      const std::vector<std::string>& checks, int workers) {
  if (!sys.triangle_free() && !spec.explore)
    throw ValidationError(
        "sweep refused: the system is not triangle-free, so the checked statements are outside "
        "their hypotheses; enable exploration to gather observations");
  for (const std::string& name : checks)
    if (std::find(kSweepCheckNames.begin(), kSweepCheckNames.end(), name) ==
        kSweepCheckNames.end())
      throw ValidationError("unknown sweep check '" + name + "'");

  SweepReport report;
  report.spec = spec;
  report.system_label = sys.name().empty() ? sys.spec_text() : sys.name();

  std::vector<Word> instances = generate_instances(sys, spec);
  report.instances = static_cast<int>(instances.size());

  std::vector<InstanceOutcome> outcomes(instances.size());
  int n_workers = workers > 0 ? workers
                              : static_cast<int>(std::min<unsigned>(
                                    std::max(1u, std::thread::hardware_concurrency()), 8));
  n_workers = std::min(n_workers, static_cast<int>(std::max<std::size_t>(instances.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) break;
      outcomes[i] = process_instance(sys, spec, checks, instances[i], i);
    }
  };
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].budget_message.empty())
      throw BudgetError(outcomes[i].budget_message, spec.budget);
    if (!outcomes[i].invariant_message.empty()) {
      report.invariant_failure = true;
      report.invariant_message = outcomes[i].invariant_message;
      return report;
    }
    for (Report& r : outcomes[i].reports) {
      if (r.failed()) report.counterexamples.push_back(r);
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace coxbraid
