#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "coxbraid/errors.hpp"
#include "coxbraid/lab.hpp"
#include "test_helpers.hpp"

using namespace coxbraid;
using testutil::W;

TEST_CASE("system_from_text") {
  CHECK(system_from_text("D:4") == CoxeterSystem::named(Family::D, 4));
  CHECK(system_from_text("affA:2") == CoxeterSystem::named(Family::AffineA, 2));
  CHECK(system_from_text("n=3; 3: (1,2)(2,3)") == CoxeterSystem::named(Family::A, 3));
  CHECK_THROWS_AS(system_from_text("E:8"), ValidationError);
  CHECK_THROWS_AS(system_from_text("D"), ValidationError);
  CHECK_THROWS_AS(system_from_text("D:x"), ValidationError);
}

TEST_CASE("exhaustive instances enumerate braid-class representatives") {
  auto a2 = CoxeterSystem::named(Family::A, 2);
  InstanceSpec spec;
  spec.system = "A:2";
  spec.max_length = 3;
  auto reps = generate_instances(a2, spec);
  CHECK(testutil::literals(reps) == std::set<std::string>{"", "1", "2", "12", "21", "121"});

  // L = 0 keeps only the empty word.
  spec.max_length = 0;
  auto only_empty = generate_instances(a2, spec);
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0].empty());
}

TEST_CASE("filters restrict instances") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  InstanceSpec spec;
  spec.system = "D:4";
  spec.max_length = 7;
  spec.links_only = true;
  auto reps = generate_instances(d4, spec);
  // The 7-letter link class of the worked example survives the filter,
  // via its representative.
  auto rep_of = BraidClass::of(d4, W("4341232")).representative();
  CHECK(std::find(reps.begin(), reps.end(), rep_of) != reps.end());
  for (const Word& w : reps) {
    CHECK(!w.empty());
    CHECK(is_link(d4, w));
  }

  spec.links_only = false;
  spec.min_dimension = 2;
  for (const Word& w : generate_instances(d4, spec))
    CHECK(dimension(d4, w) >= 2);
}

TEST_CASE("exhaustive enumeration respects the budget") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  InstanceSpec spec;
  spec.system = "D:4";
  spec.max_length = 9;
  spec.budget = 10;
  CHECK_THROWS_AS(generate_instances(d4, spec), BudgetError);
}

TEST_CASE("random instances are reproducible") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  InstanceSpec spec;
  spec.system = "D:4";
  spec.mode = InstanceSpec::Mode::Random;
  spec.max_length = 6;
  spec.count = 8;
  spec.seed = 12345;
  auto first = generate_instances(d4, spec);
  auto second = generate_instances(d4, spec);
  CHECK(first == second);
  CHECK_FALSE(first.empty());
  for (const Word& w : first) {
    CHECK(w.size() == 6);
    CHECK(is_reduced(d4, w));
  }
  spec.seed = 54321;
  // A different seed is allowed to give a different list (it almost
  // certainly does; only determinism per seed is required).
  auto third = generate_instances(d4, spec);
  CHECK(third.size() <= 8);
}

TEST_CASE("diameter-dimension check") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto r = check_diam_eq_dim(BraidGraph::of(d4, W("4341232")));
  CHECK(r.passed());
  CHECK(r.stats.diam == 3);
  CHECK(r.stats.dim == 3);
  auto a1 = CoxeterSystem::named(Family::A, 1);
  CHECK(check_diam_eq_dim(BraidGraph::of(a1, W("1"))).passed());
}

TEST_CASE("geodetic number check") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto r = check_geodetic_number_two(BraidGraph::of(d4, W("4341232")));
  CHECK(r.passed());
  bool unique_pair = false;
  for (const auto& w : r.witnesses)
    if (w == "covering pairs: 1") unique_pair = true;
  CHECK(unique_pair);

  auto a1 = CoxeterSystem::named(Family::A, 1);
  auto single = check_geodetic_number_two(BraidGraph::of(a1, W("1")));
  CHECK(single.passed());
  CHECK(single.witnesses.front() == "geodetic number: 1");

  // Non-link: still geodetic number 2, but several covering pairs.
  auto a6 = CoxeterSystem::named(Family::A, 6);
  auto multi = check_geodetic_number_two(BraidGraph::of(a6, W("1213243565")));
  CHECK(multi.passed());
  bool several = false;
  for (const auto& w : multi.witnesses) {
    auto pos = w.find("covering pairs: ");
    if (pos == 0) several = w != "covering pairs: 1";
  }
  CHECK(several);
}

TEST_CASE("unique diametrical pair check") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto r = check_unique_diametrical_pair(BraidGraph::of(d4, W("4341232")));
  CHECK(r.passed());
  CHECK(r.witnesses.front() == "diametrical pairs: 1");

  auto a6 = CoxeterSystem::named(Family::A, 6);
  auto non_link = check_unique_diametrical_pair(BraidGraph::of(a6, W("1213243565")));
  CHECK(non_link.passed());
  CHECK(non_link.witnesses.front() != "diametrical pairs: 1");

  // Dimension-1 link: the single edge is the pair.
  auto a2 = CoxeterSystem::named(Family::A, 2);
  auto dim1 = check_unique_diametrical_pair(BraidGraph::of(a2, W("121")));
  CHECK(dim1.passed());
  CHECK(dim1.witnesses.front() == "diametrical pairs: 1");
}

TEST_CASE("sigbar triple check") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  CHECK(check_sigbar_triples(BraidGraph::of(d4, W("343132343")), 100000, 1).passed());
  CHECK(check_sigbar_triples(BraidGraph::of(d4, W("4341232")), 100000, 1).passed());
  // Dimension 1: no triple of distinct sets exists.
  auto a2 = CoxeterSystem::named(Family::A, 2);
  CHECK(check_sigbar_triples(BraidGraph::of(a2, W("121")), 100000, 1).passed());
}

TEST_CASE("sweeps are deterministic and worker-count independent") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  InstanceSpec spec;
  spec.system = "D:4";
  spec.max_length = 6;
  auto checks = kSweepCheckNames;
  auto one = run_sweep(d4, spec, checks, /*workers=*/1);
  auto four = run_sweep(d4, spec, checks, /*workers=*/4);
  CHECK(one.to_json().dump() == four.to_json().dump());
  CHECK(one.counterexamples.empty());
  CHECK_FALSE(one.invariant_failure);
  CHECK(one.instances > 0);
  CHECK(one.results.size() == static_cast<std::size_t>(one.instances) * checks.size());

  // CSV has a header plus one row per result.
  auto csv = one.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(one.results.size()));
}

TEST_CASE("exhaustive D4 sweep up to length 8 finds no counterexamples") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  InstanceSpec spec;
  spec.system = "D:4";
  spec.max_length = 8;
  auto report = run_sweep(d4, spec, kSweepCheckNames);
  CHECK(report.counterexamples.empty());
  CHECK_FALSE(report.invariant_failure);
}

TEST_CASE("sweeps refuse non-triangle-free systems without exploration") {
  auto affa2 = CoxeterSystem::named(Family::AffineA, 2);
  InstanceSpec spec;
  spec.system = "affA:2";
  spec.max_length = 5;
  CHECK_THROWS_AS(run_sweep(affa2, spec, {"diam-eq-dim"}), ValidationError);

  spec.explore = true;
  auto report = run_sweep(affa2, spec, {"diam-eq-dim"});
  CHECK_FALSE(report.invariant_failure);
  CHECK(report.counterexamples.empty());  // observations never count
  for (const Report& r : report.results) CHECK(r.status == Report::Status::Observed);
}

TEST_CASE("unknown check names are rejected") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  InstanceSpec spec;
  spec.system = "D:4";
  spec.max_length = 3;
  CHECK_THROWS_AS(run_sweep(d4, spec, {"no-such-check"}), ValidationError);
}

TEST_CASE("instance specs round-trip through JSON") {
  nlohmann::json j = {
      {"system", "D:4"},
      {"mode", "random"},
      {"L", 7},
      {"seed", 99},
      {"count", 5},
      {"filters", {{"minDimension", 1}, {"linksOnly", true}}},
      {"caps", {{"budget", 5000}, {"sigbarTriples", 777}}},
  };
  auto spec = InstanceSpec::from_json(j);
  CHECK(spec.system == "D:4");
  CHECK(spec.mode == InstanceSpec::Mode::Random);
  CHECK(spec.max_length == 7);
  CHECK(spec.seed == 99);
  CHECK(spec.count == 5);
  CHECK(spec.min_dimension == 1);
  CHECK(spec.links_only);
  CHECK(spec.budget == 5000);
  CHECK(spec.sigbar_triple_cap == 777);
  auto back = InstanceSpec::from_json(spec.to_json());
  CHECK(back.to_json() == spec.to_json());

  CHECK_THROWS_AS(InstanceSpec::from_json(nlohmann::json{{"mode", "exhaustive"}}),
                  ValidationError);
  CHECK_THROWS_AS(InstanceSpec::from_json(nlohmann::json{{"system", "D:4"}, {"mode", "bogus"}}),
                  ValidationError);
  CHECK_THROWS_AS(
      InstanceSpec::from_json(nlohmann::json{{"system", "D:4"}, {"mode", "random"}}),
      ValidationError);
}
