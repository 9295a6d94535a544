#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "coxbraid/braid.hpp"
#include "coxbraid/errors.hpp"
#include "coxbraid/links.hpp"
#include "test_helpers.hpp"

using namespace coxbraid;
using testutil::W;

namespace {

const std::set<std::string> kAlphaClass = {
    "1213243565", "2123243565", "2132343565", "2132434565",
    "1213243656", "2123243656", "2132343656", "2132434656"};
const std::set<std::string> kBetaClass = {"4341232", "3431232", "4341323", "3431323", "3413123"};
const std::set<std::string> kGammaClass = {"343132343", "341312343", "434132343",
                                           "343123243", "434123243", "343132434",
                                           "341312434", "434132434"};

}  // namespace

TEST_CASE("braid classes reproduce the worked examples exactly") {
  auto a6 = CoxeterSystem::named(Family::A, 6);
  auto d4 = CoxeterSystem::named(Family::D, 4);

  auto alpha = BraidClass::of(a6, W("1213243565"));
  CHECK(testutil::literals(alpha.members()) == kAlphaClass);

  auto beta = BraidClass::of(d4, W("4341232"));
  CHECK(testutil::literals(beta.members()) == kBetaClass);

  auto gamma = BraidClass::of(d4, W("343132343"));
  CHECK(testutil::literals(gamma.members()) == kGammaClass);

  // Against the independent closure oracle.
  CHECK(testutil::to_oracle_set(gamma.members()) ==
        oracle::closure(testutil::to_oracle(d4), {3, 4, 3, 1, 3, 2, 3, 4, 3},
                        /*commutations=*/false, /*braids=*/true));

  auto a2 = CoxeterSystem::named(Family::A, 2);
  CHECK(testutil::literals(BraidClass::of(a2, W("12")).members()) ==
        std::set<std::string>{"12"});
}

TEST_CASE("braid class rejects non-reduced input") {
  auto a2 = CoxeterSystem::named(Family::A, 2);
  CHECK_THROWS_AS(BraidClass::of(a2, W("11")), ValidationError);
}

TEST_CASE("representative stability and membership") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto cls = BraidClass::of(d4, W("4341232"));
  for (const Word& member : cls.members()) {
    auto again = BraidClass::of(d4, member);
    CHECK(again.members() == cls.members());
    CHECK(again.representative() == cls.representative());
  }
  CHECK(cls.representative() == W("3413123"));  // lexicographically least
  CHECK(cls.contains(W("4341323")));
  CHECK_FALSE(cls.contains(W("1321434")));
  CHECK(cls.index_of(W("1321434")) == -1);
}

TEST_CASE("commutation classes") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto a2 = CoxeterSystem::named(Family::A, 2);
  auto a3 = CoxeterSystem::named(Family::A, 3);

  CHECK(testutil::literals(commutation_class(a2, W("121"))) == std::set<std::string>{"121"});
  CHECK(testutil::literals(commutation_class(a3, W("13"))) ==
        std::set<std::string>{"13", "31"});

  // Example count: R(1321434) splits into 5 commutation classes.
  auto all = reduced_expressions(d4, W("1321434"));
  std::set<std::set<std::string>> commutation_classes;
  for (const Word& w : all) commutation_classes.insert(testutil::literals(commutation_class(d4, w)));
  CHECK(commutation_classes.size() == 5);
}

TEST_CASE("reduced_expressions equals the full move closure") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto all = reduced_expressions(d4, W("1321434"));
  CHECK(all.size() == 15);
  CHECK(all == tits_closure(d4, W("1321434")));
  auto a1 = CoxeterSystem::named(Family::A, 1);
  CHECK(reduced_expressions(a1, W("1")).size() == 1);
  auto a2 = CoxeterSystem::named(Family::A, 2);
  CHECK(testutil::to_oracle_set(reduced_expressions(a2, W("121"))) ==
        oracle::closure(testutil::to_oracle(a2), {1, 2, 1}));
}

TEST_CASE("braid and commutation classes partition the reduced expressions") {
  std::mt19937_64 rng(23);
  auto d4 = CoxeterSystem::named(Family::D, 4);
  for (int trial = 0; trial < 8; ++trial) {
    Word w = testutil::random_reduced_word(d4, 7, rng);
    auto all = reduced_expressions(d4, w);
    std::size_t braid_total = 0, comm_total = 0;
    std::set<std::string> braid_seen, comm_seen;
    for (const Word& x : all) {
      auto bc = BraidClass::of_reduced(d4, x);
      if (!braid_seen.count(bc.representative().str())) {
        braid_seen.insert(bc.representative().str());
        braid_total += bc.members().size();
        for (const Word& m : bc.members()) CHECK(std::binary_search(all.begin(), all.end(), m));
      }
      auto cc = commutation_class(d4, x);
      if (!comm_seen.count(cc.front().str())) {
        comm_seen.insert(cc.front().str());
        comm_total += cc.size();
      }
    }
    CHECK(braid_total == all.size());
    CHECK(comm_total == all.size());
  }
}

TEST_CASE("braid graph of the 5-member class is the 5-vertex, 5-edge shape") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto bg = BraidGraph::of(d4, W("4341232"));
  CHECK(bg.vertex_count() == 5);
  CHECK(bg.edges().size() == 5);
  CHECK(bg.dimension() == 3);
  CHECK(bg.shadow_centers() == std::vector<int>{2, 4, 6});
  CHECK(bg.skeleton().is_bipartite());
  CHECK(bg.skeleton().connected());

  // One 4-cycle plus a pendant: degree sequence 1,2,2,2,3.
  std::vector<int> degrees;
  for (int v = 0; v < 5; ++v) degrees.push_back(bg.skeleton().degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 2, 2, 2, 3});
}

TEST_CASE("braid graph of the 8-member class has 10 edges") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto bg = BraidGraph::of(d4, W("343132343"));
  CHECK(bg.vertex_count() == 8);
  CHECK(bg.edges().size() == 10);
  CHECK(bg.skeleton().is_bipartite());
}

TEST_CASE("single-vertex braid graph") {
  auto a1 = CoxeterSystem::named(Family::A, 1);
  auto bg = BraidGraph::of(a1, W("1"));
  CHECK(bg.vertex_count() == 1);
  CHECK(bg.edges().empty());
  CHECK(bg.dimension() == 0);
}

TEST_CASE("edge labels mark exactly the differing signature ordinal") {
  std::mt19937_64 rng(29);
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto a4 = CoxeterSystem::named(Family::A, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const CoxeterSystem& sys = trial % 2 ? d4 : a4;
    Word w = testutil::random_reduced_word(sys, 9, rng);
    auto bg = BraidGraph::of(BraidClass::of_reduced(sys, w));
    for (const LabeledEdge& e : bg.edges()) {
      const Word& u = bg.vertices()[static_cast<std::size_t>(e.u)];
      const Word& v = bg.vertices()[static_cast<std::size_t>(e.v)];
      for (int ordinal = 1; ordinal <= bg.dimension(); ++ordinal) {
        int center = bg.shadow_centers()[static_cast<std::size_t>(ordinal - 1)];
        if (ordinal == e.label)
          CHECK(u.letter(center) != v.letter(center));
        else
          CHECK(u.letter(center) == v.letter(center));
      }
    }
  }
}

TEST_CASE("braid graphs of equivalent words coincide") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto bg1 = BraidGraph::of(d4, W("343132343"));
  auto bg2 = BraidGraph::of(d4, W("434132434"));
  CHECK(bg1.vertices() == bg2.vertices());
  CHECK(bg1.edges() == bg2.edges());

  // A commutation-related word yields a different vertex set.
  auto bg3 = BraidGraph::of(d4, W("1324134"));
  auto bg4 = BraidGraph::of(d4, W("1321434"));
  CHECK(bg3.vertices() != bg4.vertices());
}

TEST_CASE("matsumoto graph of 1321434") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto mg = MatsumotoGraph::of(d4, W("1321434"));
  CHECK(mg.vertex_count() == 15);
  CHECK(mg.skeleton().connected());
  CHECK(mg.skeleton().is_bipartite());
  CHECK(mg.component_count_without(MoveKind::Commutation) == 9);  // braid classes
  CHECK(mg.component_count_without(MoveKind::Braid) == 5);        // commutation classes
}

TEST_CASE("matsumoto graph of 121 has one braid edge") {
  auto a2 = CoxeterSystem::named(Family::A, 2);
  auto mg = MatsumotoGraph::of(a2, W("121"));
  CHECK(mg.vertex_count() == 2);
  REQUIRE(mg.edges().size() == 1);
  CHECK(mg.edges()[0].kind == MoveKind::Braid);
}

TEST_CASE("exports are deterministic and well-formed") {
  auto d4 = CoxeterSystem::named(Family::D, 4);
  auto bg = BraidGraph::of(d4, W("4341232"));
  CHECK(bg.to_dot() == bg.to_dot());

  auto j = bg.to_json();
  CHECK(j.at("vertices").size() == 5);
  CHECK(j.at("edges").size() == 5);
  CHECK(j.at("shadowCenters") == nlohmann::json({2, 4, 6}));
  CHECK(j.at("system") == "D:4");
  // Graph JSON is accepted by the generic reader.
  auto g = Graph::from_json(j);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);

  auto mg = MatsumotoGraph::of(d4, W("1321434"));
  auto mj = mg.to_json();
  CHECK(mj.at("vertices").size() == 15);
  int commutation_edges = 0;
  for (const auto& e : mj.at("edges"))
    if (e.at(2) == "commutation") ++commutation_edges;
  CHECK(commutation_edges == 12);
  CHECK(mg.to_dot().find("kind=braid") != std::string::npos);

  auto empty_graph = BraidGraph::of(d4, Word{});
  CHECK(empty_graph.vertex_count() == 1);
  CHECK(empty_graph.edges().empty());
}

TEST_CASE("budgets cap braid class growth") {
  auto a6 = CoxeterSystem::named(Family::A, 6);
  CHECK_THROWS_AS(BraidClass::of(a6, W("1213243565"), 4), BudgetError);
}
