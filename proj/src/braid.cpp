#include "coxbraid/braid.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "coxbraid/errors.hpp"
#include "coxbraid/links.hpp"

namespace coxbraid {

BraidClass BraidClass::of(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  if (!is_reduced(sys, w, budget))
    throw ValidationError("word '" + w.str() + "' is not reduced");
  return of_reduced(sys, w, budget);
}

BraidClass BraidClass::of_reduced(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  sys.validate(w);
  return BraidClass(sys, detail::closure(sys, w, false, true, budget));
}

bool BraidClass::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

int BraidClass::index_of(const Word& w) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), w);
  if (it == members_.end() || *it != w) return -1;
  return static_cast<int>(it - members_.begin());
}

std::vector<Word> commutation_class(const CoxeterSystem& sys, const Word& w,
                                    std::size_t budget) {
  if (!is_reduced(sys, w, budget))
    throw ValidationError("word '" + w.str() + "' is not reduced");
  return detail::closure(sys, w, true, false, budget);
}

std::vector<Word> reduced_expressions(const CoxeterSystem& sys, const Word& w,
                                      std::size_t budget) {
  if (!is_reduced(sys, w, budget))
    throw ValidationError("word '" + w.str() + "' is not reduced");
  return detail::closure(sys, w, true, true, budget);
}

BraidGraph BraidGraph::of(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  return of(BraidClass::of(sys, w, budget));
}

BraidGraph BraidGraph::of(BraidClass cls) {
  const CoxeterSystem& sys = cls.system();
  const auto& members = cls.members();
  std::vector<int> centers;
  for (const Shadow& s : class_shadows(cls)) centers.push_back(s.center());

  std::vector<LabeledEdge> edges;
  Graph skeleton(cls.size());
  for (int vi = 0; vi < cls.size(); ++vi) {
    const Word& w = members[static_cast<std::size_t>(vi)];
    for (const Shadow& s : shadows(sys, w)) {
      Word moved = apply_move(sys, w, MoveSite{MoveKind::Braid, s.lo});
      int ui = cls.index_of(moved);
      if (ui < 0)
        throw InvariantError("braid move escaped the braid class at word '" + w.str() + "'");
      if (ui < vi) continue;  // each edge once
      auto it = std::lower_bound(centers.begin(), centers.end(), s.center());
      if (it == centers.end() || *it != s.center())
        throw InvariantError("braid move center " + std::to_string(s.center()) +
                             " missing from the class shadows of '" + w.str() + "'");
      int ordinal = static_cast<int>(it - centers.begin()) + 1;
      edges.push_back({vi, ui, ordinal});
      skeleton.add_edge(vi, ui);
    }
  }
  std::sort(edges.begin(), edges.end());
  return BraidGraph(std::move(cls), std::move(edges), std::move(centers), std::move(skeleton));
}

int BraidGraph::edge_label(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return e.label;
  return -1;
}

std::string BraidGraph::to_dot() const {
  std::ostringstream out;
  out << "graph braid {\n";
  for (std::size_t i = 0; i < vertices().size(); ++i)
    out << "  v" << i << " [label=\"" << vertices()[i].str() << "\"];\n";
  for (const auto& e : edges_)
    out << "  v" << e.u << " -- v" << e.v << " [label=" << e.label << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json BraidGraph::to_json() const {
  nlohmann::json j;
  j["system"] = system().name().empty() ? system().spec_text() : system().name();
  auto verts = nlohmann::json::array();
  for (const Word& w : vertices()) verts.push_back(w.str());
  j["vertices"] = std::move(verts);
  auto es = nlohmann::json::array();
  for (const auto& e : edges_) es.push_back(nlohmann::json::array({e.u, e.v, e.label}));
  j["edges"] = std::move(es);
  j["shadowCenters"] = centers_;
  return j;
}

MatsumotoGraph MatsumotoGraph::of(const CoxeterSystem& sys, const Word& w, std::size_t budget) {
  if (!is_reduced(sys, w, budget))
    throw ValidationError("word '" + w.str() + "' is not reduced");
  std::vector<Word> vertices = detail::closure(sys, w, true, true, budget);
  auto index_of = [&](const Word& x) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    return static_cast<int>(it - vertices.begin());
  };
  std::vector<KindedEdge> edges;
  Graph skeleton(static_cast<int>(vertices.size()));
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    const Word& cur = vertices[vi];
    for (const MoveSite& site : enumerate_move_sites(sys, cur)) {
      int ui = index_of(apply_move(sys, cur, site));
      if (ui < static_cast<int>(vi)) continue;
      edges.push_back({static_cast<int>(vi), ui, site.kind});
      skeleton.add_edge(static_cast<int>(vi), ui);
    }
  }
  std::sort(edges.begin(), edges.end());
  return MatsumotoGraph(sys, std::move(vertices), std::move(edges), std::move(skeleton));
}

int MatsumotoGraph::component_count_without(MoveKind deleted) const {
  Graph g(vertex_count());
  for (const auto& e : edges_)
    if (e.kind != deleted) g.add_edge(e.u, e.v);
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  int components = 0;
  for (int s = 0; s < vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
    }
  }
  return components;
}

std::string MatsumotoGraph::to_dot() const {
  std::ostringstream out;
  out << "graph matsumoto {\n";
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    out << "  v" << i << " [label=\"" << vertices_[i].str() << "\"];\n";
  for (const auto& e : edges_)
    out << "  v" << e.u << " -- v" << e.v << " [kind="
        << (e.kind == MoveKind::Commutation ? "commutation" : "braid") << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json MatsumotoGraph::to_json() const {
  nlohmann::json j;
  j["system"] = system_.name().empty() ? system_.spec_text() : system_.name();
  auto verts = nlohmann::json::array();
  for (const Word& w : vertices_) verts.push_back(w.str());
  j["vertices"] = std::move(verts);
  auto es = nlohmann::json::array();
  for (const auto& e : edges_)
    es.push_back(nlohmann::json::array(
        {e.u, e.v, e.kind == MoveKind::Commutation ? "commutation" : "braid"}));
  j["edges"] = std::move(es);
  return j;
}

}  // namespace coxbraid
