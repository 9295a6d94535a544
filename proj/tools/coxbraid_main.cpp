#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "coxbraid/checks.hpp"
#include "coxbraid/errors.hpp"
#include "coxbraid/lab.hpp"

namespace {

using namespace coxbraid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitBudget = 4;

std::size_t resolve_budget(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("COXBRAID_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw ValidationError("COXBRAID_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

struct SystemSource {
  std::string named;  // FAMILY:RANK or inline spec
  std::string file;   // path to a spec file

  CoxeterSystem load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ValidationError("cannot read system file '" + file + "'");
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return CoxeterSystem::parse(text);
    }
    return system_from_text(named);
  }
};

void add_system_options(CLI::App* cmd, SystemSource& src) {
  auto* named = cmd->add_option("--system", src.named,
                                "named system FAMILY:RANK (A, D, affA, affD) or inline spec");
  auto* file = cmd->add_option("--system-file", src.file, "file holding a system spec");
  named->excludes(file);
  file->excludes(named);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write output file '" + path + "'");
  out << content;
}

std::string shadow_list(const std::vector<Shadow>& shadows) {
  std::string out;
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    if (i) out += " ";
    out += shadow_str(shadows[i]);
  }
  return out.empty() ? "(none)" : out;
}

int cmd_analyze(const SystemSource& src, const std::string& word_text, const std::string& format,
                std::optional<std::size_t> budget_flag, bool no_commutations, bool explore) {
  CoxeterSystem sys = src.load();
  sys.set_commutations_enabled(!no_commutations);
  std::size_t budget = resolve_budget(budget_flag);
  Word w = Word::parse(word_text);
  sys.validate(w);

  nlohmann::json j;
  j["system"] = sys.name().empty() ? sys.spec_text() : sys.name();
  j["word"] = w.str();
  j["length"] = w.size();
  bool reduced = is_reduced(sys, w, budget);
  j["reduced"] = reduced;
  if (!reduced) {
    j["reducedForm"] = reduce(sys, w, budget).str();
    if (format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::string reduced_form = j["reducedForm"].get<std::string>();
      std::cout << "system: " << j["system"].get<std::string>() << "\n"
                << "word: " << w.str() << "\n"
                << "length: " << w.size() << "\n"
                << "reduced: no\n"
                << "a reduced form: " << (reduced_form.empty() ? "(empty)" : reduced_form)
                << "\n";
    }
    return kExitOk;
  }

  auto bg = BraidGraph::of(BraidClass::of_reduced(sys, w, budget));
  const BraidClass& cls = bg.braid_class();
  auto own_shadows = shadows(sys, w);
  auto cls_shadows = class_shadows(cls);
  bool empty_word = w.empty();
  bool link = !empty_word && is_link(cls);
  auto fact = link_factorization(sys, w, budget);
  Signature sig = signature(cls, w);

  j["shadows"] = shadow_list(own_shadows);
  j["classShadows"] = shadow_list(cls_shadows);
  j["dimension"] = bg.dimension();
  j["link"] = link;
  j["factorization"] = fact.str();
  j["signature"] = sig.str();
  j["classSize"] = cls.size();
  j["graph"] = {{"vertices", bg.vertex_count()},
                {"edges", static_cast<int>(bg.edges().size())},
                {"diameter", bg.skeleton().diameter()}};
  bool lambda = sys.triangle_free();
  j["triangleFree"] = lambda;

  auto cube = is_partial_cube(bg.skeleton());
  j["partialCube"] = cube.ok;
  if (cube.ok) j["isometricDimension"] = theta_classes(bg.skeleton()).class_count;

  std::string median_note;
  if (lambda || explore) {
    j["median"] = is_median_graph(bg.skeleton());
    if (!lambda) {
      Report exploration = median_graph_check(sys, w, /*explore=*/true, budget);
      j["exploration"] = exploration.to_json();
      median_note = " (observed; system is not triangle-free)";
    }
  } else {
    j["median"] = nullptr;
    median_note =
        "median analysis refused: system is not triangle-free (rerun with --explore)";
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "system: " << j["system"].get<std::string>() << "\n"
            << "word: " << (w.empty() ? "(empty)" : w.str()) << "\n"
            << "reduced: yes\n"
            << "length: " << w.size() << "\n"
            << "shadows: " << j["shadows"].get<std::string>() << "\n"
            << "class shadows: " << j["classShadows"].get<std::string>() << "\n"
            << "dimension: " << bg.dimension() << "\n"
            << "link: " << (link ? "yes" : "no") << "\n"
            << "factorization: " << (empty_word ? "(empty)" : fact.str()) << "\n"
            << "signature: " << sig.str() << "\n"
            << "class size: " << cls.size() << "\n"
            << "graph: " << bg.vertex_count() << " vertices, " << bg.edges().size()
            << " edges\n"
            << "diameter: " << bg.skeleton().diameter() << "\n"
            << "partial cube: " << (cube.ok ? "yes" : "no") << "\n";
  if (cube.ok)
    std::cout << "isometric dimension: " << j["isometricDimension"].get<int>() << "\n";
  if (j["median"].is_boolean())
    std::cout << "median: " << (j["median"].get<bool>() ? "yes" : "no") << median_note << "\n";
  else
    std::cout << median_note << "\n";
  if (j.contains("exploration")) {
    std::cout << "exploration:\n";
    for (const auto& witness : j["exploration"]["witnesses"])
      std::cout << "  " << witness.get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_graph(const SystemSource& src, const std::string& word_text, const std::string& kind,
              const std::string& format, const std::string& out_path,
              std::optional<std::size_t> budget_flag, bool no_commutations) {
  CoxeterSystem sys = src.load();
  sys.set_commutations_enabled(!no_commutations);
  std::size_t budget = resolve_budget(budget_flag);
  Word w = Word::parse(word_text);
  if (kind == "braid") {
    auto bg = BraidGraph::of(sys, w, budget);
    write_output(out_path, format == "dot" ? bg.to_dot() : bg.to_json().dump(2) + "\n");
  } else {
    auto mg = MatsumotoGraph::of(sys, w, budget);
    write_output(out_path, format == "dot" ? mg.to_dot() : mg.to_json().dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_median(const SystemSource& src, const std::vector<std::string>& word_texts,
               const std::string& format, std::optional<std::size_t> budget_flag) {
  CoxeterSystem sys = src.load();
  std::size_t budget = resolve_budget(budget_flag);
  Word a = Word::parse(word_texts.at(0));
  Word b = Word::parse(word_texts.at(1));
  Word c = Word::parse(word_texts.at(2));
  if (!is_reduced(sys, a, budget))
    throw ValidationError("word '" + a.str() + "' is not reduced");
  auto bg = BraidGraph::of(BraidClass::of_reduced(sys, a, budget));
  Word med = median_via_majority(bg, a, b, c);
  Signature sig = signature(bg.braid_class(), med);
  if (format == "json") {
    nlohmann::json j;
    j["median"] = med.str();
    j["signature"] = sig.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "median: " << med.str() << "\n"
              << "signature: " << sig.str() << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& csv_path, int workers,
              std::optional<std::size_t> budget_flag) {
  std::ifstream in(config_path);
  if (!in) throw ValidationError("cannot read sweep config '" + config_path + "'");
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad sweep config JSON: ") + e.what());
  }
  InstanceSpec spec = InstanceSpec::from_json(config);
  if (budget_flag) spec.budget = *budget_flag;
  else if (!config.contains("caps") || !config.at("caps").contains("budget"))
    spec.budget = resolve_budget(std::nullopt);
  std::vector<std::string> checks = kSweepCheckNames;
  if (config.contains("checks")) checks = config.at("checks").get<std::vector<std::string>>();

  CoxeterSystem sys = system_from_text(spec.system);
  SweepReport report = run_sweep(sys, spec, checks, workers);
  write_output(out_path, report.to_json().dump(2) + "\n");
  if (!csv_path.empty()) write_output(csv_path, report.to_csv());
  if (report.invariant_failure) {
    std::cerr << "invariant violation: " << report.invariant_message << "\n";
    return kExitInvariant;
  }
  if (!report.counterexamples.empty()) {
    std::cerr << "counterexamples found: " << report.counterexamples.size() << "\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid classes, braid graphs, and their verification toolkit"};
  app.require_subcommand(1);

  SystemSource src;
  std::string word_text, format = "text", kind = "braid", out_path, csv_path, config_path;
  std::vector<std::string> median_words;
  std::optional<std::size_t> budget_flag;
  bool no_commutations = false, explore = false;
  int workers = 0;

  auto* analyze = app.add_subcommand("analyze", "reducedness, shadows, links, class statistics");
  add_system_options(analyze, src);
  analyze->add_option("--word", word_text, "word literal")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--budget", budget_flag, "closure node budget");
  analyze->add_flag("--no-commutations", no_commutations,
                    "treat commuting pairs as unrelated (no commutation moves)");
  analyze->add_flag("--explore", explore, "observe statements outside their hypotheses");

  auto* graph = app.add_subcommand("graph", "export a braid or full move graph");
  add_system_options(graph, src);
  graph->add_option("--word", word_text, "word literal")->required();
  graph->add_option("--kind", kind)->check(CLI::IsMember({"braid", "matsumoto"}));
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out_path, "output file (stdout when absent)");
  graph->add_option("--budget", budget_flag, "closure node budget");
  graph->add_flag("--no-commutations", no_commutations);

  auto* median = app.add_subcommand("median", "median of three braid-equivalent words");
  add_system_options(median, src);
  median->add_option("--word", median_words, "three word literals")->expected(3);
  median->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  median->add_option("--budget", budget_flag, "closure node budget");

  auto* sweep = app.add_subcommand("sweep", "run conjecture checks over generated instances");
  sweep->add_option("--config", config_path, "sweep configuration JSON")->required();
  sweep->add_option("--out", out_path, "report JSON file (stdout when absent)");
  sweep->add_option("--csv", csv_path, "also write a CSV report");
  sweep->add_option("--workers", workers, "worker threads (0 = auto)");
  sweep->add_option("--budget", budget_flag, "closure node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) {
      if (src.named.empty() && src.file.empty())
        throw ValidationError("one of --system or --system-file is required");
      return cmd_analyze(src, word_text, format, budget_flag, no_commutations, explore);
    }
    if (app.got_subcommand(graph)) {
      if (src.named.empty() && src.file.empty())
        throw ValidationError("one of --system or --system-file is required");
      if (format == "text") format = "dot";
      return cmd_graph(src, word_text, kind, format, out_path, budget_flag, no_commutations);
    }
    if (app.got_subcommand(median)) {
      if (src.named.empty() && src.file.empty())
        throw ValidationError("one of --system or --system-file is required");
      if (median_words.size() != 3) throw ValidationError("median needs exactly three --word values");
      return cmd_median(src, median_words, format, budget_flag);
    }
    if (app.got_subcommand(sweep))
      return cmd_sweep(config_path, out_path, csv_path, workers, budget_flag);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
