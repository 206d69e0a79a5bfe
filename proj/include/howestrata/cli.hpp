#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
//   enumerate <n>
//   hasse <n> [--annotate]
//   strata --n <n> --manifold <s4|s2xs2|t4|cp2|dim2|dim3> --c2 <int> [--only <label>]
//   check <label> <manifold> [<c2>]
//   global: --format text|json|dot
//
// Exit codes: 0 ok, 2 usage or parse error, 3 search budget exceeded.

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "howestrata/render.hpp"
#include "howestrata/strata.hpp"

namespace howestrata::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads STRATA_BUDGET; falls back to the library default when unset.
inline Integer budget_from_environment() {
  const char* raw = std::getenv("STRATA_BUDGET");
  if (raw == nullptr || *raw == '\0') return default_search_budget;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (*end != '\0' || value < 1) throw UsageError(std::string("STRATA_BUDGET must be a positive integer, got '") + raw + "'");
  return value;
}

inline Manifold require_manifold(const std::string& text) {
  auto m = parse_manifold(text);
  if (!m) throw UsageError("unknown manifold '" + text + "' (expected s4, s2xs2, t4, cp2, dim2 or dim3)");
  return *m;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               Integer budget = default_search_budget) {
  CLI::App app{"Orbit types of the pointed gauge orbit space for SU(n)-bundles", "howe-strata"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

  Integer n = 0;
  bool annotate = false;
  std::string manifold_text, label_text, only_text;
  Integer c2 = 0;

  auto* enumerate = app.add_subcommand("enumerate", "List the canonical Howe labels of SU(n)");
  enumerate->add_option("n", n, "Group rank")->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of Howe(SU(n))");
  hasse->add_option("n", n, "Group rank")->required();
  hasse->add_flag("--annotate", annotate, "Append dS4/dS2xS2 to node labels");

  auto* strata = app.add_subcommand("strata", "Orbit types for a bundle");
  strata->add_option("--n", n, "Group rank")->required();
  strata->add_option("--manifold", manifold_text, "Base manifold")->required();
  strata->add_option("--c2", c2, "Second Chern number");
  strata->add_option("--only", only_text, "Decide a single label instead of enumerating");

  auto* check = app.add_subcommand("check", "Decide presence of one label");
  check->add_option("label", label_text, "Label such as \"(4 4 6|1 1 2)\"")->required();
  check->add_option("manifold", manifold_text, "Base manifold")->required();
  check->add_option("c2", c2, "Second Chern number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (enumerate->parsed()) {
      if (n < 1) throw UsageError("n must be a positive integer");
      if (format == "dot") throw UsageError("--format dot is only available for hasse and strata");
      const auto labels = enumerate_labels(n);
      if (format == "json")
        out << render::labels_json(labels).dump() << '\n';
      else
        render::labels_text(out, labels);
    } else if (hasse->parsed()) {
      if (n < 1) throw UsageError("n must be a positive integer");
      const auto diagram = hasse_diagram(n);
      if (format == "json")
        out << render::hasse_json(diagram, annotate).dump() << '\n';
      else if (format == "dot")
        render::hasse_dot(out, diagram, annotate);
      else
        render::hasse_text(out, diagram, annotate);
    } else if (strata->parsed()) {
      const BundleSpec spec(n, require_manifold(manifold_text), c2);
      std::vector<StratumAnnotation> types;
      HasseDiagram graph;
      graph.n = n;
      if (!only_text.empty()) {
        types.push_back(annotate_label(parse_label(only_text), spec, budget));
        if (types.front().present) graph.nodes.push_back(types.front().label);
      } else {
        types = orbit_types(spec, budget);
        std::vector<bool> keep;
        for (const auto& t : types) keep.push_back(t.present);
        graph = induced_diagram(hasse_diagram(n), keep);
      }
      if (format == "json")
        out << render::strata_json(spec, types, graph).dump() << '\n';
      else if (format == "dot")
        render::strata_dot(out, spec, types, graph);
      else
        render::strata_text(out, spec, types, graph);
    } else if (check->parsed()) {
      if (format == "dot") throw UsageError("--format dot is only available for hasse and strata");
      const auto label = parse_label(label_text);
      const BundleSpec spec(label.n(), require_manifold(manifold_text), c2);
      const auto a = annotate_label(label, spec, budget);
      if (format == "json")
        out << render::check_json(spec, a).dump() << '\n';
      else
        render::check_text(out, spec, a);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               Integer budget = default_search_budget) {
  std::vector<const char*> argv{"howe-strata"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err, budget);
}

}  // namespace howestrata::cli
