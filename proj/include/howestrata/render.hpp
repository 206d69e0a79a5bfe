#pragma once

// Text, JSON and Graphviz DOT renderings of labels, diagrams and strata.
// All output is deterministic: nodes and edges are emitted in label order.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "howestrata/diophantine.hpp"
#include "howestrata/hasse.hpp"
#include "howestrata/strata.hpp"

namespace howestrata::render {

using Json = nlohmann::ordered_json;

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string fraction(Integer a, Integer b) { return std::to_string(a) + "/" + std::to_string(b); }

// --- enumerate -------------------------------------------------------------

inline void labels_text(std::ostream& os, const std::vector<HoweLabel>& labels) {
  for (const auto& l : labels) os << to_string(l) << '\n';
}

inline Json labels_json(const std::vector<HoweLabel>& labels) {
  Json arr = Json::array();
  for (const auto& l : labels) arr.push_back(to_string(l));
  return arr;
}

// --- hasse -----------------------------------------------------------------

inline void hasse_text(std::ostream& os, const HasseDiagram& d, bool annotate) {
  os << "nodes " << d.nodes.size() << '\n';
  for (const auto& l : d.nodes) {
    os << "  " << to_string(l);
    if (annotate) os << "  " << fraction(d_s4(l), d_s2xs2(l));
    os << '\n';
  }
  os << "edges " << d.edges.size() << '\n';
  for (auto [a, b] : d.edges) os << "  " << to_string(d.nodes[a]) << " -> " << to_string(d.nodes[b]) << '\n';
}

inline Json edges_json(const HasseDiagram& d) {
  Json edges = Json::array();
  for (auto [a, b] : d.edges) edges.push_back(Json::array({to_string(d.nodes[a]), to_string(d.nodes[b])}));
  return edges;
}

inline Json hasse_json(const HasseDiagram& d, bool annotate) {
  Json nodes = Json::array();
  for (const auto& l : d.nodes) {
    if (annotate)
      nodes.push_back(Json{{"label", to_string(l)}, {"d_s4", d_s4(l)}, {"d_s2xs2", d_s2xs2(l)}});
    else
      nodes.push_back(to_string(l));
  }
  return Json{{"n", d.n}, {"nodes", std::move(nodes)}, {"edges", edges_json(d)}};
}

inline void hasse_dot(std::ostream& os, const HasseDiagram& d, bool annotate) {
  os << "digraph howe_su" << d.n << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (const auto& l : d.nodes) {
    const auto id = to_string(l);
    os << "  " << dot_quote(id);
    if (annotate) os << " [label=" << dot_quote(id + "\n" + fraction(d_s4(l), d_s2xs2(l))) << "]";
    os << ";\n";
  }
  for (auto [a, b] : d.edges)
    os << "  " << dot_quote(to_string(d.nodes[a])) << " -> " << dot_quote(to_string(d.nodes[b])) << ";\n";
  os << "}\n";
}

// --- strata ----------------------------------------------------------------

inline Json strata_json(const BundleSpec& spec, const std::vector<StratumAnnotation>& types,
                        const HasseDiagram& graph) {
  Json arr = Json::array();
  for (const auto& t : types)
    arr.push_back(Json{{"label", to_string(t.label)},
                       {"d_s4", t.d_s4},
                       {"d_s2xs2", t.d_s2xs2},
                       {"present", t.present},
                       {"criterion", t.criterion}});
  return Json{{"n", spec.n},
              {"manifold", std::string(to_string(spec.manifold))},
              {"c2", spec.c2},
              {"types", std::move(arr)},
              {"edges", edges_json(graph)}};
}

inline void strata_text(std::ostream& os, const BundleSpec& spec, const std::vector<StratumAnnotation>& types,
                        const HasseDiagram& graph) {
  std::size_t present = 0, width = 5;
  for (const auto& t : types) {
    if (t.present) ++present;
    width = std::max(width, to_string(t.label).size());
  }
  os << "SU(" << spec.n << ") over " << to_string(spec.manifold) << ", c2 = " << spec.c2 << ": " << present
     << " of " << types.size() << " orbit types present\n";
  auto pad = [&](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("label", width) << "  " << pad("dS4", 5) << pad("dS2xS2", 8) << pad("present", 9) << "criterion\n";
  for (const auto& t : types)
    os << pad(to_string(t.label), width) << "  " << pad(std::to_string(t.d_s4), 5)
       << pad(std::to_string(t.d_s2xs2), 8) << pad(t.present ? "yes" : "no", 9) << t.criterion << '\n';
  os << "edges " << graph.edges.size() << '\n';
  for (auto [a, b] : graph.edges)
    os << "  " << to_string(graph.nodes[a]) << " -> " << to_string(graph.nodes[b]) << '\n';
}

/// Absent labels are drawn gray and take no part in edges.
inline void strata_dot(std::ostream& os, const BundleSpec& spec, const std::vector<StratumAnnotation>& types,
                       const HasseDiagram& graph) {
  os << "digraph strata_su" << spec.n << "_" << to_string(spec.manifold) << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (const auto& t : types) {
    const auto id = to_string(t.label);
    os << "  " << dot_quote(id) << " [label=" << dot_quote(id + "\n" + fraction(t.d_s4, t.d_s2xs2));
    if (!t.present) os << ", color=gray, fontcolor=gray, style=dashed";
    os << "];\n";
  }
  for (auto [a, b] : graph.edges)
    os << "  " << dot_quote(to_string(graph.nodes[a])) << " -> " << dot_quote(to_string(graph.nodes[b])) << ";\n";
  os << "}\n";
}

// --- check -----------------------------------------------------------------

inline void check_text(std::ostream& os, const BundleSpec& spec, const StratumAnnotation& a) {
  const auto& l = a.label;
  os << "label      " << to_string(l) << '\n'
     << "n          " << l.n() << '\n'
     << "manifold   " << to_string(spec.manifold) << '\n'
     << "c2         " << spec.c2 << '\n'
     << "gcd(k)     " << gcd_seq(l.k()) << '\n'
     << "gcd(red k) " << a.d_s4 << '\n'
     << "gcd(L)     " << gcd_l(l) << '\n'
     << "d_S4       " << a.d_s4 << '\n'
     << "d_S2xS2    " << a.d_s2xs2 << '\n'
     << "criterion  " << a.criterion << '\n'
     << "verdict    " << (a.present ? "present" : "absent") << '\n';
}

inline Json check_json(const BundleSpec& spec, const StratumAnnotation& a) {
  const auto& l = a.label;
  return Json{{"label", to_string(l)},
              {"n", l.n()},
              {"manifold", std::string(to_string(spec.manifold))},
              {"c2", spec.c2},
              {"gcd_k", gcd_seq(l.k())},
              {"gcd_red_k", a.d_s4},
              {"gcd_l", gcd_l(l)},
              {"d_s4", a.d_s4},
              {"d_s2xs2", a.d_s2xs2},
              {"present", a.present},
              {"criterion", a.criterion}};
}

}  // namespace howestrata::render
