#pragma once

// Orbit types of the pointed gauge orbit space for a concrete SU(n)-bundle:
// which Howe labels occur, decided per base manifold, and the induced lattice.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "howestrata/diophantine.hpp"
#include "howestrata/hasse.hpp"
#include "howestrata/howe.hpp"

namespace howestrata {

enum class Manifold { S4, S2xS2, T4, CP2, Dim2, Dim3 };

inline std::string_view to_string(Manifold m) {
  switch (m) {
    case Manifold::S4: return "s4";
    case Manifold::S2xS2: return "s2xs2";
    case Manifold::T4: return "t4";
    case Manifold::CP2: return "cp2";
    case Manifold::Dim2: return "dim2";
    case Manifold::Dim3: return "dim3";
  }
  return "?";
}

inline std::optional<Manifold> parse_manifold(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Manifold m : {Manifold::S4, Manifold::S2xS2, Manifold::T4, Manifold::CP2, Manifold::Dim2, Manifold::Dim3})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

inline bool is_four_dimensional(Manifold m) { return m != Manifold::Dim2 && m != Manifold::Dim3; }

/// SU(n)-bundle over one of the supported bases, with c_2(P) = c2 * generator.
struct BundleSpec {
  Integer n;
  Manifold manifold;
  Integer c2 = 0;

  BundleSpec(Integer n_, Manifold manifold_, Integer c2_ = 0) : n(n_), manifold(manifold_), c2(c2_) {
    if (n < 2) throw std::invalid_argument("bundle rank n must be at least 2");
    if (!is_four_dimensional(manifold) && c2 != 0)
      throw std::invalid_argument("bundles over a base of dimension 2 or 3 are trivial; c2 must be 0");
  }
};

inline constexpr std::string_view criterion_trivial = "dim<4-trivial";
inline constexpr std::string_view criterion_linear = "linear-gcd";
inline constexpr std::string_view criterion_bilinear = "bilinear-gcd";
inline constexpr std::string_view criterion_quadratic = "quadratic-oracle";

struct StratumAnnotation {
  HoweLabel label;
  Integer d_s4;
  Integer d_s2xs2;
  bool present;
  std::string criterion;
};

/// Presence of one label for a bundle, independent of any enumeration.
inline StratumAnnotation annotate_label(const HoweLabel& label, const BundleSpec& spec,
                                  Integer budget = default_search_budget) {
  if (label.n() != spec.n)
    throw std::invalid_argument("label " + to_string(label) + " does not belong to n = " + std::to_string(spec.n));
  StratumAnnotation a{label, d_s4(label), d_s2xs2(label), false, {}};
  switch (spec.manifold) {
    case Manifold::Dim2:
    case Manifold::Dim3:
      a.present = true;
      a.criterion = criterion_trivial;
      break;
    case Manifold::S4:
      a.present = divides(a.d_s4, spec.c2);
      a.criterion = criterion_linear;
      break;
    case Manifold::S2xS2:
    case Manifold::T4:
      a.present = divides(a.d_s2xs2, spec.c2);
      a.criterion = criterion_bilinear;
      break;
    case Manifold::CP2:
      a.present = cp2_solvable(label, spec.c2, budget);
      a.criterion = criterion_quadratic;
      break;
  }
  return a;
}

/// One annotation per label of K^(n), in label order.
inline std::vector<StratumAnnotation> orbit_types(const BundleSpec& spec, Integer budget = default_search_budget) {
  std::vector<StratumAnnotation> out;
  for (const auto& label : enumerate_labels(spec.n)) out.push_back(annotate_label(label, spec, budget));
  return out;
}

inline Integer type_count(const BundleSpec& spec, Integer budget = default_search_budget) {
  Integer count = 0;
  for (const auto& a : orbit_types(spec, budget))
    if (a.present) ++count;
  return count;
}

/// Hasse diagram of the order induced on the present labels.
inline HasseDiagram stratification_graph(const BundleSpec& spec, Integer budget = default_search_budget) {
  const HasseDiagram full = hasse_diagram(spec.n);
  const auto types = orbit_types(spec, budget);
  std::vector<bool> keep;
  keep.reserve(types.size());
  for (const auto& t : types) keep.push_back(t.present);
  return induced_diagram(full, keep);
}

}  // namespace howestrata
