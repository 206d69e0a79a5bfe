#pragma once

// Solvability of the degree-4 Chern class equation for a reduction to the
// centralizer of SU(J), on the base manifolds S^4, S^2 x S^2 (and T^4) and CP^2.
//
//   S^4:      sum k_i b_i = c_P with b_i = 0 where m_i = 1     -> d_s4(J) | c_P
//   S^2xS^2:  bilinear form in the lattice parameters          -> d_s2xs2(J) | c_P
//   CP^2:     g*b + Q(a) = c_P subject to sum k_i a_i = 0,
//             Q(a) = 1/2 sum_ij k_i (k_j - delta_ij) a_i a_j   -> cp2_solvable

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "howestrata/howe.hpp"
#include "howestrata/integer.hpp"

namespace howestrata {

inline constexpr Integer default_search_budget = 10'000'000;

/// A finite search would exceed its iteration cap.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const HoweLabel& l, const std::string& detail)
      : std::runtime_error("search budget exceeded for label " + to_string(l) + ": " + detail),
        label(l) {}
  HoweLabel label;
};

inline Integer gcd_seq(const std::vector<Integer>& values) {
  return gcd_seq(std::span<const Integer>(values));
}

/// k with every entry whose multiplicity m_i is 1 removed.
inline std::vector<Integer> reduced_k(const HoweLabel& label) {
  std::vector<Integer> out;
  for (const auto& b : label.blocks())
    if (b.m != 1) out.push_back(b.k);
  return out;
}

/// gcd(red k), with gcd of the empty sequence equal to 0.
inline Integer d_s4(const HoweLabel& label) { return gcd_seq(reduced_k(label)); }

/// Absolute values of the nonzero coefficients of the bilinear equation over
/// S^2 x S^2, one per index triple m < i < j (g k~_m k~_i k~_j) and one per
/// index pair m < i (g k~_m k~_i (k~_m + k~_i)). Empty when r = 1.
inline std::vector<Integer> l_coefficients(const HoweLabel& label) {
  const auto k = label.k();
  const Integer g = gcd_seq(k);
  const std::size_t r = k.size();
  std::vector<Integer> kt(r);
  for (std::size_t i = 0; i < r; ++i) kt[i] = k[i] / g;

  std::vector<Integer> out;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const Integer base = checked_mul(checked_mul(g, kt[a]), kt[b]);
      for (std::size_t c = b + 1; c < r; ++c) out.push_back(checked_mul(base, kt[c]));
      out.push_back(checked_mul(base, checked_add(kt[a], kt[b])));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Integer gcd_l(const HoweLabel& label) { return gcd_seq(l_coefficients(label)); }

/// gcd(d_s4(J), gcd(L)). Governs S^2 x S^2 and T^4.
inline Integer d_s2xs2(const HoweLabel& label) { return gcd(d_s4(label), gcd_l(label)); }

// ---------------------------------------------------------------------------
// Integer solutions of sum k_i a_i = 0.

struct SkolemGenerator {
  std::size_t p;  // 0-based, p < q
  std::size_t q;
  std::vector<Integer> vector;
};

/// Generators of the lattice {a : sum k_i a_i = 0}: for each pair p < q the
/// vector with k~_q at p and -k~_p at q, where k~ = k / gcd(k). Integer
/// combinations give every solution.
struct SkolemBasis {
  std::vector<Integer> reduced;  // k~
  std::vector<SkolemGenerator> generators;

  /// a(t) = sum over pairs of t_pq * generator_pq.
  std::vector<Integer> combine(std::span<const Integer> t) const {
    if (t.size() != generators.size()) throw std::invalid_argument("combine: wrong parameter count");
    std::vector<Integer> a(reduced.size(), 0);
    for (std::size_t g = 0; g < generators.size(); ++g)
      for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = checked_add(a[i], checked_mul(t[g], generators[g].vector[i]));
    return a;
  }
};

inline SkolemBasis skolem_basis(std::span<const Integer> k) {
  if (k.size() < 2) throw std::invalid_argument("skolem_basis: need at least two entries");
  for (Integer v : k)
    if (v < 1) throw std::invalid_argument("skolem_basis: entries must be positive");
  const Integer g = gcd_seq(k);
  SkolemBasis basis;
  for (Integer v : k) basis.reduced.push_back(v / g);
  const std::size_t r = k.size();
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = p + 1; q < r; ++q) {
      std::vector<Integer> v(r, 0);
      v[p] = basis.reduced[q];
      v[q] = -basis.reduced[p];
      basis.generators.push_back({p, q, std::move(v)});
    }
  return basis;
}

inline SkolemBasis skolem_basis(const std::vector<Integer>& k) {
  return skolem_basis(std::span<const Integer>(k));
}

// ---------------------------------------------------------------------------
// The CP^2 quadratic equation.

/// 2 Q(a) = sum_ij k_i (k_j - delta_ij) a_i a_j, summed exactly.
inline Integer twice_quad_value(const HoweLabel& label, std::span<const Integer> a) {
  const auto k = label.k();
  if (a.size() != k.size()) throw std::invalid_argument("quad_value: vector length must equal r");
  Integer sum = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j) {
      const Integer coeff = checked_mul(k[i], k[j] - (i == j ? 1 : 0));
      sum = checked_add(sum, checked_mul(coeff, checked_mul(a[i], a[j])));
    }
  return sum;
}

inline Integer quad_value(const HoweLabel& label, std::span<const Integer> a) {
  const Integer twice = twice_quad_value(label, a);
  if (twice % 2 != 0) throw std::logic_error("quadratic form took a half-integral value");
  return twice / 2;
}

inline Integer quad_value(const HoweLabel& label, const std::vector<Integer>& a) {
  return quad_value(label, std::span<const Integer>(a));
}

/// g*b + Q(a) = c_P with sum k_i a_i = 0, for one label.
struct QuadraticInstance {
  HoweLabel label;
  Integer g;  // gcd(red k)

  explicit QuadraticInstance(HoweLabel l) : label(std::move(l)), g(d_s4(label)) {}

  bool satisfies_constraint(std::span<const Integer> a) const {
    const auto k = label.k();
    if (a.size() != k.size()) return false;
    Integer s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s = checked_add(s, checked_mul(k[i], a[i]));
    return s == 0;
  }

  Integer value(std::span<const Integer> a) const { return quad_value(label, a); }
};

namespace detail {

// g = 0: find a with sum k_i a_i = 0 and sum k_i a_i^2 = target (>= 0). On
// the constraint surface Q(a) = -1/2 sum k_i a_i^2, so the box
// |a_i| <= sqrt(target / k_i) is exhaustive.
class DefiniteSearch {
 public:
  DefiniteSearch(const HoweLabel& label, Integer target, Integer budget)
      : label_(label), k_(label.k()), target_(target), budget_(budget) {}

  bool run() { return descend(0, 0, 0); }

 private:
  bool descend(std::size_t i, Integer linear, Integer squares) {
    if (++visited_ > budget_)
      throw BudgetExceeded(label_, "more than " + std::to_string(budget_) + " lattice points");
    const std::size_t last = k_.size() - 1;
    const Integer left = target_ - squares;
    if (i == last) {
      if (linear % k_[last] != 0) return false;
      const Integer a = -linear / k_[last];
      return checked_mul(k_[last], checked_mul(a, a)) == left;
    }
    const Integer bound = isqrt(left / k_[i]);
    for (Integer a = -bound; a <= bound; ++a) {
      const Integer sq = checked_mul(k_[i], checked_mul(a, a));
      if (sq > left) continue;
      if (descend(i + 1, checked_add(linear, checked_mul(k_[i], a)), squares + sq)) return true;
    }
    return false;
  }

  const HoweLabel& label_;
  std::vector<Integer> k_;
  Integer target_;
  Integer budget_;
  Integer visited_ = 0;
};

// g > 0: Q(a(t)) has integer coefficients in t, so Q mod g depends only on
// t mod g. Scan t over [0, g)^P and test c_P + 1/2 sum k_i a_i^2 = 0 (mod g).
// a_i is tracked mod 2g, which fixes sum k_i a_i^2 mod 2g; that sum is even
// because sum k_i a_i = 0.
inline bool modular_search(const HoweLabel& label, Integer g, Integer c, Integer budget) {
  if (g == 1) return true;
  const auto k = label.k();
  const std::size_t r = k.size();
  const Integer mod2 = checked_mul(2, g);

  std::vector<std::vector<Integer>> gens;
  if (r >= 2)
    for (const auto& gen : skolem_basis(k).generators) gens.push_back(gen.vector);
  const std::size_t params = gens.size();

  Integer total = 1;
  for (std::size_t p = 0; p < params; ++p) {
    if (__builtin_mul_overflow(total, g, &total) || total > budget)
      throw BudgetExceeded(label, std::to_string(g) + "^" + std::to_string(params) +
                                      " residue vectors exceed the cap of " + std::to_string(budget));
  }

  std::vector<Integer> k_mod(r), step(params * r), wrap(params * r);
  for (std::size_t i = 0; i < r; ++i) k_mod[i] = mod_floor(k[i], mod2);
  for (std::size_t p = 0; p < params; ++p)
    for (std::size_t i = 0; i < r; ++i) {
      step[p * r + i] = mod_floor(gens[p][i], mod2);
      // Going from t_p = g - 1 back to 0 subtracts (g - 1) * generator.
      wrap[p * r + i] = mod_floor(-mul_mod(g - 1, step[p * r + i], mod2), mod2);
    }

  const Integer c_mod = mod_floor(c, g);
  std::vector<Integer> a(r, 0);
  std::vector<Integer> t(params, 0);
  while (true) {
    Integer s = 0;
    for (std::size_t i = 0; i < r; ++i) s = (s + mul_mod(k_mod[i], mul_mod(a[i], a[i], mod2), mod2)) % mod2;
    if (s % 2 != 0) throw std::logic_error("constraint lattice produced odd sum k_i a_i^2");
    if ((c_mod + s / 2) % g == 0) return true;

    std::size_t p = 0;
    for (; p < params; ++p) {
      const auto& delta = (t[p] + 1 == g) ? wrap : step;
      for (std::size_t i = 0; i < r; ++i) a[i] = (a[i] + delta[p * r + i]) % mod2;
      if (++t[p] < g) break;
      t[p] = 0;
    }
    if (p == params) return false;
  }
}

}  // namespace detail

/// True iff integers b and a exist with sum k_i a_i = 0 and
/// gcd(red k) * b + Q(a) = c_P.
inline bool cp2_solvable(const HoweLabel& label, Integer c, Integer budget = default_search_budget) {
  const QuadraticInstance inst(label);
  if (inst.g > 0) return detail::modular_search(label, inst.g, c, budget);
  if (c > 0) return false;
  if (c == 0) return true;
  return detail::DefiniteSearch(label, checked_mul(-2, c), budget).run();
}

/// Closed-form representability of -c_P by a1^2 + a1 a2 + a2^2.
inline bool jones_solvable(Integer c) {
  if (c > 0) return false;
  if (c == 0) return true;
  Integer v = checked_neg(c);
  while (v % 3 == 0) v /= 3;
  if (v % 3 == 2) return false;
  Integer rest = checked_neg(c);
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if ((p % 12 == 5 || p % 12 == 11) && e % 2 == 1) return false;
  }
  if (rest > 1 && (rest % 12 == 5 || rest % 12 == 11)) return false;
  return true;
}

}  // namespace howestrata
