#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "figure1_data.hpp"
#include "howestrata/diophantine.hpp"

using namespace howestrata;

namespace {

HoweLabel L(std::initializer_list<Integer> k, std::initializer_list<Integer> m) { return canonicalize(k, m); }

using Vec = std::vector<Integer>;

// Row echelon form over Z by repeated Euclidean elimination.
std::vector<Vec> echelon(std::vector<Vec> rows, std::size_t width) {
  std::vector<Vec> out;
  for (std::size_t col = 0; col < width; ++col) {
    while (true) {
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0) live.push_back(i);
      if (live.size() <= 1) break;
      auto pivot = *std::min_element(live.begin(), live.end(), [&](auto a, auto b) {
        return std::abs(rows[a][col]) < std::abs(rows[b][col]);
      });
      for (auto i : live) {
        if (i == pivot) continue;
        const Integer q = rows[i][col] / rows[pivot][col];
        for (std::size_t j = 0; j < width; ++j) rows[i][j] -= q * rows[pivot][j];
      }
    }
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Vec& r) { return r[col] != 0; });
    if (it != rows.end()) {
      out.push_back(*it);
      rows.erase(it);
    }
  }
  return out;
}

bool in_lattice(const std::vector<Vec>& basis, Vec a) {
  for (const auto& row : basis) {
    auto col = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Integer x) { return x != 0; }) - row.begin());
    if (a[col] % row[col] != 0) return false;
    const Integer q = a[col] / row[col];
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * row[j];
  }
  return std::all_of(a.begin(), a.end(), [](Integer x) { return x == 0; });
}

// Every coefficient L_{mi,nj} of the bilinear equation, from its general
// closed form, over all index pairs m < i and n < j.
Integer gcd_of_full_l_matrix(const HoweLabel& label) {
  const auto k = label.k();
  const std::size_t r = k.size();
  Integer g = 0;
  for (auto v : k) g = std::gcd(g, v);
  Vec kt(r);
  for (std::size_t i = 0; i < r; ++i) kt[i] = k[i] / g;
  auto delta = [](std::size_t a, std::size_t b) -> Integer { return a == b ? 1 : 0; };
  Integer acc = 0;
  for (std::size_t m = 0; m < r; ++m)
    for (std::size_t i = m + 1; i < r; ++i)
      for (std::size_t n = 0; n < r; ++n)
        for (std::size_t j = n + 1; j < r; ++j) {
          const Integer value =
              g * kt[m] * kt[i] * (kt[n] * (delta(m, j) - delta(i, j)) + kt[j] * (delta(n, i) - delta(m, n)));
          acc = std::gcd(acc, std::abs(value));
        }
  return acc;
}

// gcd of B(x, y) = sum k_i (k_j - delta_ij) x_i y_j over pairs of lattice
// generators: the coefficients obtained by substituting the parametrization.
Integer gcd_of_bilinear_on_generators(const HoweLabel& label) {
  const auto k = label.k();
  if (k.size() < 2) return 0;
  const auto basis = skolem_basis(k);
  Integer acc = 0;
  for (const auto& x : basis.generators)
    for (const auto& y : basis.generators) {
      Integer b = 0;
      for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j)
          b += k[i] * (k[j] - (i == j ? 1 : 0)) * x.vector[i] * y.vector[j];
      acc = std::gcd(acc, std::abs(b));
    }
  return acc;
}

// Values of Q on the constraint lattice inside a box: exact values when
// g = 0, residues mod g otherwise.
std::set<Integer> reachable_values(const HoweLabel& label, Integer box) {
  const auto k = label.k();
  const Integer g = d_s4(label);
  std::set<Integer> out;
  Vec a(k.size(), -box);
  while (true) {
    Integer lin = 0;
    for (std::size_t i = 0; i < k.size(); ++i) lin += k[i] * a[i];
    if (lin == 0) {
      Integer twice = 0;
      for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j) twice += k[i] * (k[j] - (i == j ? 1 : 0)) * a[i] * a[j];
      const Integer q = twice / 2;
      out.insert(g == 0 ? q : ((q % g) + g) % g);
    }
    std::size_t p = 0;
    for (; p < a.size(); ++p) {
      if (++a[p] <= box) break;
      a[p] = -box;
    }
    if (p == a.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("gcd_seq and reduced_k", "[diophantine]") {
  CHECK(gcd_seq(Vec{4, 4, 6}) == 2);
  CHECK(gcd_seq(Vec{}) == 0);
  CHECK(gcd_seq(Vec{7}) == 7);
  CHECK(reduced_k(L({4, 4, 6}, {1, 1, 2})) == Vec{6});
  CHECK(reduced_k(L({1, 1}, {1, 1})).empty());
  CHECK(reduced_k(L({1}, {5})) == Vec{1});
}

TEST_CASE("d_s4", "[diophantine]") {
  CHECK(d_s4(L({2}, {2})) == 2);
  CHECK(d_s4(L({1, 1}, {1, 1})) == 0);
  CHECK(d_s4(L({1, 1}, {1, 3})) == 1);
  CHECK(d_s4(L({4, 4, 6}, {1, 1, 2})) == 6);
  for (Integer n = 1; n <= 8; ++n) CHECK(d_s4(HoweLabel::whole(n)) == 0);
}

TEST_CASE("L coefficients", "[diophantine]") {
  CHECK(l_coefficients(L({4, 4, 6}, {1, 1, 2})) == Vec{24, 32, 60, 60});
  CHECK(gcd_l(L({4, 4, 6}, {1, 1, 2})) == 4);
  CHECK(l_coefficients(L({2, 1}, {1, 1})) == Vec{6});
  for (Integer n = 1; n <= 6; ++n) CHECK(l_coefficients(HoweLabel::whole(n)).empty());
}

TEST_CASE("d_s2xs2", "[diophantine]") {
  CHECK(d_s2xs2(L({4, 4, 6}, {1, 1, 2})) == 2);
  CHECK(d_s2xs2(L({1, 3}, {1, 1})) == 12);
  CHECK(d_s2xs2(L({2, 3}, {1, 1})) == 30);
}

TEST_CASE("Figure 1 annotations", "[diophantine][golden]") {
  for (const auto& row : figure1::rows()) {
    const auto label = figure1::label(row);
    INFO(to_string(label));
    CHECK(d_s4(label) == row.d_s4);
    CHECK(d_s2xs2(label) == row.d_s2xs2);
  }
}

TEST_CASE("gcd(L) matches the general coefficient formula and the bilinear form", "[diophantine][oracle]") {
  for (Integer n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_labels(n)) {
      INFO(to_string(l));
      REQUIRE(gcd_l(l) == gcd_of_full_l_matrix(l));
      REQUIRE(gcd_l(l) == gcd_of_bilinear_on_generators(l));
    }
  const auto big = L({4, 4, 6}, {1, 1, 2});
  CHECK(gcd_of_full_l_matrix(big) == 4);
  CHECK(gcd_of_bilinear_on_generators(big) == 4);
}

TEST_CASE("d_s2xs2 divides d_s4", "[diophantine][property]") {
  for (Integer n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_labels(n)) REQUIRE(divides(d_s2xs2(l), d_s4(l)));
}

TEST_CASE("Skolem generators", "[diophantine][skolem]") {
  const auto two = skolem_basis(Vec{2, 1});
  REQUIRE(two.generators.size() == 1);
  CHECK(two.generators[0].vector == Vec{1, -2});

  const auto three = skolem_basis(Vec{1, 1, 1});
  REQUIRE(three.generators.size() == 3);
  CHECK(three.generators[0].vector == Vec{1, -1, 0});
  CHECK(three.generators[1].vector == Vec{1, 0, -1});
  CHECK(three.generators[2].vector == Vec{0, 1, -1});

  const auto scaled = skolem_basis(Vec{4, 4, 6});
  CHECK(scaled.reduced == Vec{2, 2, 3});
  CHECK(scaled.generators.size() == 3);

  CHECK_THROWS_AS(skolem_basis(Vec{3}), std::invalid_argument);
  CHECK_THROWS_AS(skolem_basis(Vec{1, 0}), std::invalid_argument);

  for (Integer n = 2; n <= 8; ++n)
    for (const auto& l : enumerate_labels(n)) {
      if (l.size() < 2) continue;
      const auto k = l.k();
      const auto basis = skolem_basis(k);
      REQUIRE(basis.generators.size() == k.size() * (k.size() - 1) / 2);
      for (const auto& g : basis.generators) {
        Integer s = 0;
        for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * g.vector[i];
        REQUIRE(s == 0);
      }
    }
}

TEST_CASE("Skolem generators span every bounded solution", "[diophantine][skolem][property]") {
  std::vector<Vec> ks;
  for (Integer a = 1; a <= 6; ++a)
    for (Integer b = 1; b <= 6; ++b) {
      ks.push_back({a, b});
      for (Integer c = 1; c <= 6; ++c) ks.push_back({a, b, c});
    }
  for (const auto& k : ks) {
    std::vector<Vec> gens;
    for (const auto& g : skolem_basis(k).generators) gens.push_back(g.vector);
    const auto basis = echelon(gens, k.size());
    Vec a(k.size(), -6);
    while (true) {
      Integer s = 0;
      for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * a[i];
      if (s == 0) {
        INFO("k size " << k.size() << " a0 " << a[0]);
        REQUIRE(in_lattice(basis, a));
      }
      std::size_t p = 0;
      for (; p < a.size(); ++p) {
        if (++a[p] <= 6) break;
        a[p] = -6;
      }
      if (p == a.size()) break;
    }
  }
}

TEST_CASE("SkolemBasis::combine satisfies the constraint", "[diophantine][skolem]") {
  const auto basis = skolem_basis(Vec{4, 4, 6});
  const auto a = basis.combine(Vec{1, -2, 3});
  CHECK(4 * a[0] + 4 * a[1] + 6 * a[2] == 0);
  CHECK_THROWS_AS(basis.combine(Vec{1}), std::invalid_argument);
}

TEST_CASE("quad_value", "[diophantine][quadratic]") {
  const auto torus3 = L({1, 1, 1}, {1, 1, 1});
  CHECK(quad_value(torus3, Vec{1, -1, 0}) == -1);
  // Eliminating a3 = -a1 - a2 gives -(a1^2 + a1 a2 + a2^2).
  for (Integer a1 = -5; a1 <= 5; ++a1)
    for (Integer a2 = -5; a2 <= 5; ++a2)
      REQUIRE(quad_value(torus3, Vec{a1, a2, -a1 - a2}) == -(a1 * a1 + a1 * a2 + a2 * a2));
  CHECK(quad_value(L({2, 1}, {1, 1}), Vec{1, -2}) == -3);
  for (Integer n = 1; n <= 5; ++n)
    for (const auto& l : enumerate_labels(n)) CHECK(quad_value(l, Vec(l.size(), 0)) == 0);
  CHECK_THROWS_AS(quad_value(torus3, Vec{1, 2}), std::invalid_argument);
}

TEST_CASE("Q is integral everywhere", "[diophantine][quadratic][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Integer> coord(-50, 50);
  for (Integer n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_labels(n))
      for (int trial = 0; trial < 50; ++trial) {
        Vec a(l.size());
        for (auto& x : a) x = coord(rng);
        REQUIRE(twice_quad_value(l, a) % 2 == 0);
      }
}

TEST_CASE("Q equals -1/2 sum k_i a_i^2 on the constraint surface", "[diophantine][quadratic][property]") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Integer> coord(-40, 40);
  for (Integer n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_labels(n)) {
      if (l.size() > 5) continue;
      const auto k = l.k();
      const std::size_t r = k.size();
      const QuadraticInstance inst(l);
      for (int trial = 0; trial < 200; ++trial) {
        // a_i = k_r x_i for i < r and a_r = -sum_{i<r} k_i x_i.
        Vec a(r, 0);
        Integer lin = 0;
        for (std::size_t i = 0; i + 1 < r; ++i) {
          const Integer x = coord(rng);
          a[i] = k[r - 1] * x;
          lin += k[i] * x;
        }
        a[r - 1] = -lin;
        REQUIRE(inst.satisfies_constraint(a));
        Integer sq = 0;
        for (std::size_t i = 0; i < r; ++i) sq += k[i] * a[i] * a[i];
        REQUIRE(sq % 2 == 0);
        REQUIRE(inst.value(a) == -sq / 2);
      }
    }
}

TEST_CASE("cp2_solvable closed-form examples", "[diophantine][cp2]") {
  const auto torus2 = L({1, 1}, {1, 1});
  CHECK(cp2_solvable(torus2, -4));
  CHECK_FALSE(cp2_solvable(torus2, -2));
  const auto t21 = L({2, 1}, {1, 1});
  CHECK(cp2_solvable(t21, -3));
  CHECK_FALSE(cp2_solvable(t21, -6));
  const auto t11_12 = L({1, 1}, {1, 2});
  for (Integer c = -10; c <= 10; ++c) CHECK(cp2_solvable(t11_12, c));
  const auto torus3 = L({1, 1, 1}, {1, 1, 1});
  for (Integer v : {1, 3, 4, 7, 9, 12}) CHECK(cp2_solvable(torus3, -v));
  for (Integer v : {2, 5, 6, 8, 10, 11}) CHECK_FALSE(cp2_solvable(torus3, -v));
  CHECK_FALSE(cp2_solvable(torus3, 3));
  CHECK(cp2_solvable(torus3, 0));
}

TEST_CASE("cp2_solvable agrees with a brute-force box search", "[diophantine][cp2][oracle]") {
  for (Integer n = 2; n <= 6; ++n)
    for (const auto& l : enumerate_labels(n)) {
      if (l.size() > 4) continue;
      const Integer g = d_s4(l);
      const auto values = reachable_values(l, 12);
      for (Integer c = -30; c <= 30; ++c) {
        const bool expected = g == 0 ? values.count(c) > 0 : values.count(((c % g) + g) % g) > 0;
        INFO(to_string(l) << " c = " << c);
        REQUIRE(cp2_solvable(l, c) == expected);
      }
    }
}

TEST_CASE("cp2_solvable with g > 0 reduces to residues", "[diophantine][cp2]") {
  // (2|2): a = 0 is forced, so only even c are reachable.
  const auto l = L({2}, {2});
  CHECK(cp2_solvable(l, 4));
  CHECK(cp2_solvable(l, -6));
  CHECK_FALSE(cp2_solvable(l, 3));
  // Positive c with g > 0 goes through the modular test.
  CHECK(cp2_solvable(L({1}, {5}), 17));
}

TEST_CASE("cp2_solvable enforces its budget", "[diophantine][cp2][budget]") {
  const auto l = L({7, 7, 7, 7}, {2, 2, 2, 2});  // g = 7, six parameters
  CHECK(d_s4(l) == 7);
  try {
    cp2_solvable(l, 1, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.label == l);
  }
  CHECK_NOTHROW(cp2_solvable(l, 1, 200'000));

  const auto definite = L({4, 4}, {1, 1});
  CHECK_THROWS_AS(cp2_solvable(definite, -100000, 10), BudgetExceeded);
  CHECK(cp2_solvable(definite, -40000, 1000));  // a = (100, -100)
}

TEST_CASE("jones_solvable", "[diophantine][jones]") {
  CHECK(jones_solvable(-12));
  CHECK_FALSE(jones_solvable(-11));
  CHECK(jones_solvable(0));
  CHECK_FALSE(jones_solvable(1));
  for (Integer v : {1, 3, 4, 7, 9, 12}) CHECK(jones_solvable(-v));
  for (Integer v : {2, 5, 6, 8, 10, 11}) CHECK_FALSE(jones_solvable(-v));
}

TEST_CASE("jones_solvable matches direct representation by a^2 + ab + b^2", "[diophantine][jones][oracle]") {
  constexpr Integer limit = 3000;
  std::vector<bool> represented(limit + 1, false);
  for (Integer a = -70; a <= 70; ++a)
    for (Integer b = -70; b <= 70; ++b) {
      const Integer v = a * a + a * b + b * b;
      if (v <= limit) represented[v] = true;
    }
  for (Integer v = 0; v <= limit; ++v) {
    INFO("v = " << v);
    REQUIRE(jones_solvable(-v) == represented[v]);
  }
}

TEST_CASE("oracle and closed form agree on the maximal torus of SU(3)", "[diophantine][cp2][jones]") {
  const auto torus3 = L({1, 1, 1}, {1, 1, 1});
  for (Integer v = 0; v <= 800; ++v) REQUIRE(cp2_solvable(torus3, -v) == jones_solvable(-v));
}
