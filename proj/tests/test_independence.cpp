#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lynperm/independence.hpp"
#include "lynperm/lyndon.hpp"
#include "lynperm/perm.hpp"
#include "lynperm/permuton.hpp"
#include "lynperm/polynomial.hpp"
#include "lynperm/rational.hpp"

using namespace lynperm;

namespace {

Permutation perm(const std::string& s) { return parse_permutation(s); }

PiLSpec spec_k2() {
  return make_pil_spec(2, {make_rat(1, 2)}, {{make_rat(1, 4), make_rat(1, 4)}});
}

PiLSpec spec_k3() {
  std::vector<Rat> s(5, make_rat(1, 8));
  std::vector<std::vector<Rat>> t = {
      {make_rat(1, 4), make_rat(1, 4), make_rat(1, 4)},
      {make_rat(1, 6), make_rat(1, 6), make_rat(1, 6)},
      {make_rat(1, 4), make_rat(1, 8), make_rat(1, 8)},
      {make_rat(1, 3), make_rat(1, 3)},
      {make_rat(1, 5), make_rat(2, 5), make_rat(1, 5)},
  };
  return make_pil_spec(3, s, t);
}

Polynomial term(const Rat& c, const Monomial& m) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

std::map<Variable, Rat> point_of(const PiLSpec& spec) {
  std::map<Variable, Rat> point;
  for (size_t i = 0; i < spec.s.size(); ++i) {
    point[Variable::s(static_cast<int>(i) + 1)] = spec.s[i];
    for (size_t j = 0; j < spec.t[i].size(); ++j) {
      point[Variable::t(static_cast<int>(i) + 1, static_cast<int>(j) + 1)] =
          spec.t[i][j];
    }
  }
  return point;
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return make_rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("lyndon structure for each supported k") {
  const LyndonStructure s2 = lyndon_structure(2);
  CHECK(s2.N == 1);
  CHECK(s2.sizes == std::vector<int>{2});
  CHECK(s2.lyndon_list == std::vector<Permutation>{perm("21"), perm("1")});
  CHECK(s2.base == perm("213"));

  const LyndonStructure s3 = lyndon_structure(3);
  CHECK(s3.N == 5);
  CHECK(s3.sizes == std::vector<int>{3, 3, 3, 2, 3});
  CHECK(s3.lyndon_list ==
        std::vector<Permutation>{perm("321"), perm("312"), perm("231"),
                                 perm("21"), perm("132"), perm("1")});
  CHECK(s3.base == direct_sum(s3.lyndon_list));
  CHECK(s3.base.size() == 15);

  const LyndonStructure s4 = lyndon_structure(4);
  CHECK(s4.N == 22);
  CHECK(s4.base.size() == 83);
  CHECK(s4.lyndon_list.front() == Permutation::descending(4));
  CHECK(s4.lyndon_list.back() == perm("1"));

  CHECK_THROWS_AS(lyndon_structure(1), std::invalid_argument);
  CHECK_THROWS_AS(lyndon_structure(5), std::invalid_argument);
}

TEST_CASE("parameter point validation") {
  const PiLSpec ok = spec_k2();
  CHECK(residual_z(ok) == make_rat(3, 4));

  CHECK_THROWS_AS(make_pil_spec(2, {make_rat(1, 2), make_rat(1, 4)},
                                {{make_rat(1, 4), make_rat(1, 4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_pil_spec(2, {make_rat(1, 2)}, {{make_rat(1, 4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_pil_spec(2, {make_rat(0)}, {{make_rat(1, 4), make_rat(1, 4)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_pil_spec(2, {make_rat(1)}, {{make_rat(1, 4), make_rat(1, 4)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_pil_spec(2, {make_rat(1, 2)}, {{make_rat(1, 2), make_rat(1, 2)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_pil_spec(2, {make_rat(1, 2)}, {{make_rat(1, 4), make_rat(-1, 4)}}),
      std::invalid_argument);
}

TEST_CASE("blow-up built from a parameter point") {
  const BlowupPermuton b = build_PiL(spec_k2());
  CHECK(b.base == perm("213"));
  CHECK(b.scales ==
        std::vector<Rat>{make_rat(1, 8), make_rat(1, 8), make_rat(3, 4)});

  const BlowupPermuton b3 = build_PiL(spec_k3());
  CHECK(b3.base.size() == 15);
  CHECK(b3.scales.size() == 15);
  Rat total = make_rat(0);
  for (const Rat& v : b3.scales) total += v;
  CHECK(total == 1);
}

TEST_CASE("symbolic densities in the s and t variables") {
  const Polynomial d21 = density_in_s_t(perm("21"), 2);
  const Polynomial expected = term(
      make_rat(2),
      {{Variable::s(1), 2}, {Variable::t(1, 1), 1}, {Variable::t(1, 2), 1}});
  CHECK(d21 == expected);
  CHECK(d21.str() == "2*s[1]^2*t[1,1]*t[1,2]");

  CHECK(density_in_s_t(perm("1"), 2) == Polynomial::constant(make_rat(1)));

  // The only descending triples of parts sit inside the first block.
  const Polynomial d321 = density_in_s_t(perm("321"), 3);
  CHECK(d321 == term(make_rat(6), {{Variable::s(1), 3},
                                   {Variable::t(1, 1), 1},
                                   {Variable::t(1, 2), 1},
                                   {Variable::t(1, 3), 1}}));

  // Every block contributes its internal inversions to the density of 21.
  Polynomial d21_k3;
  auto inv = [&d21_k3](int i, int j1, int j2) {
    d21_k3 = d21_k3 + term(make_rat(2), {{Variable::s(i), 2},
                                         {Variable::t(i, j1), 1},
                                         {Variable::t(i, j2), 1}});
  };
  inv(1, 1, 2);
  inv(1, 1, 3);
  inv(1, 2, 3);
  inv(2, 1, 2);
  inv(2, 1, 3);
  inv(3, 1, 3);
  inv(3, 2, 3);
  inv(4, 1, 2);
  inv(5, 2, 3);
  CHECK(density_in_s_t(perm("21"), 3) == d21_k3);

  CHECK_THROWS_AS(density_in_s_t(perm("12"), 2), std::invalid_argument);
  CHECK_THROWS_AS(density_in_s_t(perm("321"), 2), std::invalid_argument);
  CHECK_THROWS_AS(density_in_s_t(perm("21"), 4), std::invalid_argument);
}

TEST_CASE("direct density evaluation matches the symbolic form") {
  const PiLSpec s2 = spec_k2();
  CHECK(pil_density(perm("21"), s2) == make_rat(1, 32));
  CHECK(pil_density(perm("1"), s2) == 1);
  CHECK(pil_density(perm("21"), s2) == exact_density(perm("21"), build_PiL(s2)));

  const PiLSpec s3 = spec_k3();
  const BlowupPermuton b3 = build_PiL(s3);
  const auto point = point_of(s3);
  for (const char* w : {"21", "321", "312", "231", "132"}) {
    const Permutation pi = perm(w);
    const Rat direct = pil_density(pi, s3);
    CHECK(direct == exact_density(pi, b3));
    CHECK(direct == density_in_s_t(pi, 3).evaluate(point));
  }
  // Patterns outside the Lyndon list still evaluate directly.
  CHECK(pil_density(perm("12"), s3) == exact_density(perm("12"), b3));
  CHECK(pil_density(perm("2143"), s3) == exact_density(perm("2143"), b3));

  CHECK_THROWS_AS(pil_density(perm(""), s2), std::invalid_argument);
  CHECK_THROWS_AS(pil_density(perm("7163245"), s2), std::invalid_argument);
}

TEST_CASE("jacobian at a fixed point") {
  const auto J2 = jacobian_matrix(spec_k2());
  REQUIRE(J2.size() == 1);
  REQUIRE(J2[0].size() == 1);
  CHECK(J2[0][0] == make_rat(1, 8));

  const PiLSpec s3 = spec_k3();
  const auto J3 = jacobian_matrix(s3);
  REQUIRE(J3.size() == 5);
  for (const auto& row : J3) REQUIRE(row.size() == 5);
  // Row of 321: its density is 6 s1^3 t11 t12 t13, so only column 1 is hit.
  CHECK(J3[0][0] == make_rat(9, 2048));
  for (int j = 1; j < 5; ++j) CHECK(J3[0][static_cast<size_t>(j)] == 0);
  // Spot value against the symbolic derivative.
  const auto point = point_of(s3);
  const Polynomial d21 = density_in_s_t(perm("21"), 3);
  for (int j = 0; j < 5; ++j) {
    CHECK(J3[3][static_cast<size_t>(j)] ==
          d21.derivative(Variable::s(j + 1)).evaluate(point));
  }
}

TEST_CASE("determinants") {
  CHECK(determinant_integer({}) == 1);
  CHECK(determinant_integer({{Int(7)}}) == 7);
  CHECK(determinant_integer({{Int(2), Int(3)}, {Int(4), Int(5)}}) == -2);
  CHECK(determinant_integer({{Int(1), Int(0), Int(0)},
                             {Int(0), Int(1), Int(0)},
                             {Int(0), Int(0), Int(1)}}) == 1);
  CHECK_THROWS_AS(determinant_integer({{Int(1), Int(2)}}),
                  std::invalid_argument);

  CHECK(jacobian_determinant({}) == 1);
  CHECK_THROWS_AS(jacobian_determinant({{make_rat(1), make_rat(2)}}),
                  std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::vector<Rat>> m(static_cast<size_t>(n),
                                      std::vector<Rat>(static_cast<size_t>(n)));
      for (auto& row : m) {
        for (auto& v : row) v = random_rat(rng);
      }
      CHECK(jacobian_determinant(m) == determinant_cofactor(m));
    }
  }

  std::vector<std::vector<Rat>> singular = {
      {make_rat(1, 2), make_rat(1, 3), make_rat(2)},
      {make_rat(3), make_rat(-1), make_rat(1, 7)},
      {make_rat(1, 2), make_rat(1, 3), make_rat(2)}};
  CHECK(jacobian_determinant(singular) == 0);
}

TEST_CASE("witness search") {
  const JacobianCertificate c2 = find_witness(2, 5, 0);
  CHECK(c2.k == 2);
  CHECK(c2.witness_seed == 0);
  CHECK(c2.lyndon_list == std::vector<Permutation>{perm("21"), perm("1")});
  CHECK(c2.determinant != 0);
  CHECK(c2.determinant == jacobian_determinant(c2.matrix));
  for (const Rat& v : c2.point.s) CHECK(v.get_den() <= 64);
  for (const auto& row : c2.point.t) {
    for (const Rat& v : row) CHECK(v.get_den() <= 64);
  }

  // Same seed, same certificate.
  const JacobianCertificate again = find_witness(2, 5, 0);
  CHECK(again.determinant == c2.determinant);
  CHECK(again.point.s == c2.point.s);
  CHECK(again.point.t == c2.point.t);

  const double f2 = certificate_float_determinant(c2);
  const double exact2 = rat_to_double(c2.determinant);
  CHECK(std::fabs(f2 - exact2) <= 1e-6 * std::fabs(exact2));

  const JacobianCertificate c3 = find_witness(3, 8, 1);
  CHECK(c3.matrix.size() == 5);
  CHECK(c3.determinant != 0);
  const double f3 = certificate_float_determinant(c3);
  const double exact3 = rat_to_double(c3.determinant);
  CHECK(std::fabs(f3 - exact3) <= 1e-6 * std::fabs(exact3));

  CHECK_THROWS_AS(find_witness(2, 0, 0), std::invalid_argument);
}

TEST_CASE("determinant monomial coefficients") {
  CHECK(det_monomial_coefficient(2) == 4);

  CHECK(measured_block_coefficient(2, 0) == 2);
  const std::vector<long> expected3 = {6, 6, 6, 2, 6};
  Rat product = make_rat(1);
  const LyndonStructure st = lyndon_structure(3);
  for (int i = 0; i < 5; ++i) {
    const Rat c = measured_block_coefficient(3, i);
    CHECK(c == expected3[static_cast<size_t>(i)]);
    product *= Rat(st.sizes[static_cast<size_t>(i)]) * c;
  }
  CHECK(product == 419904);
  CHECK(det_monomial_coefficient(3) == product);

  CHECK_THROWS_AS(measured_block_coefficient(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(det_monomial_coefficient(4), std::invalid_argument);
}

TEST_CASE("interval lemma brute force") {
  CHECK(verify_lemma_lyndon({perm("321"), perm("21")}));
  CHECK(verify_lemma_lyndon({perm("21")}));
  CHECK(verify_lemma_lyndon({perm("21"), perm("132")}));
  CHECK(verify_lemma_lyndon({perm("321"), perm("21"), perm("132")}));

  CHECK_THROWS_AS(verify_lemma_lyndon({}), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma_lyndon({perm("12")}), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma_lyndon({perm("21"), perm("321")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma_lyndon({perm("21"), perm("21")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma_lyndon({perm("321"), perm("312"), perm("231")}),
                  std::invalid_argument);
}
