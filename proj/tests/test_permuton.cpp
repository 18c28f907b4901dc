#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lynperm/permuton.hpp"
#include "lynperm/verify.hpp"

using namespace lynperm;

namespace {

Permutation perm(const std::string& s) { return parse_permutation(s); }

BlowupPermuton uniform_blowup(const std::string& base) {
  const Permutation b = perm(base);
  return make_blowup(b, std::vector<Rat>(static_cast<size_t>(b.size()),
                                         make_rat(1, b.size())));
}

}  // namespace

TEST_CASE("blow-up validation") {
  CHECK_THROWS_AS(make_blowup(perm("21"), {make_rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_blowup(perm("21"), {make_rat(1, 2), make_rat(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_blowup(perm("21"), {make_rat(3, 2), make_rat(-1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_blowup(Permutation(), {}), std::invalid_argument);
  const BlowupPermuton P = make_blowup(perm("21"), {make_rat(1), make_rat(0)});
  CHECK(P.scales[1] == 0);
}

TEST_CASE("offsets accumulate scales") {
  const BlowupPermuton P =
      make_blowup(perm("231"), {make_rat(1, 2), make_rat(1, 3), make_rat(1, 6)});
  const auto xs = x_offsets(P);
  REQUIRE(xs.size() == 3);
  CHECK(xs[0] == 0);
  CHECK(xs[1] == make_rat(1, 2));
  CHECK(xs[2] == make_rat(5, 6));
  // base 231: part 3 has the smallest value, then part 1, then part 2
  const auto ys = y_offsets(P);
  CHECK(ys[2] == 0);
  CHECK(ys[0] == make_rat(1, 6));
  CHECK(ys[1] == make_rat(1, 6) + make_rat(1, 2));
}

TEST_CASE("blow-up patterns from count vectors") {
  CHECK(blowup_pattern(perm("21"), {1, 2}) == perm("312"));
  CHECK(blowup_pattern(perm("21"), {2, 1}) == perm("231"));
  CHECK(blowup_pattern(perm("1"), {3}) == perm("123"));
  CHECK(blowup_pattern(perm("132"), {1, 0, 2}) == perm("123"));
  CHECK(blowup_pattern(perm("132"), {0, 2, 1}) == perm("231"));
  CHECK_THROWS_AS(blowup_pattern(perm("21"), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(blowup_pattern(perm("21"), {1}), std::invalid_argument);
  CHECK_THROWS_AS(blowup_pattern(perm("21"), {1, -1}), std::invalid_argument);
}

TEST_CASE("exact densities on fixed blow-ups") {
  const BlowupPermuton half21 = uniform_blowup("21");
  CHECK(exact_density(perm("12"), half21) == make_rat(1, 2));
  CHECK(exact_density(perm("21"), half21) == make_rat(1, 2));
  CHECK(exact_density(perm("321"), half21) == 0);
  CHECK(exact_density(perm("213"), half21) == 0);
  CHECK(exact_density(perm("1"), half21) == 1);

  const BlowupPermuton asym =
      make_blowup(perm("12"), {make_rat(1, 3), make_rat(2, 3)});
  CHECK(exact_density(perm("12"), asym) == 1);
  CHECK(exact_density(perm("21"), asym) == 0);

  CHECK(exact_density(perm("231"), uniform_blowup("231")) == make_rat(4, 9));

  CHECK_THROWS_AS(exact_density(perm("1234567"), half21),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_density(Permutation(), half21), std::invalid_argument);
}

TEST_CASE("densities of one size sum to 1 on random blow-ups") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const BlowupPermuton P = random_blowup(rng, 5, 64);
    for (int m = 1; m <= 4; ++m) {
      Rat total = make_rat(0);
      for (const Permutation& sigma : enumerate_permutations(m)) {
        total += exact_density(sigma, P);
      }
      total.canonicalize();
      CHECK(total == 1);
    }
  }
}

TEST_CASE("symbolic density expands the composition sum") {
  const Polynomial d12 = symbolic_density(perm("12"), perm("21"), {"z1", "z2"});
  Polynomial want;
  want.add_term({{Variable::named("z1"), 2}}, make_rat(1));
  want.add_term({{Variable::named("z2"), 2}}, make_rat(1));
  CHECK(d12 == want);

  const Polynomial d21 = symbolic_density(perm("21"), perm("21"), {"z1", "z2"});
  Polynomial want21;
  want21.add_term({{Variable::named("z1"), 1}, {Variable::named("z2"), 1}},
                  make_rat(2));
  CHECK(d21 == want21);

  CHECK_THROWS_AS(symbolic_density(perm("12"), perm("21"), {"z1"}),
                  std::invalid_argument);
}

TEST_CASE("symbolic density evaluates to the exact density") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const BlowupPermuton P = random_blowup(rng, 4, 64);
    std::vector<std::string> names;
    std::map<Variable, Rat> point;
    for (int i = 1; i <= P.base.size(); ++i) {
      names.push_back("z" + std::to_string(i));
      point[Variable::named(names.back())] = P.scales[static_cast<size_t>(i - 1)];
    }
    for (int m = 1; m <= 3; ++m) {
      for (const Permutation& sigma : enumerate_permutations(m)) {
        const Polynomial poly = symbolic_density(sigma, P.base, names);
        CHECK(poly.evaluate(point) == exact_density(sigma, P));
      }
    }
  }
}

TEST_CASE("trial seeds form distinct deterministic streams") {
  CHECK(derive_trial_seed(7, 0) == derive_trial_seed(7, 0));
  std::map<std::uint64_t, int> seen;
  for (std::uint64_t i = 0; i < 200; ++i) ++seen[derive_trial_seed(0, i)];
  CHECK(seen.size() == 200);
  CHECK(derive_trial_seed(1, 5) != derive_trial_seed(2, 5));
}

TEST_CASE("sampling is deterministic and respects the support") {
  const BlowupPermuton diag = make_blowup(perm("1"), {make_rat(1)});
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    CHECK(sample_permutation(diag, 10, seed) == Permutation::identity(10));
  }
  const BlowupPermuton skewed =
      make_blowup(perm("21"), {make_rat(0), make_rat(1)});
  CHECK(sample_permutation(skewed, 6, 5) == Permutation::identity(6));

  const BlowupPermuton half21 = uniform_blowup("21");
  const Permutation a = sample_permutation(half21, 8, 42);
  const Permutation b = sample_permutation(half21, 8, 42);
  CHECK(a == b);
  CHECK(a.size() == 8);
  CHECK_THROWS_AS(sample_permutation(half21, 0, 1), std::invalid_argument);

  // a sample from the blow-up of 21 never contains 213: the two parts
  // only produce patterns avoiding it
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Permutation s = sample_permutation(half21, 3, seed);
    CHECK(s != perm("213"));
    CHECK(s != perm("132"));
  }
}

TEST_CASE("estimates carry their uncertainty") {
  const BlowupPermuton half21 = uniform_blowup("21");
  const DensityEstimate est = estimate_density(perm("21"), half21, 20000, 3);
  CHECK(est.trials == 20000);
  CHECK(est.mean >= 0.0);
  CHECK(est.mean <= 1.0);
  CHECK(est.standard_error ==
        doctest::Approx(std::sqrt(est.mean * (1.0 - est.mean) / 20000.0)));
  CHECK(std::fabs(est.mean - 0.5) <= 5 * est.standard_error);

  const DensityEstimate sure =
      estimate_density(perm("1"), half21, 100, 9);
  CHECK(sure.mean == 1.0);
  CHECK(sure.standard_error == 0.0);

  const DensityEstimate again = estimate_density(perm("21"), half21, 20000, 3);
  CHECK(again.mean == est.mean);
  CHECK_THROWS_AS(estimate_density(perm("21"), half21, 0, 1),
                  std::invalid_argument);
}
