#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lynperm/flag.hpp"
#include "lynperm/lyndon.hpp"

using namespace lynperm;

namespace {

Permutation perm(const std::string& s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("the 12 x 1 product has the five known terms") {
  const PermSum got = flag_product({perm("12"), perm("1")});
  REQUIRE(got.terms.size() == 5);
  CHECK(got.coefficient(perm("123")) == 1);
  CHECK(got.coefficient(perm("132")) == make_rat(2, 3));
  CHECK(got.coefficient(perm("231")) == make_rat(1, 3));
  CHECK(got.coefficient(perm("213")) == make_rat(2, 3));
  CHECK(got.coefficient(perm("312")) == make_rat(1, 3));
  CHECK(got.coefficient(perm("321")) == 0);
}

TEST_CASE("iterated binary product equals the ordered-partition definition") {
  std::vector<Permutation> pool;
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& p : enumerate_permutations(n)) pool.push_back(p);
  }
  for (const Permutation& a : pool) {
    for (const Permutation& b : pool) {
      if (a.size() + b.size() > 5) continue;
      const PermSum fast = flag_product({a, b});
      const PermSum direct = flag_product_direct({a, b});
      CHECK(fast == direct);
      Rat mass = fast.total_mass();
      mass.canonicalize();
      CHECK(mass == multinomial({a.size(), b.size()}));
    }
  }
  // one triple and one size-6 pair as spot checks
  CHECK(flag_product({perm("21"), perm("1"), perm("1")}) ==
        flag_product_direct({perm("21"), perm("1"), perm("1")}));
  CHECK(flag_product({perm("123"), perm("321")}) ==
        flag_product_direct({perm("123"), perm("321")}));
}

TEST_CASE("flag product is commutative and respects the size bound") {
  const std::vector<Permutation> parts{perm("21"), perm("132")};
  const std::vector<Permutation> swapped{perm("132"), perm("21")};
  CHECK(flag_product(parts) == flag_product(swapped));
  CHECK_THROWS_AS(flag_product({perm("12345"), perm("1234")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(flag_product({}), std::invalid_argument);
  const PermSum single = flag_product({perm("312")});
  CHECK(single.terms.size() == 1);
  CHECK(single.coefficient(perm("312")) == 1);
}

TEST_CASE("no constituent violates the flag lemma bound") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& p : enumerate_permutations(n)) {
      CHECK(constituents_violating_flag_lemma(p).empty());
    }
  }
}

TEST_CASE("density of a sum is linear and factorizes products") {
  const BlowupPermuton P =
      make_blowup(perm("21"), {make_rat(1, 2), make_rat(1, 2)});
  const PermSum eq1 = flag_product({perm("12"), perm("1")});
  Rat lhs = density_of_sum(eq1, P);
  Rat rhs = exact_density(perm("12"), P) * exact_density(perm("1"), P);
  rhs.canonicalize();
  CHECK(lhs == rhs);
  CHECK(lhs == make_rat(1, 2));

  // mixed-size combinations are allowed
  PermSum mixed;
  mixed.add(perm("12"), make_rat(1, 2));
  mixed.add(perm("123"), make_rat(1, 3));
  CHECK(density_of_sum(mixed, P) == make_rat(1, 3));

  PermSum empty;
  CHECK(density_of_sum(empty, P) == 0);
}

TEST_CASE("perm sums render with rational coefficients") {
  PermSum s;
  s.add(perm("123"), make_rat(1));
  s.add(perm("132"), make_rat(2, 3));
  CHECK(s.str() == "123 + 2/3*132");
  s.add(perm("132"), make_rat(-2, 3));
  CHECK(s.terms.size() == 1);
}
