#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lynperm/lyndon.hpp"

using namespace lynperm;

namespace {

Permutation perm(const std::string& s) { return parse_permutation(s); }

// All words of length 1..max_len over the given letters.
std::vector<BlockWord> words_over(const std::vector<Permutation>& letters,
                                  int max_len) {
  std::vector<BlockWord> out;
  std::vector<Permutation> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(BlockWord(cur));
    if (static_cast<int>(cur.size()) == max_len) return;
    for (const Permutation& a : letters) {
      cur.push_back(a);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Textbook recursive binary shuffle, as an oracle for the production code.
WordSum shuffle_oracle(const BlockWord& u, const BlockWord& v) {
  WordSum out;
  if (u.letters.empty()) {
    out.add(v, 1);
    return out;
  }
  if (v.letters.empty()) {
    out.add(u, 1);
    return out;
  }
  const auto rest = [](const BlockWord& w) {
    BlockWord r;
    r.letters.assign(w.letters.begin() + 1, w.letters.end());
    return r;
  };
  for (const auto& [w, c] : shuffle_oracle(rest(u), v).terms) {
    BlockWord prefixed;
    prefixed.letters.push_back(u.letters.front());
    prefixed.letters.insert(prefixed.letters.end(), w.letters.begin(),
                            w.letters.end());
    out.add(prefixed, c);
  }
  for (const auto& [w, c] : shuffle_oracle(u, rest(v)).terms) {
    BlockWord prefixed;
    prefixed.letters.push_back(v.letters.front());
    prefixed.letters.insert(prefixed.letters.end(), w.letters.begin(),
                            w.letters.end());
    out.add(prefixed, c);
  }
  return out;
}

}  // namespace

TEST_CASE("alphabet order starts 1 < 21 < 231 < 312 < 321") {
  const std::vector<std::string> first{"1", "21", "231", "312", "321"};
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(alphabet_compare(perm(first[i]), perm(first[i])) == 0);
    for (size_t j = i + 1; j < first.size(); ++j) {
      CHECK(alphabet_compare(perm(first[i]), perm(first[j])) < 0);
      CHECK(alphabet_compare(perm(first[j]), perm(first[i])) > 0);
    }
  }
  CHECK_THROWS_AS(alphabet_compare(perm("12"), perm("1")),
                  std::invalid_argument);
}

TEST_CASE("block words validate and render") {
  CHECK(parse_block_word("21|1").str() == "21|1");
  CHECK(parse_block_word("312").length() == 1);
  CHECK(parse_block_word("21|231").weight() == 5);
  CHECK_THROWS_AS(parse_block_word("12|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block_word(""), std::invalid_argument);
  CHECK_THROWS_AS(BlockWord({perm("12")}), std::invalid_argument);
  CHECK(block_word_of(perm("132")).str() == "1|21");
  CHECK(block_word_of(perm("2143")).str() == "21|21");
  CHECK(block_word_of(perm("312")).str() == "312");
}

TEST_CASE("word order is lexicographic with prefix-smaller") {
  const BlockWord one = parse_block_word("1");
  const BlockWord one21 = parse_block_word("1|21");
  const BlockWord two1 = parse_block_word("21");
  CHECK(word_compare(one, one21) < 0);
  CHECK(word_compare(one21, one) > 0);
  CHECK(word_compare(two1, one21) > 0);
  CHECK(word_compare(one21, one21) == 0);
}

TEST_CASE("Lyndon words over two letters have the classic counts") {
  // Over a 2-letter alphabet the number of Lyndon words of length
  // 1,2,3,4,5 is 2,1,2,3,6.
  const std::vector<Permutation> letters{perm("1"), perm("21")};
  std::vector<int> by_len(6, 0);
  for (const BlockWord& w : words_over(letters, 5)) {
    if (is_lyndon_word(w)) ++by_len[static_cast<size_t>(w.length())];
  }
  CHECK(by_len == std::vector<int>{0, 2, 1, 2, 3, 6});
  CHECK(is_lyndon_word(parse_block_word("21")));
  CHECK(is_lyndon_word(parse_block_word("1|21")));
  CHECK_FALSE(is_lyndon_word(parse_block_word("21|1")));
  CHECK_FALSE(is_lyndon_word(parse_block_word("1|1")));
}

TEST_CASE("Duval factorization against first principles") {
  // Check the defining properties exhaustively over a 3-letter alphabet:
  // factors concatenate to the word, every factor is Lyndon, and the
  // factor sequence is non-increasing.
  const std::vector<Permutation> letters{perm("1"), perm("21"), perm("231")};
  for (const BlockWord& w : words_over(letters, 6)) {
    const std::vector<BlockWord> factors = cfl_factorize(w);
    BlockWord glued;
    for (const BlockWord& f : factors) {
      CHECK(is_lyndon_word(f));
      glued.letters.insert(glued.letters.end(), f.letters.begin(),
                           f.letters.end());
    }
    CHECK(glued == w);
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      CHECK(word_compare(factors[i], factors[i + 1]) >= 0);
    }
  }
  const auto xyxy = cfl_factorize(parse_block_word("21|1|21|1"));
  REQUIRE(xyxy.size() == 3);
  CHECK(xyxy[0].str() == "21");
  CHECK(xyxy[1].str() == "1|21");
  CHECK(xyxy[2].str() == "1");
  CHECK_THROWS_AS(cfl_factorize(BlockWord()), std::invalid_argument);
}

TEST_CASE("the L order and Lyndon permutations") {
  CHECK(compare_L(perm("21"), perm("231")) < 0);
  CHECK(compare_L(perm("132"), perm("21")) < 0);
  CHECK(compare_L(perm("321"), perm("312")) > 0);
  CHECK(compare_L(perm("132"), perm("132")) == 0);
  CHECK(is_lyndon_permutation(perm("1")));
  CHECK(is_lyndon_permutation(perm("132")));
  CHECK(is_lyndon_permutation(perm("312")));
  CHECK_FALSE(is_lyndon_permutation(perm("12")));
  CHECK_FALSE(is_lyndon_permutation(perm("2143")));
}

TEST_CASE("Lyndon factors of a permutation") {
  auto factors = [](const std::string& s) {
    std::vector<std::string> out;
    for (const Permutation& f : lyndon_factor_permutation(perm(s))) {
      out.push_back(f.str());
    }
    return out;
  };
  CHECK(factors("12") == std::vector<std::string>{"1", "1"});
  CHECK(factors("2143") == std::vector<std::string>{"21", "21"});
  CHECK(factors("1324") == std::vector<std::string>{"132", "1"});
  CHECK(factors("321") == std::vector<std::string>{"321"});

  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : enumerate_permutations(n)) {
      const std::vector<Permutation> fs = lyndon_factor_permutation(p);
      CHECK(direct_sum(fs) == p);
      for (const Permutation& f : fs) CHECK(is_lyndon_permutation(f));
      for (size_t i = 0; i + 1 < fs.size(); ++i) {
        CHECK(compare_L(fs[i], fs[i + 1]) >= 0);
      }
    }
  }
}

TEST_CASE("Lyndon enumeration is descending and complete") {
  const auto l3 = enumerate_lyndon_permutations(3);
  REQUIRE(l3.size() == 5);
  CHECK(l3[0] == perm("321"));
  CHECK(l3[1] == perm("312"));
  CHECK(l3[2] == perm("231"));
  CHECK(l3[3] == perm("21"));
  CHECK(l3[4] == perm("132"));
  const auto l3t = enumerate_lyndon_permutations(3, true);
  REQUIRE(l3t.size() == 6);
  CHECK(l3t.back() == perm("1"));

  const auto l4 = enumerate_lyndon_permutations(4, true);
  for (size_t i = 0; i + 1 < l4.size(); ++i) {
    CHECK(compare_L(l4[i], l4[i + 1]) > 0);
  }
  std::vector<Permutation> direct;
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& p : enumerate_permutations(n)) {
      if (is_lyndon_permutation(p)) direct.push_back(p);
    }
  }
  CHECK(direct.size() == l4.size());
  for (const Permutation& p : direct) {
    CHECK(std::find(l4.begin(), l4.end(), p) != l4.end());
  }
  CHECK_THROWS_AS(enumerate_lyndon_permutations(8), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_lyndon_permutations(0), std::invalid_argument);
}

TEST_CASE("series counts match enumeration and the known values") {
  const std::vector<Int> ell = lyndon_counts_from_series(7);
  REQUIRE(ell.size() == 7);
  CHECK(ell[0] == 1);
  CHECK(ell[1] == 1);
  CHECK(ell[2] == 4);
  CHECK(ell[3] == 17);
  CHECK(ell[4] == 92);
  CHECK(ell[5] == 572);
  CHECK(ell[6] == 4156);
  for (int n = 1; n <= 5; ++n) {
    long direct = 0;
    for (const Permutation& p : enumerate_permutations(n)) {
      if (is_lyndon_permutation(p)) ++direct;
    }
    CHECK(ell[static_cast<size_t>(n - 1)] == direct);
  }
  CHECK_THROWS_AS(lyndon_counts_from_series(13), std::invalid_argument);
  CHECK_THROWS_AS(lyndon_counts_from_series(0), std::invalid_argument);
}

TEST_CASE("shuffle product basics") {
  const BlockWord a = parse_block_word("21");
  const BlockWord b = parse_block_word("1");
  const WordSum s = shuffle_product({a, b});
  CHECK(s.terms.size() == 2);
  CHECK(s.terms.at(parse_block_word("21|1")) == 1);
  CHECK(s.terms.at(parse_block_word("1|21")) == 1);
  CHECK(s.total_mass() == 2);

  const WordSum twice = shuffle_product({b, b});
  CHECK(twice.terms.size() == 1);
  CHECK(twice.terms.at(parse_block_word("1|1")) == 2);

  const WordSum thrice = shuffle_product({b, b, b});
  CHECK(thrice.terms.at(parse_block_word("1|1|1")) == 6);

  const WordSum single = shuffle_product({a});
  CHECK(single.terms.size() == 1);
  CHECK(single.terms.at(a) == 1);
}

TEST_CASE("shuffle product against the recursive oracle") {
  const std::vector<Permutation> letters{perm("1"), perm("21")};
  const std::vector<BlockWord> pool = words_over(letters, 3);
  for (const BlockWord& u : pool) {
    for (const BlockWord& v : pool) {
      const WordSum got = shuffle_product({u, v});
      const WordSum want = shuffle_oracle(u, v);
      CHECK(got.terms == want.terms);
      CHECK(got.total_mass() ==
            multinomial({u.length(), v.length()}).get_si());
    }
  }
}

TEST_CASE("maximal shuffle constituent") {
  const auto [top, coeff] = max_shuffle_constituent(
      {parse_block_word("321"), parse_block_word("21")});
  CHECK(top.str() == "321|21");
  CHECK(coeff == 1);

  const auto [top2, coeff2] = max_shuffle_constituent(
      {parse_block_word("21"), parse_block_word("21")});
  CHECK(top2.str() == "21|21");
  CHECK(coeff2 == 2);

  const auto [top3, coeff3] = max_shuffle_constituent(
      {parse_block_word("1|21"), parse_block_word("1")});
  CHECK(top3.str() == "1|21|1");
  CHECK(coeff3 == 1);

  // the list must be non-increasing and all Lyndon
  CHECK_THROWS_AS(max_shuffle_constituent(
                      {parse_block_word("1"), parse_block_word("21")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_shuffle_constituent({parse_block_word("21|1")}),
                  std::invalid_argument);
}
