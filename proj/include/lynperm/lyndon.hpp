#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lynperm/perm.hpp"
#include "lynperm/rational.hpp"

namespace lynperm {

/// Default cap for enumerating Lyndon permutations by size.
inline constexpr int kDefaultLyndonBound = 7;
/// Default cap for the power-series count computation.
inline constexpr int kDefaultSeriesBound = 12;

/// A word over the alphabet of indecomposable permutations.
struct BlockWord {
  std::vector<Permutation> letters;

  BlockWord() = default;
  /// Validates that every letter is indecomposable.
  explicit BlockWord(std::vector<Permutation> ls);

  int length() const { return static_cast<int>(letters.size()); }
  /// Total size of the permutation the word spells.
  int weight() const;

  /// Letters joined by "|", e.g. "21|231".
  std::string str() const;

  bool operator==(const BlockWord&) const = default;
};

/// Order on the alphabet: smaller size first, then word-lexicographic.
/// This makes 1 < 21 < 231 < 312 < 321 the first five letters.
std::strong_ordering alphabet_compare(const Permutation& a,
                                      const Permutation& b);

/// Lexicographic order on block words induced by alphabet_compare;
/// a proper prefix compares smaller than its extensions.
std::strong_ordering word_compare(const BlockWord& a, const BlockWord& b);

struct WordLess {
  bool operator()(const BlockWord& a, const BlockWord& b) const {
    return word_compare(a, b) < 0;
  }
};

/// Formal integer combination of block words (shuffle product output).
struct WordSum {
  std::map<BlockWord, long long, WordLess> terms;

  void add(const BlockWord& w, long long coeff);
  long long total_mass() const;
};

/// Inverse of BlockWord::str(); every letter must be indecomposable.
BlockWord parse_block_word(const std::string& text);

BlockWord block_word_of(const Permutation& p);

/// True iff w is strictly smaller than each of its proper suffixes.
bool is_lyndon_word(const BlockWord& w);

/// Chen-Fox-Lyndon factorization into non-increasing Lyndon factors,
/// by Duval's algorithm.
std::vector<BlockWord> cfl_factorize(const BlockWord& w);

/// The <_L order: lexicographic comparison of block words.
std::strong_ordering compare_L(const Permutation& p, const Permutation& q);

bool is_lyndon_permutation(const Permutation& p);

/// Direct-sum factors corresponding to the CFL factors of the block word:
/// the unique p = f_1 + ... + f_n with each f_i Lyndon and f_1 >=_L ... >=_L f_n.
std::vector<Permutation> lyndon_factor_permutation(const Permutation& p);

/// All Lyndon permutations of size <= k (size >= 2 unless include_trivial),
/// sorted descending under compare_L.
std::vector<Permutation> enumerate_lyndon_permutations(
    int k, bool include_trivial = false, int max_size = kDefaultLyndonBound);

/// Counts l_1..l_kmax solved degree by degree from
///   prod_{n>=1} (1 - x^n)^(-l_n) = 1 + sum_{n>=1} n! x^n.
std::vector<Int> lyndon_counts_from_series(int kmax,
                                           int max_kmax = kDefaultSeriesBound);

/// Formal sum of all interleavings; n-ary by iterated binary shuffling.
WordSum shuffle_product(const std::vector<BlockWord>& words);

/// Lexicographically largest constituent of the shuffle product and its
/// coefficient. Requires each word Lyndon and the list non-increasing.
std::pair<BlockWord, long long> max_shuffle_constituent(
    const std::vector<BlockWord>& words);

}  // namespace lynperm
