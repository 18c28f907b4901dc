#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lynperm/rational.hpp"

namespace lynperm {

/// Default cap for full enumeration of permutations of a given size.
inline constexpr int kDefaultEnumBound = 8;

/// A permutation in one-line notation. Values are 1-based: word()[i-1] is
/// the image of i. The empty permutation exists only as the identity
/// element for direct sums; pattern and density operations reject it.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that the word is a bijection on [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Descending word n, n-1, ..., 1.
  static Permutation descending(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// 1-based application: at(i) = pi(i).
  int at(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  /// Compact digit form for sizes <= 9 ("21453"), comma-separated otherwise.
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // word-lexicographic

 private:
  std::vector<int> word_;
};

/// The unique maximal decomposition of a permutation into indecomposable
/// blocks; the direct sum of the blocks reproduces the original.
struct BlockDecomposition {
  std::vector<Permutation> blocks;
};

/// Parses either a digit string ("21453", sizes <= 9) or comma-separated
/// values ("10,2,3,4,5,6,7,8,9,1"). Inverse of Permutation::str().
Permutation parse_permutation(const std::string& text);

/// pi_1 + ... + pi_n stacked block-diagonally; empty list gives the empty
/// permutation.
Permutation direct_sum(const std::vector<Permutation>& parts);

BlockDecomposition decompose_blocks(const Permutation& p);

bool is_indecomposable(const Permutation& p);

/// Lengths of the maximal runs with pi(a+1) = pi(a) + 1, in position order.
/// The lengths sum to |p|.
std::vector<int> increasing_segments(const Permutation& p);

/// Pattern induced by the given 1-based positions (strictly increasing).
Permutation pattern_at(const Permutation& p, const std::vector<int>& indices);

/// Exact probability that a uniform random |sigma|-subset of positions of p
/// induces sigma. Enumerates all subsets; intended for desk-scale sizes.
Rat pattern_density(const Permutation& sigma, const Permutation& p);

/// All permutations of size n in lexicographic order of their words.
std::vector<Permutation> enumerate_permutations(int n,
                                                int max_size = kDefaultEnumBound);

}  // namespace lynperm
