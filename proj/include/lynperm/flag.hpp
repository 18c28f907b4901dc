#pragma once

#include <map>
#include <string>
#include <vector>

#include "lynperm/perm.hpp"
#include "lynperm/permuton.hpp"
#include "lynperm/rational.hpp"

namespace lynperm {

/// Default cap on the total size of a flag product.
inline constexpr int kDefaultFlagBound = 8;

/// Formal rational combination of permutations.
struct PermSum {
  std::map<Permutation, Rat> terms;

  void add(const Permutation& p, const Rat& coeff);
  Rat coefficient(const Permutation& p) const;
  Rat total_mass() const;

  /// "123 + 2/3*132 + ..." with rational coefficients.
  std::string str() const;

  bool operator==(const PermSum&) const = default;
};

/// n-ary flag product, computed as iterated binary products. The direct
/// ordered-partition form below is the definitional oracle; the two agree
/// (tested), and this version stays fast when many parts are small.
PermSum flag_product(const std::vector<Permutation>& parts,
                     int max_total = kDefaultFlagBound);

/// Direct definition: coefficient of sigma is the number of ordered
/// partitions of positions into sets inducing the parts, divided by the
/// multinomial of the part sizes.
PermSum flag_product_direct(const std::vector<Permutation>& parts,
                            int max_total = kDefaultFlagBound);

/// Constituents of the flag product of pi's Lyndon factors that contradict
/// the block-count/word bound: every sigma != pi in the product must have
/// fewer blocks than pi, or equally many and a smaller block word. The
/// returned list is empty; anything else is a counterexample.
std::vector<Permutation> constituents_violating_flag_lemma(
    const Permutation& pi, int max_total = kDefaultFlagBound);

/// Linear extension of density: sum of coeff * exact_density(term, P).
Rat density_of_sum(const PermSum& s, const BlowupPermuton& P,
                   int max_size = kDefaultDensityBound);

}  // namespace lynperm
