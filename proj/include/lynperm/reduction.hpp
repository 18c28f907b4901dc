#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lynperm/flag.hpp"
#include "lynperm/lyndon.hpp"
#include "lynperm/perm.hpp"
#include "lynperm/polynomial.hpp"

namespace lynperm {

/// Default cap on k for reduction tables.
inline constexpr int kDefaultReductionBound = 5;

/// For every permutation of size <= k, a polynomial in the variables
/// x[sigma], sigma a non-trivial Lyndon permutation of size <= k, whose
/// value at Lyndon densities of any permuton equals the permutation's
/// density. x[1] never appears: the trivial density is the constant 1.
struct ReductionTable {
  int k = 0;
  std::map<Permutation, Polynomial> entries;
};

/// The induction order: fewer indecomposable blocks first, ties by
/// lexicographic comparison of block words. Equality implies the
/// permutations coincide, since the block word determines the permutation.
std::strong_ordering reduction_order_compare(const Permutation& p,
                                             const Permutation& q);

/// One induction step. Requires entries for everything strictly below p in
/// the reduction order; Lyndon p is the base case.
Polynomial reduce_to_lyndon(const Permutation& p,
                            const std::map<Permutation, Polynomial>& table);

ReductionTable build_reduction_table(int k,
                                     int max_k = kDefaultReductionBound);

/// Exact evaluation of a table entry (or any polynomial) at an assignment.
Rat evaluate_polynomial(const Polynomial& poly,
                        const std::map<Variable, Rat>& assignment);

/// The assignment x[sigma] -> exact_density(sigma, P) for every
/// non-trivial Lyndon sigma of size <= k.
std::map<Variable, Rat> lyndon_density_point(int k, const BlowupPermuton& P);

}  // namespace lynperm
