#include "lynperm/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "lynperm/permuton.hpp"

namespace lynperm {

std::strong_ordering reduction_order_compare(const Permutation& p,
                                             const Permutation& q) {
  const BlockWord wp = block_word_of(p);
  const BlockWord wq = block_word_of(q);
  if (wp.length() != wq.length()) return wp.length() <=> wq.length();
  auto c = word_compare(wp, wq);
  if (c == std::strong_ordering::equal && p != q) {
    // The block word determines the permutation; two distinct permutations
    // comparing equal would break the induction's well-foundedness.
    throw std::logic_error("distinct permutations with equal block words");
  }
  return c;
}

Polynomial reduce_to_lyndon(const Permutation& p,
                            const std::map<Permutation, Polynomial>& table) {
  if (p.empty()) {
    throw std::invalid_argument("reduction of the empty permutation");
  }
  if (is_lyndon_permutation(p)) {
    // Base case; the trivial permutation's density is identically 1.
    if (p.size() == 1) return Polynomial::constant(make_rat(1));
    return Polynomial::variable(Variable::x(p));
  }
  const std::vector<Permutation> factors = lyndon_factor_permutation(p);
  const PermSum product = flag_product(factors, p.size());
  const Rat lead = product.coefficient(p);
  if (lead <= 0) {
    throw std::logic_error("flag product of Lyndon factors misses " + p.str());
  }
  // d(p) = (prod of factor densities - sum over other constituents) / lead,
  // with every other constituent strictly below p in the reduction order.
  Polynomial lhs = Polynomial::constant(make_rat(1));
  for (const Permutation& f : factors) {
    if (f.size() == 1) continue;
    lhs = lhs * Polynomial::variable(Variable::x(f));
  }
  for (const auto& [sigma, coeff] : product.terms) {
    if (sigma == p) continue;
    if (reduction_order_compare(sigma, p) >= 0) {
      throw std::logic_error("constituent " + sigma.str() +
                             " not below " + p.str() + " in reduction order");
    }
    auto it = table.find(sigma);
    if (it == table.end()) {
      throw std::invalid_argument("reduction table missing entry for " +
                                  sigma.str());
    }
    lhs = lhs - it->second.scaled(coeff);
  }
  Rat inv_lead = 1 / lead;
  inv_lead.canonicalize();
  return lhs.scaled(inv_lead);
}

ReductionTable build_reduction_table(int k, int max_k) {
  if (k < 1 || k > max_k) {
    throw std::invalid_argument("reduction table size out of range");
  }
  std::vector<Permutation> all;
  for (int n = 1; n <= k; ++n) {
    for (Permutation& p : enumerate_permutations(n)) all.push_back(std::move(p));
  }
  std::sort(all.begin(), all.end(), [](const Permutation& a,
                                       const Permutation& b) {
    return reduction_order_compare(a, b) < 0;
  });
  ReductionTable table;
  table.k = k;
  for (const Permutation& p : all) {
    table.entries.emplace(p, reduce_to_lyndon(p, table.entries));
  }
  return table;
}

Rat evaluate_polynomial(const Polynomial& poly,
                        const std::map<Variable, Rat>& assignment) {
  return poly.evaluate(assignment);
}

std::map<Variable, Rat> lyndon_density_point(int k, const BlowupPermuton& P) {
  std::map<Variable, Rat> point;
  for (const Permutation& sigma : enumerate_lyndon_permutations(k)) {
    point.emplace(Variable::x(sigma), exact_density(sigma, P));
  }
  return point;
}

}  // namespace lynperm
