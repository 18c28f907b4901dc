#pragma once

#include <cstdint>
#include <vector>

#include "lynperm/perm.hpp"
#include "lynperm/permuton.hpp"
#include "lynperm/polynomial.hpp"
#include "lynperm/rational.hpp"

namespace lynperm {

/// Largest k the witness search supports.
inline constexpr int kMaxWitnessK = 4;
/// Largest k with full symbolic s/t densities (k=4 runs in exact numeric
/// mode instead; its base permutation has 83 parts).
inline constexpr int kMaxSymbolicK = 3;
/// Default total-size cap for the brute-force interval lemma check.
inline constexpr int kDefaultLemmaBound = 8;

/// The fixed combinatorial data behind the Pi^L family for a given k:
/// the N+1 Lyndon permutations in descending order (trivial last), their
/// sizes, and the direct-sum base.
struct LyndonStructure {
  int k = 0;
  int N = 0;
  std::vector<Permutation> lyndon_list;
  std::vector<int> sizes;  // n_i for the N non-trivial entries
  Permutation base;
};

LyndonStructure lyndon_structure(int k);

/// A point of the Pi^L parameter space: s_i for i in [N] and t_{i,j} for
/// j in [n_i], all positive, with sum(s) < 1 and each sum_j t_{i,j} < 1.
/// The residual scale z = 1 - sum s_i t_{i,j} is then positive.
struct PiLSpec {
  int k = 0;
  std::vector<Rat> s;
  std::vector<std::vector<Rat>> t;
};

PiLSpec make_pil_spec(int k, std::vector<Rat> s,
                      std::vector<std::vector<Rat>> t);

Rat residual_z(const PiLSpec& spec);

/// The blow-up with scales (s_1 t_{1,1}, ..., s_N t_{N,n_N}, z).
BlowupPermuton build_PiL(const PiLSpec& spec);

/// d(pi, Pi^L) as an exact polynomial in the s and t variables. Verifies
/// that the density of a non-trivial listed permutation never touches the
/// residual part and is homogeneous of degree |pi| in s and in t.
Polynomial density_in_s_t(const Permutation& pi, int k);

/// d(sigma, Pi^L(spec)) evaluated directly by support enumeration; works
/// for every supported k including the 83-part base of k=4.
Rat pil_density(const Permutation& sigma, const PiLSpec& spec);

/// J[i][j] = d/ds_j of d(pi_i, Pi^L) at the point. Symbolic
/// differentiation for k <= 3, exact numeric accumulation for k=4.
std::vector<std::vector<Rat>> jacobian_matrix(const PiLSpec& spec);

/// Exact determinant by fraction-free (Bareiss) elimination after
/// clearing row denominators.
Rat jacobian_determinant(std::vector<std::vector<Rat>> m);

/// Cofactor-expansion oracle for small matrices.
Rat determinant_cofactor(const std::vector<std::vector<Rat>>& m);

/// Bareiss determinant of an integer matrix.
Int determinant_integer(std::vector<std::vector<Int>> m);

struct JacobianCertificate {
  int k = 0;
  PiLSpec point;
  std::vector<Permutation> lyndon_list;
  std::vector<std::vector<Rat>> matrix;
  Rat determinant;
  std::uint64_t witness_seed = 0;
};

/// Samples rational points (denominators at most 64) until the Jacobian
/// determinant is non-zero. Throws if every attempt fails.
JacobianCertificate find_witness(int k, int attempts, std::uint64_t seed);

/// Independent re-check of a certificate: densities recomputed by direct
/// enumeration, derivatives by a five-point stencil (exact for these
/// degrees up to rounding), determinant in floating point.
double certificate_float_determinant(const JacobianCertificate& cert);

/// Coefficient of prod_i s_i^(n_i - 1) prod_{i,j} t_{i,j} in det(J):
/// full symbolic expansion for k=2, assumption-free extraction by
/// alternating-sum evaluation over t in {0,1} for k=3.
Rat det_monomial_coefficient(int k);

/// Measured coefficient of s_i^{n_i} t_{i,1}...t_{i,n_i} in d(pi_i, Pi^L);
/// the theory needs it non-zero, the exact value is reported, not assumed.
Rat measured_block_coefficient(int k, int i);

/// Brute-force interval lemma: in the direct sum of a strictly
/// <_L-decreasing tuple, the only disjoint occurrence of the tuple is the
/// canonical block-interval one.
bool verify_lemma_lyndon(const std::vector<Permutation>& perms,
                         int max_total = kDefaultLemmaBound);

}  // namespace lynperm
