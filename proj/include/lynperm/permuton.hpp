#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lynperm/perm.hpp"
#include "lynperm/polynomial.hpp"
#include "lynperm/rational.hpp"

namespace lynperm {

/// Default cap on pattern size for exact blow-up densities.
inline constexpr int kDefaultDensityBound = 6;

/// Blow-up of a base permutation: part i of the support is a diagonal
/// segment scaled by scales[i], segments arranged in the base's pattern.
struct BlowupPermuton {
  Permutation base;
  std::vector<Rat> scales;
};

struct DensityEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  long long trials = 0;
  /// Trials redrawn because two sampled points collided (see sampler notes).
  long long tie_redraws = 0;
};

/// Validates sizes match, scales are non-negative and sum to exactly 1.
/// Zero scales are permitted; those parts are never sampled.
BlowupPermuton make_blowup(const Permutation& base,
                           const std::vector<Rat>& scales);

/// Cumulative scale sums by position (x-offsets of the parts).
std::vector<Rat> x_offsets(const BlowupPermuton& P);
/// Cumulative scale sums by value (y-offsets of the parts).
std::vector<Rat> y_offsets(const BlowupPermuton& P);

/// The pattern of a point sample with counts[i] points in part i: each
/// part's points form an increasing run, runs arranged by the base.
Permutation blowup_pattern(const Permutation& base,
                           const std::vector<int>& counts);

/// Exact probability that the P-random permutation of size |sigma| is
/// sigma: sum over count vectors c with blowup_pattern(base,c) = sigma of
/// multinomial(|sigma|; c) * prod scales[i]^c[i].
Rat exact_density(const Permutation& sigma, const BlowupPermuton& P,
                  int max_size = kDefaultDensityBound);

/// Same sum with per-part scale polynomials instead of rational scales.
Polynomial symbolic_density_general(const Permutation& sigma,
                                    const Permutation& base,
                                    const std::vector<Polynomial>& part_scales,
                                    int max_size = kDefaultDensityBound);

/// Symbolic density with one named variable per part.
Polynomial symbolic_density(const Permutation& sigma, const Permutation& base,
                            const std::vector<std::string>& variable_names,
                            int max_size = kDefaultDensityBound);

/// Per-trial stream seed: splitmix64 applied to master + index * golden
/// ratio increment. Trials are independent streams, so parallel and
/// sequential runs see identical samples.
std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t index);

/// One P-random permutation of size n. Part choices are exact (integer
/// rejection sampling against the common denominator); positions inside a
/// part are 64-bit uniforms. A position collision within a part aborts and
/// redraws the whole sample, bumping *tie_redraws if given.
Permutation sample_permutation(const BlowupPermuton& P, int n,
                               std::uint64_t seed,
                               long long* tie_redraws = nullptr);

/// Empirical frequency of sigma over independent seeded trials.
DensityEstimate estimate_density(const Permutation& sigma,
                                 const BlowupPermuton& P, long long trials,
                                 std::uint64_t seed);

}  // namespace lynperm
