#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lynperm/permuton.hpp"

namespace lynperm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Random blow-up permuton with the given base-size cap; scales are
/// multiples of 1/denom that sum to 1 (zero parts allowed).
BlowupPermuton random_blowup(std::mt19937_64& rng, int max_base, int denom);

CheckResult check_lyndon_enumeration();
CheckResult check_series_counts();
CheckResult check_flag_example();
CheckResult check_product_identity(std::uint64_t seed);
CheckResult check_shuffle_flag_lemmas();
CheckResult check_reduction_round_trip(std::uint64_t seed);
CheckResult check_interval_lemma();
CheckResult check_jacobian_certificates(std::uint64_t seed);
CheckResult check_monte_carlo(std::uint64_t seed);
CheckResult check_homogeneity();
/// k=4 witness in exact numeric mode; slow, only run at level "deep".
CheckResult check_k4_witness(std::uint64_t seed);

/// level "desk" runs the ten standard checks; "deep" adds the k=4 witness.
std::vector<CheckResult> run_checks(const std::string& level,
                                    std::uint64_t seed);

}  // namespace lynperm
