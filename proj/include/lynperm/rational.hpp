#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lynperm {

// All algebra in this library is exact. Floating point appears only in
// Monte Carlo summaries and in numeric cross-checks of exact results.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rat rat_from_string(const std::string& text);

/// Canonical rendering: "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

std::string int_to_string(const Int& n);

double rat_to_double(const Rat& r);

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int binomial(int n, int k);

/// n! / (c_1! c_2! ... c_m!) for n = sum of counts.
Int multinomial(const std::vector<int>& counts);

Int factorial(int n);

}  // namespace lynperm
