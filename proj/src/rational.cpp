#include "lynperm/rational.hpp"

#include <stdexcept>

namespace lynperm {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("invalid rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string int_to_string(const Int& n) { return n.get_str(); }

double rat_to_double(const Rat& r) { return r.get_d(); }

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Int factorial(int n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Int multinomial(const std::vector<int>& counts) {
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("negative count in multinomial");
    total += c;
  }
  Int result = factorial(total);
  for (int c : counts) result /= factorial(c);
  return result;
}

}  // namespace lynperm
