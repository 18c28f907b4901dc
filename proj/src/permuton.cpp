#include "lynperm/permuton.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace lynperm {

BlowupPermuton make_blowup(const Permutation& base,
                           const std::vector<Rat>& scales) {
  if (base.empty()) {
    throw std::invalid_argument("blow-up of the empty permutation");
  }
  if (static_cast<int>(scales.size()) != base.size()) {
    throw std::invalid_argument("blow-up needs one scale per base element");
  }
  Rat total = make_rat(0);
  for (const Rat& z : scales) {
    if (z < 0) throw std::invalid_argument("negative blow-up scale");
    total += z;
  }
  if (total != 1) {
    throw std::invalid_argument("blow-up scales must sum to 1, got " +
                                rat_to_string(total));
  }
  return BlowupPermuton{base, scales};
}

std::vector<Rat> x_offsets(const BlowupPermuton& P) {
  std::vector<Rat> out;
  Rat run = make_rat(0);
  for (const Rat& z : P.scales) {
    out.push_back(run);
    run += z;
  }
  return out;
}

std::vector<Rat> y_offsets(const BlowupPermuton& P) {
  // Offset of part i in the value direction: total scale of parts whose
  // base value is smaller.
  const int k = P.base.size();
  std::vector<Rat> out(static_cast<size_t>(k), make_rat(0));
  for (int i = 1; i <= k; ++i) {
    Rat run = make_rat(0);
    for (int j = 1; j <= k; ++j) {
      if (P.base.at(j) < P.base.at(i)) run += P.scales[static_cast<size_t>(j - 1)];
    }
    out[static_cast<size_t>(i - 1)] = run;
  }
  return out;
}

Permutation blowup_pattern(const Permutation& base,
                           const std::vector<int>& counts) {
  const int k = base.size();
  if (static_cast<int>(counts.size()) != k) {
    throw std::invalid_argument("blowup_pattern needs one count per part");
  }
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("negative part count");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("blowup_pattern of zero points");
  // Part i's points get the value range just above all parts with smaller
  // base value; within a part the run is increasing.
  std::vector<int> value_start(static_cast<size_t>(k), 0);
  for (int i = 1; i <= k; ++i) {
    int below = 0;
    for (int j = 1; j <= k; ++j) {
      if (base.at(j) < base.at(i)) below += counts[static_cast<size_t>(j - 1)];
    }
    value_start[static_cast<size_t>(i - 1)] = below;
  }
  std::vector<int> w;
  w.reserve(static_cast<size_t>(total));
  for (int i = 0; i < k; ++i) {
    for (int c = 1; c <= counts[static_cast<size_t>(i)]; ++c) {
      w.push_back(value_start[static_cast<size_t>(i)] + c);
    }
  }
  return Permutation(std::move(w));
}

namespace {

template <typename Fn>
void for_each_composition(int total, int parts, Fn&& fn) {
  std::vector<int> c(static_cast<size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == parts - 1) {
      c[static_cast<size_t>(idx)] = remaining;
      fn(c);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[static_cast<size_t>(idx)] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

Rat rat_pow(const Rat& base, int e) {
  Rat out = make_rat(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Polynomial poly_pow(const Polynomial& base, int e) {
  Polynomial out = Polynomial::constant(make_rat(1));
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

void check_density_args(const Permutation& sigma, int base_size, int max_size) {
  if (sigma.empty()) {
    throw std::invalid_argument("density of the empty pattern");
  }
  if (sigma.size() > max_size) {
    throw std::invalid_argument("pattern size " + std::to_string(sigma.size()) +
                                " exceeds density bound " +
                                std::to_string(max_size));
  }
  if (base_size < 1) throw std::invalid_argument("empty blow-up base");
}

}  // namespace

Rat exact_density(const Permutation& sigma, const BlowupPermuton& P,
                  int max_size) {
  check_density_args(sigma, P.base.size(), max_size);
  const int m = sigma.size();
  Rat total = make_rat(0);
  for_each_composition(m, P.base.size(), [&](const std::vector<int>& c) {
    if (blowup_pattern(P.base, c) != sigma) return;
    Rat term(multinomial(c));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] > 0) term *= rat_pow(P.scales[i], c[i]);
    }
    total += term;
  });
  total.canonicalize();
  return total;
}

Polynomial symbolic_density_general(const Permutation& sigma,
                                    const Permutation& base,
                                    const std::vector<Polynomial>& part_scales,
                                    int max_size) {
  check_density_args(sigma, base.size(), max_size);
  if (static_cast<int>(part_scales.size()) != base.size()) {
    throw std::invalid_argument("need one scale polynomial per part");
  }
  const int m = sigma.size();
  Polynomial total;
  for_each_composition(m, base.size(), [&](const std::vector<int>& c) {
    if (blowup_pattern(base, c) != sigma) return;
    Polynomial term = Polynomial::constant(Rat(multinomial(c)));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] > 0) term = term * poly_pow(part_scales[i], c[i]);
    }
    total = total + term;
  });
  return total;
}

Polynomial symbolic_density(const Permutation& sigma, const Permutation& base,
                            const std::vector<std::string>& variable_names,
                            int max_size) {
  std::vector<Polynomial> parts;
  parts.reserve(variable_names.size());
  for (const std::string& name : variable_names) {
    parts.push_back(Polynomial::variable(Variable::named(name)));
  }
  return symbolic_density_general(sigma, base, parts, max_size);
}

std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

/// Uniform integer in [0, bound) by masked rejection on 64-bit words.
Int uniform_int_below(std::mt19937_64& rng, const Int& bound) {
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  while (true) {
    for (std::uint64_t& w : buf) w = rng();
    Int v;
    mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
               buf.data());
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(bits));
    if (v < bound) return v;
  }
}

}  // namespace

Permutation sample_permutation(const BlowupPermuton& P, int n,
                               std::uint64_t seed, long long* tie_redraws) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  const int k = P.base.size();
  // Integer part weights over a common denominator make the categorical
  // draw exact.
  Int denom(1);
  for (const Rat& z : P.scales) {
    Int d = z.get_den();
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Int> cum;
  cum.reserve(static_cast<size_t>(k));
  Int run(0);
  for (const Rat& z : P.scales) {
    run += Int(z.get_num()) * (denom / Int(z.get_den()));
    cum.push_back(run);
  }
  std::mt19937_64 rng(seed);
  struct Point {
    int part;
    std::uint64_t pos;
  };
  while (true) {
    std::vector<Point> pts(static_cast<size_t>(n));
    for (Point& p : pts) {
      Int r = uniform_int_below(rng, denom);
      int part = 0;
      while (!(r < cum[static_cast<size_t>(part)])) ++part;
      p = {part, rng()};
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      return a.part != b.part ? a.part < b.part : a.pos < b.pos;
    });
    bool tie = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (pts[static_cast<size_t>(i)].part == pts[static_cast<size_t>(i + 1)].part &&
          pts[static_cast<size_t>(i)].pos == pts[static_cast<size_t>(i + 1)].pos) {
        tie = true;
        break;
      }
    }
    if (tie) {
      if (tie_redraws) ++*tie_redraws;
      continue;
    }
    // pts is x-sorted; the value order is by (base value of part, position).
    std::vector<int> w(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
      const auto ykey = [&](const Point& p) {
        return std::pair<int, std::uint64_t>(P.base.at(p.part + 1), p.pos);
      };
      int rank = 1;
      for (int b = 0; b < n; ++b) {
        if (ykey(pts[static_cast<size_t>(b)]) < ykey(pts[static_cast<size_t>(a)])) {
          ++rank;
        }
      }
      w[static_cast<size_t>(a)] = rank;
    }
    return Permutation(std::move(w));
  }
}

DensityEstimate estimate_density(const Permutation& sigma,
                                 const BlowupPermuton& P, long long trials,
                                 std::uint64_t seed) {
  if (sigma.empty()) throw std::invalid_argument("estimating the empty pattern");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  long long hits = 0;
  long long ties = 0;
  for (long long j = 0; j < trials; ++j) {
    Permutation sample =
        sample_permutation(P, sigma.size(), derive_trial_seed(seed, static_cast<std::uint64_t>(j)), &ties);
    if (sample == sigma) ++hits;
  }
  DensityEstimate est;
  est.trials = trials;
  est.tie_redraws = ties;
  est.mean = static_cast<double>(hits) / static_cast<double>(trials);
  est.standard_error =
      std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
  return est;
}

}  // namespace lynperm
