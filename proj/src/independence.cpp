#include "lynperm/independence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lynperm/lyndon.hpp"
#include "lynperm/subsets.hpp"

namespace lynperm {

LyndonStructure lyndon_structure(int k) {
  if (k < 2 || k > kMaxWitnessK) {
    throw std::invalid_argument("Pi^L structure supported for 2 <= k <= " +
                                std::to_string(kMaxWitnessK));
  }
  LyndonStructure st;
  st.k = k;
  st.lyndon_list = enumerate_lyndon_permutations(k, /*include_trivial=*/true);
  st.N = static_cast<int>(st.lyndon_list.size()) - 1;
  if (st.lyndon_list.front() != Permutation::descending(k) ||
      st.lyndon_list.back() != Permutation::identity(1)) {
    throw std::logic_error("unexpected endpoints of the Lyndon list");
  }
  for (int i = 0; i < st.N; ++i) {
    const Permutation& pi = st.lyndon_list[static_cast<size_t>(i)];
    st.sizes.push_back(pi.size());
    // A non-trivial Lyndon word cannot end with the minimal letter, so no
    // listed permutation ends in a singleton block. The residual part of
    // Pi^L is therefore invisible to their densities.
    if (block_word_of(pi).letters.back().size() < 2) {
      throw std::logic_error("Lyndon permutation " + pi.str() +
                             " ends in a singleton block");
    }
  }
  st.base = direct_sum(st.lyndon_list);
  return st;
}

PiLSpec make_pil_spec(int k, std::vector<Rat> s,
                      std::vector<std::vector<Rat>> t) {
  const LyndonStructure st = lyndon_structure(k);
  if (static_cast<int>(s.size()) != st.N ||
      static_cast<int>(t.size()) != st.N) {
    throw std::invalid_argument("Pi^L point needs " + std::to_string(st.N) +
                                " s-values and t-rows");
  }
  Rat s_sum = make_rat(0);
  for (const Rat& v : s) {
    if (v <= 0) throw std::invalid_argument("s-values must be positive");
    s_sum += v;
  }
  if (s_sum >= 1) throw std::invalid_argument("s-values must sum below 1");
  for (int i = 0; i < st.N; ++i) {
    if (static_cast<int>(t[static_cast<size_t>(i)].size()) !=
        st.sizes[static_cast<size_t>(i)]) {
      throw std::invalid_argument("t-row " + std::to_string(i + 1) +
                                  " needs " +
                                  std::to_string(st.sizes[static_cast<size_t>(i)]) +
                                  " values");
    }
    Rat t_sum = make_rat(0);
    for (const Rat& v : t[static_cast<size_t>(i)]) {
      if (v <= 0) throw std::invalid_argument("t-values must be positive");
      t_sum += v;
    }
    if (t_sum >= 1) {
      throw std::invalid_argument("t-row " + std::to_string(i + 1) +
                                  " must sum below 1");
    }
  }
  PiLSpec spec{k, std::move(s), std::move(t)};
  if (residual_z(spec) <= 0) {
    throw std::logic_error("residual scale not positive");
  }
  return spec;
}

Rat residual_z(const PiLSpec& spec) {
  Rat used = make_rat(0);
  for (size_t i = 0; i < spec.s.size(); ++i) {
    for (const Rat& tv : spec.t[i]) used += spec.s[i] * tv;
  }
  Rat z = 1 - used;
  z.canonicalize();
  return z;
}

BlowupPermuton build_PiL(const PiLSpec& spec) {
  const LyndonStructure st = lyndon_structure(spec.k);
  std::vector<Rat> scales;
  for (size_t i = 0; i < spec.s.size(); ++i) {
    for (const Rat& tv : spec.t[i]) {
      Rat z = spec.s[i] * tv;
      z.canonicalize();
      scales.push_back(z);
    }
  }
  scales.push_back(residual_z(spec));
  return make_blowup(st.base, scales);
}

namespace {

/// Part index -> block index in [0, N), or -1 for the residual part.
std::vector<int> part_blocks(const LyndonStructure& st) {
  std::vector<int> out;
  for (int i = 0; i < st.N; ++i) {
    for (int j = 0; j < st.sizes[static_cast<size_t>(i)]; ++j) out.push_back(i);
  }
  out.push_back(-1);
  return out;
}

/// Enumerates compositions of |sigma| supported on <= |sigma| parts of the
/// base and calls fn(parts, counts) for those whose blow-up pattern is
/// sigma. Parts are 0-based and strictly increasing; counts are >= 1.
template <typename Fn>
void for_each_matching_composition(const Permutation& base,
                                   const Permutation& sigma, Fn&& fn) {
  const int P = base.size();
  const int m = sigma.size();
  std::vector<int> parts;
  std::vector<int> counts;
  std::vector<int> word(static_cast<size_t>(m));
  auto matches = [&]() {
    const int r = static_cast<int>(parts.size());
    int pos = 0;
    for (int a = 0; a < r; ++a) {
      int below = 0;
      for (int b = 0; b < r; ++b) {
        if (base.at(parts[static_cast<size_t>(b)] + 1) <
            base.at(parts[static_cast<size_t>(a)] + 1)) {
          below += counts[static_cast<size_t>(b)];
        }
      }
      for (int c = 1; c <= counts[static_cast<size_t>(a)]; ++c) {
        word[static_cast<size_t>(pos++)] = below + c;
      }
    }
    return word == sigma.word();
  };
  auto rec = [&](auto&& self, int next_part, int remaining) -> void {
    if (remaining == 0) {
      if (matches()) fn(parts, counts);
      return;
    }
    for (int p = next_part; p < P; ++p) {
      parts.push_back(p);
      for (int c = 1; c <= remaining; ++c) {
        counts.push_back(c);
        self(self, p + 1, remaining - c);
        counts.pop_back();
      }
      parts.pop_back();
    }
  };
  rec(rec, 0, m);
}

std::vector<Rat> flat_scales(const PiLSpec& spec) {
  std::vector<Rat> scales;
  for (size_t i = 0; i < spec.s.size(); ++i) {
    for (const Rat& tv : spec.t[i]) {
      Rat z = spec.s[i] * tv;
      z.canonicalize();
      scales.push_back(z);
    }
  }
  scales.push_back(residual_z(spec));
  return scales;
}

Rat rat_pow(const Rat& base, int e) {
  Rat out = make_rat(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Polynomial density_in_s_t(const Permutation& pi, int k) {
  if (k > kMaxSymbolicK) {
    throw std::invalid_argument("symbolic s/t densities supported for k <= " +
                                std::to_string(kMaxSymbolicK));
  }
  const LyndonStructure st = lyndon_structure(k);
  if (std::find(st.lyndon_list.begin(), st.lyndon_list.end(), pi) ==
      st.lyndon_list.end()) {
    throw std::invalid_argument(pi.str() + " is not in the Lyndon list");
  }
  const Variable z_var = Variable::named("z");
  std::vector<Polynomial> parts;
  for (int i = 0; i < st.N; ++i) {
    for (int j = 0; j < st.sizes[static_cast<size_t>(i)]; ++j) {
      Polynomial part;
      part.add_term({{Variable::s(i + 1), 1}, {Variable::t(i + 1, j + 1), 1}},
                    make_rat(1));
      parts.push_back(part);
    }
  }
  parts.push_back(Polynomial::variable(z_var));
  Polynomial d = symbolic_density_general(pi, st.base, parts);
  if (pi.size() == 1) {
    // The trivial density sees every part; substituting the residual
    // scale's defining polynomial collapses it to the constant 1.
    Polynomial z_def = Polynomial::constant(make_rat(1));
    for (int i = 0; i < st.N; ++i) {
      for (int j = 0; j < st.sizes[static_cast<size_t>(i)]; ++j) {
        Polynomial part;
        part.add_term({{Variable::s(i + 1), 1}, {Variable::t(i + 1, j + 1), 1}},
                      make_rat(-1));
        z_def = z_def + part;
      }
    }
    Polynomial out;
    for (const auto& [mon, coeff] : d.terms()) {
      auto it = mon.find(z_var);
      if (it == mon.end()) {
        out.add_term(mon, coeff);
        continue;
      }
      Monomial rest = mon;
      const int e = it->second;
      rest.erase(z_var);
      Polynomial factor;
      factor.add_term(rest, coeff);
      for (int q = 0; q < e; ++q) factor = factor * z_def;
      out = out + factor;
    }
    if (out != Polynomial::constant(make_rat(1))) {
      throw std::logic_error("trivial density did not collapse to 1");
    }
    return out;
  }
  for (const auto& [mon, coeff] : d.terms()) {
    if (mon.count(z_var) > 0) {
      throw std::logic_error("density of " + pi.str() +
                             " touches the residual part");
    }
    if (monomial_degree_in(mon, Variable::Kind::S) != pi.size() ||
        monomial_degree_in(mon, Variable::Kind::T) != pi.size()) {
      throw std::logic_error("density of " + pi.str() +
                             " is not s/t homogeneous of degree " +
                             std::to_string(pi.size()));
    }
  }
  return d;
}

Rat pil_density(const Permutation& sigma, const PiLSpec& spec) {
  if (sigma.empty()) throw std::invalid_argument("density of empty pattern");
  if (sigma.size() > kDefaultDensityBound) {
    throw std::invalid_argument("pattern size exceeds density bound");
  }
  const LyndonStructure st = lyndon_structure(spec.k);
  const std::vector<Rat> scales = flat_scales(spec);
  Rat total = make_rat(0);
  for_each_matching_composition(
      st.base, sigma,
      [&](const std::vector<int>& parts, const std::vector<int>& counts) {
        Rat term(multinomial(counts));
        for (size_t a = 0; a < parts.size(); ++a) {
          term *= rat_pow(scales[static_cast<size_t>(parts[a])], counts[a]);
        }
        total += term;
      });
  total.canonicalize();
  return total;
}

namespace {

std::map<Variable, Rat> point_assignment(const PiLSpec& spec) {
  std::map<Variable, Rat> point;
  for (size_t i = 0; i < spec.s.size(); ++i) {
    point.emplace(Variable::s(static_cast<int>(i) + 1), spec.s[i]);
    for (size_t j = 0; j < spec.t[i].size(); ++j) {
      point.emplace(Variable::t(static_cast<int>(i) + 1,
                                static_cast<int>(j) + 1),
                    spec.t[i][j]);
    }
  }
  return point;
}

std::vector<std::vector<Polynomial>> symbolic_jacobian_polys(int k) {
  const LyndonStructure st = lyndon_structure(k);
  std::vector<std::vector<Polynomial>> out(static_cast<size_t>(st.N));
  for (int i = 0; i < st.N; ++i) {
    const Polynomial d = density_in_s_t(st.lyndon_list[static_cast<size_t>(i)], k);
    for (int j = 0; j < st.N; ++j) {
      out[static_cast<size_t>(i)].push_back(d.derivative(Variable::s(j + 1)));
    }
  }
  return out;
}

std::vector<std::vector<Rat>> numeric_jacobian(const PiLSpec& spec) {
  const LyndonStructure st = lyndon_structure(spec.k);
  const std::vector<Rat> scales = flat_scales(spec);
  const std::vector<int> blocks = part_blocks(st);
  std::vector<std::vector<Rat>> J(
      static_cast<size_t>(st.N),
      std::vector<Rat>(static_cast<size_t>(st.N), make_rat(0)));
  for (int i = 0; i < st.N; ++i) {
    const Permutation& pi = st.lyndon_list[static_cast<size_t>(i)];
    std::vector<int> block_degree(static_cast<size_t>(st.N), 0);
    for_each_matching_composition(
        st.base, pi,
        [&](const std::vector<int>& parts, const std::vector<int>& counts) {
          std::fill(block_degree.begin(), block_degree.end(), 0);
          Rat value(multinomial(counts));
          for (size_t a = 0; a < parts.size(); ++a) {
            const int blk = blocks[static_cast<size_t>(parts[a])];
            if (blk < 0) {
              throw std::logic_error("density of " + pi.str() +
                                     " touches the residual part");
            }
            block_degree[static_cast<size_t>(blk)] += counts[a];
            value *= rat_pow(scales[static_cast<size_t>(parts[a])], counts[a]);
          }
          for (int b = 0; b < st.N; ++b) {
            if (block_degree[static_cast<size_t>(b)] > 0) {
              J[static_cast<size_t>(i)][static_cast<size_t>(b)] +=
                  value * block_degree[static_cast<size_t>(b)];
            }
          }
        });
    // d/ds_b of a monomial is (its s_b-degree / s_b) times the monomial;
    // the degree factor is accumulated above, the division happens once.
    for (int b = 0; b < st.N; ++b) {
      Rat& cell = J[static_cast<size_t>(i)][static_cast<size_t>(b)];
      cell /= spec.s[static_cast<size_t>(b)];
      cell.canonicalize();
    }
  }
  return J;
}

}  // namespace

std::vector<std::vector<Rat>> jacobian_matrix(const PiLSpec& spec) {
  // Revalidate so a hand-built spec cannot bypass the invariants.
  const PiLSpec checked = make_pil_spec(spec.k, spec.s, spec.t);
  if (checked.k > kMaxSymbolicK) return numeric_jacobian(checked);
  const LyndonStructure st = lyndon_structure(checked.k);
  const auto polys = symbolic_jacobian_polys(checked.k);
  const auto point = point_assignment(checked);
  std::vector<std::vector<Rat>> J(
      static_cast<size_t>(st.N),
      std::vector<Rat>(static_cast<size_t>(st.N), make_rat(0)));
  for (int i = 0; i < st.N; ++i) {
    for (int j = 0; j < st.N; ++j) {
      J[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          polys[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate(point);
    }
  }
  return J;
}

Int determinant_integer(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
  }
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (int c = 0; c + 1 < n; ++c) {
    if (m[static_cast<size_t>(c)][static_cast<size_t>(c)] == 0) {
      int pivot = -1;
      for (int r = c + 1; r < n; ++r) {
        if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Int(0);
      std::swap(m[static_cast<size_t>(c)], m[static_cast<size_t>(pivot)]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int col = c + 1; col < n; ++col) {
        Int num = m[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                      m[static_cast<size_t>(c)][static_cast<size_t>(c)] -
                  m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                      m[static_cast<size_t>(c)][static_cast<size_t>(col)];
        // Bareiss guarantees exact divisibility by the previous pivot.
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m[static_cast<size_t>(r)][static_cast<size_t>(col)] = num;
      }
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
    prev = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
  }
  Int det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign > 0 ? det : Int(-det);
}

Rat jacobian_determinant(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
  }
  if (n == 0) return make_rat(1);
  std::vector<std::vector<Int>> mi(static_cast<size_t>(n),
                                   std::vector<Int>(static_cast<size_t>(n)));
  Int denom(1);
  for (int r = 0; r < n; ++r) {
    Int row_lcm(1);
    for (int c = 0; c < n; ++c) {
      Int d = m[static_cast<size_t>(r)][static_cast<size_t>(c)].get_den();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (int c = 0; c < n; ++c) {
      const Rat& v = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      mi[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          Int(v.get_num()) * (row_lcm / Int(v.get_den()));
    }
    denom *= row_lcm;
  }
  Rat det(determinant_integer(std::move(mi)), denom);
  det.canonicalize();
  return det;
}

Rat determinant_cofactor(const std::vector<std::vector<Rat>>& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
  }
  if (n == 0) return make_rat(1);
  if (n == 1) return m[0][0];
  Rat det = make_rat(0);
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<Rat>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (int cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[static_cast<size_t>(r)][static_cast<size_t>(cc)]);
      }
      minor.push_back(std::move(row));
    }
    Rat term = m[0][static_cast<size_t>(c)] * determinant_cofactor(minor);
    det += (c % 2 == 0) ? term : Rat(-term);
  }
  det.canonicalize();
  return det;
}

namespace {

std::uint64_t uniform_range(std::mt19937_64& rng, std::uint64_t lo,
                            std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = (UINT64_MAX / span) * span;
  while (true) {
    const std::uint64_t r = rng();
    if (r < limit) return lo + r % span;
  }
}

}  // namespace

JacobianCertificate find_witness(int k, int attempts, std::uint64_t seed) {
  if (attempts < 1) throw std::invalid_argument("need at least one attempt");
  const LyndonStructure st = lyndon_structure(k);
  std::mt19937_64 rng(seed);
  const std::uint64_t s_cap =
      std::max<std::uint64_t>(1, 63 / static_cast<std::uint64_t>(st.N));
  std::vector<std::vector<Polynomial>> polys;
  if (k <= kMaxSymbolicK) polys = symbolic_jacobian_polys(k);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Rat> s;
    std::vector<std::vector<Rat>> t;
    for (int i = 0; i < st.N; ++i) {
      s.push_back(make_rat(
          static_cast<long>(uniform_range(rng, 1, s_cap)), 64));
      const std::uint64_t t_cap = std::max<std::uint64_t>(
          1, 63 / static_cast<std::uint64_t>(st.sizes[static_cast<size_t>(i)]));
      std::vector<Rat> row;
      for (int j = 0; j < st.sizes[static_cast<size_t>(i)]; ++j) {
        row.push_back(make_rat(
            static_cast<long>(uniform_range(rng, 1, t_cap)), 64));
      }
      t.push_back(std::move(row));
    }
    const PiLSpec spec = make_pil_spec(k, s, t);
    std::vector<std::vector<Rat>> J;
    if (k <= kMaxSymbolicK) {
      const auto point = point_assignment(spec);
      J.assign(static_cast<size_t>(st.N),
               std::vector<Rat>(static_cast<size_t>(st.N), make_rat(0)));
      for (int i = 0; i < st.N; ++i) {
        for (int j = 0; j < st.N; ++j) {
          J[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              polys[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate(
                  point);
        }
      }
    } else {
      J = numeric_jacobian(spec);
    }
    for (int j = 0; j < st.N; ++j) {
      bool nonzero = false;
      for (int i = 0; i < st.N; ++i) {
        if (J[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
          nonzero = true;
          break;
        }
      }
      if (!nonzero) {
        throw std::logic_error("Jacobian column " + std::to_string(j + 1) +
                               " vanished identically at a sampled point");
      }
    }
    const Rat det = jacobian_determinant(J);
    if (det != 0) {
      return JacobianCertificate{k, spec, st.lyndon_list, J, det, seed};
    }
  }
  throw std::runtime_error("no non-zero Jacobian determinant in " +
                           std::to_string(attempts) + " attempts");
}

double certificate_float_determinant(const JacobianCertificate& cert) {
  const LyndonStructure st = lyndon_structure(cert.k);
  const PiLSpec& spec = cert.point;
  // Step size keeping every shifted point inside the valid parameter
  // region: an eighth of the slack in each binding constraint.
  Rat slack = residual_z(spec);
  Rat s_sum = make_rat(0);
  for (const Rat& v : spec.s) {
    slack = std::min(slack, v);
    s_sum += v;
  }
  Rat head = 1 - s_sum;
  head.canonicalize();
  slack = std::min(slack, head);
  Rat delta = slack / 8;
  delta.canonicalize();
  const double delta_d = rat_to_double(delta);

  const int N = st.N;
  std::vector<std::vector<double>> J(static_cast<size_t>(N),
                                     std::vector<double>(static_cast<size_t>(N)));
  for (int j = 0; j < N; ++j) {
    // Four shifted parameter points for the five-point stencil in s_j.
    std::vector<PiLSpec> shifted;
    for (int step : {2, 1, -1, -2}) {
      std::vector<Rat> s = spec.s;
      s[static_cast<size_t>(j)] += Rat(step) * delta;
      s[static_cast<size_t>(j)].canonicalize();
      shifted.push_back(make_pil_spec(cert.k, s, spec.t));
    }
    for (int i = 0; i < N; ++i) {
      const Permutation& pi = st.lyndon_list[static_cast<size_t>(i)];
      const double f_p2 = rat_to_double(pil_density(pi, shifted[0]));
      const double f_p1 = rat_to_double(pil_density(pi, shifted[1]));
      const double f_m1 = rat_to_double(pil_density(pi, shifted[2]));
      const double f_m2 = rat_to_double(pil_density(pi, shifted[3]));
      J[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (-f_p2 + 8.0 * f_p1 - 8.0 * f_m1 + f_m2) / (12.0 * delta_d);
    }
  }
  // Plain LU with partial pivoting.
  double det = 1.0;
  for (int c = 0; c < N; ++c) {
    int pivot = c;
    for (int r = c + 1; r < N; ++r) {
      if (std::fabs(J[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
          std::fabs(J[static_cast<size_t>(pivot)][static_cast<size_t>(c)])) {
        pivot = r;
      }
    }
    if (J[static_cast<size_t>(pivot)][static_cast<size_t>(c)] == 0.0) return 0.0;
    if (pivot != c) {
      std::swap(J[static_cast<size_t>(pivot)], J[static_cast<size_t>(c)]);
      det = -det;
    }
    det *= J[static_cast<size_t>(c)][static_cast<size_t>(c)];
    for (int r = c + 1; r < N; ++r) {
      const double f = J[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                       J[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int col = c; col < N; ++col) {
        J[static_cast<size_t>(r)][static_cast<size_t>(col)] -=
            f * J[static_cast<size_t>(c)][static_cast<size_t>(col)];
      }
    }
  }
  return det;
}

Rat measured_block_coefficient(int k, int i) {
  const LyndonStructure st = lyndon_structure(k);
  if (i < 0 || i >= st.N) throw std::invalid_argument("block index out of range");
  const Polynomial d = density_in_s_t(st.lyndon_list[static_cast<size_t>(i)], k);
  Monomial mon{{Variable::s(i + 1), st.sizes[static_cast<size_t>(i)]}};
  for (int j = 0; j < st.sizes[static_cast<size_t>(i)]; ++j) {
    mon.emplace(Variable::t(i + 1, j + 1), 1);
  }
  return d.coefficient(mon);
}

Rat det_monomial_coefficient(int k) {
  if (k == 2) {
    const Polynomial d = density_in_s_t(parse_permutation("21"), 2);
    const Polynomial entry = d.derivative(Variable::s(1));
    // N = 1: the determinant is the single entry; the target monomial is
    // s_1^{n_1 - 1} t_{1,1} t_{1,2}.
    Monomial target{{Variable::s(1), 1},
                    {Variable::t(1, 1), 1},
                    {Variable::t(1, 2), 1}};
    const Rat coeff = entry.coefficient(target);
    if (coeff == 0) throw std::logic_error("vanishing determinant monomial");
    return coeff;
  }
  if (k != 3) {
    throw std::invalid_argument("determinant monomial extraction supports k=2,3");
  }
  const LyndonStructure st = lyndon_structure(k);
  const int N = st.N;
  // Bit index of t_{i,j} among the 14 t-variables.
  std::vector<int> offset(static_cast<size_t>(N) + 1, 0);
  for (int i = 0; i < N; ++i) {
    offset[static_cast<size_t>(i + 1)] =
        offset[static_cast<size_t>(i)] + st.sizes[static_cast<size_t>(i)];
  }
  const int bits = offset[static_cast<size_t>(N)];
  // Every entry evaluated at s = 1, t in {0,1}^bits is an integer: sum of
  // the integer coefficients of the monomials whose t-support survives.
  struct MaskTerm {
    std::uint32_t mask;
    Int coeff;
  };
  std::vector<std::vector<std::vector<MaskTerm>>> compiled(
      static_cast<size_t>(N),
      std::vector<std::vector<MaskTerm>>(static_cast<size_t>(N)));
  for (int i = 0; i < N; ++i) {
    const Polynomial d =
        density_in_s_t(st.lyndon_list[static_cast<size_t>(i)], k);
    for (int j = 0; j < N; ++j) {
      const Polynomial entry = d.derivative(Variable::s(j + 1));
      std::map<std::uint32_t, Int> by_mask;
      for (const auto& [mon, coeff] : entry.terms()) {
        if (coeff.get_den() != 1) {
          throw std::logic_error("non-integer density coefficient");
        }
        std::uint32_t mask = 0;
        for (const auto& [v, e] : mon) {
          if (v.kind == Variable::Kind::T) {
            mask |= std::uint32_t{1}
                    << (offset[static_cast<size_t>(v.a - 1)] + v.b - 1);
          }
        }
        by_mask[mask] += Int(coeff.get_num());
      }
      auto& list = compiled[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (auto& [mask, c] : by_mask) {
        if (c != 0) list.push_back({mask, c});
      }
    }
  }
  // det(J) is t-homogeneous of degree 14 with 14 t-variables, so its only
  // full-support monomial is the squarefree one, and the s-profile of that
  // monomial is forced to prod s_i^{n_i - 1}. The alternating sum over
  // 0/1 t-points at s = 1 therefore isolates exactly the target
  // coefficient, with no assumption about which products survive.
  Int acc(0);
  const std::uint32_t full = (std::uint32_t{1} << bits) - 1;
  std::vector<std::vector<Int>> mat(static_cast<size_t>(N),
                                    std::vector<Int>(static_cast<size_t>(N)));
  for (std::uint32_t T = 0; T <= full; ++T) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        Int cell(0);
        for (const MaskTerm& term :
             compiled[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
          if ((term.mask & ~T) == 0) cell += term.coeff;
        }
        mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = cell;
      }
    }
    const Int det = determinant_integer(mat);
    const int missing = bits - std::popcount(T);
    if (missing % 2 == 0) {
      acc += det;
    } else {
      acc -= det;
    }
  }
  if (acc == 0) throw std::logic_error("vanishing determinant monomial");
  Rat out(acc);
  out.canonicalize();
  return out;
}

bool verify_lemma_lyndon(const std::vector<Permutation>& perms,
                         int max_total) {
  if (perms.empty()) {
    throw std::invalid_argument("interval lemma check needs permutations");
  }
  int total = 0;
  for (size_t i = 0; i < perms.size(); ++i) {
    if (!is_lyndon_permutation(perms[i])) {
      throw std::invalid_argument(perms[i].str() + " is not Lyndon");
    }
    if (i > 0 && compare_L(perms[i - 1], perms[i]) <= 0) {
      throw std::invalid_argument("tuple must strictly decrease under <_L");
    }
    total += perms[i].size();
  }
  if (total > max_total) {
    throw std::invalid_argument("tuple total size exceeds bound");
  }
  const Permutation base = direct_sum(perms);
  std::vector<int> all(static_cast<size_t>(total));
  std::iota(all.begin(), all.end(), 1);
  long long solutions = 0;
  bool all_canonical = true;
  std::vector<int> starts(perms.size());
  int off = 0;
  for (size_t i = 0; i < perms.size(); ++i) {
    starts[i] = off;
    off += perms[i].size();
  }
  std::vector<std::vector<int>> chosen(perms.size());
  auto rec = [&](auto&& self, size_t idx, const std::vector<int>& avail) -> void {
    if (idx == perms.size()) {
      ++solutions;
      for (size_t i = 0; i < perms.size(); ++i) {
        for (size_t j = 0; j < chosen[i].size(); ++j) {
          if (chosen[i][j] != starts[i] + static_cast<int>(j) + 1) {
            all_canonical = false;
            return;
          }
        }
      }
      return;
    }
    for_each_choice(avail, perms[idx].size(),
                    [&](const std::vector<int>& sub, const std::vector<int>& rest) {
                      if (pattern_at(base, sub) != perms[idx]) return;
                      chosen[idx] = sub;
                      self(self, idx + 1, rest);
                    });
  };
  rec(rec, 0, all);
  return solutions == 1 && all_canonical;
}

}  // namespace lynperm
