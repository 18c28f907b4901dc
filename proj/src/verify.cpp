#include "lynperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lynperm/flag.hpp"
#include "lynperm/independence.hpp"
#include "lynperm/lyndon.hpp"
#include "lynperm/reduction.hpp"

namespace lynperm {

namespace {

template <typename Fn>
CheckResult timed(std::string name, Fn&& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

Permutation perm(const std::string& text) { return parse_permutation(text); }

std::string join_perms(const std::vector<Permutation>& ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ",";
    out += ps[i].str();
  }
  return out;
}

}  // namespace

BlowupPermuton random_blowup(std::mt19937_64& rng, int max_base, int denom) {
  const int n =
      1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_base));
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(word[static_cast<size_t>(i)], word[static_cast<size_t>(j)]);
  }
  std::vector<int> cuts{0, denom};
  for (int i = 0; i + 1 < n; ++i) {
    cuts.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(denom + 1)));
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rat> scales;
  for (int i = 0; i + 1 < static_cast<int>(cuts.size()); ++i) {
    scales.push_back(make_rat(cuts[static_cast<size_t>(i + 1)] -
                                  cuts[static_cast<size_t>(i)],
                              denom));
  }
  return make_blowup(Permutation(word), scales);
}

CheckResult check_lyndon_enumeration() {
  return timed("lyndon-enumeration", [](CheckResult& r) {
    const auto l2 = enumerate_lyndon_permutations(2);
    const auto l3 = enumerate_lyndon_permutations(3);
    const auto l3t = enumerate_lyndon_permutations(3, true);
    const std::vector<Permutation> want3{perm("321"), perm("312"), perm("231"),
                                         perm("21"), perm("132")};
    std::vector<Permutation> want3t = want3;
    want3t.push_back(perm("1"));
    r.pass = l2 == std::vector<Permutation>{perm("21")} && l3 == want3 &&
             l3t == want3t;
    r.detail = "P^L_3 descending: " + join_perms(l3t);
  });
}

CheckResult check_series_counts() {
  return timed("series-counts", [](CheckResult& r) {
    const std::vector<Int> ell = lyndon_counts_from_series(6);
    std::vector<Int> direct;
    for (int n = 1; n <= 6; ++n) {
      long count = 0;
      for (const Permutation& p : enumerate_permutations(n)) {
        if (is_lyndon_permutation(p)) ++count;
      }
      direct.emplace_back(count);
    }
    r.pass = ell == direct && ell[0] == 1 && ell[1] == 1 && ell[2] == 4;
    std::string values;
    for (const Int& v : ell) values += (values.empty() ? "" : ",") + int_to_string(v);
    r.detail = "l_1..l_6 = " + values + " (series and direct enumeration agree)";
  });
}

CheckResult check_flag_example() {
  return timed("flag-example", [](CheckResult& r) {
    const PermSum prod = flag_product({perm("12"), perm("1")});
    PermSum want;
    want.add(perm("123"), make_rat(1));
    want.add(perm("132"), make_rat(2, 3));
    want.add(perm("231"), make_rat(1, 3));
    want.add(perm("213"), make_rat(2, 3));
    want.add(perm("312"), make_rat(1, 3));
    r.pass = prod == want;
    r.detail = "12 x 1 = " + prod.str();
  });
}

CheckResult check_product_identity(std::uint64_t seed) {
  return timed("product-identity", [seed](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::vector<BlowupPermuton> permutons;
    for (int i = 0; i < 20; ++i) permutons.push_back(random_blowup(rng, 5, 64));
    // One density table per permuton; every pattern of size <= 5 shows up
    // in some product below.
    std::vector<std::map<Permutation, Rat>> tables(permutons.size());
    for (size_t pi = 0; pi < permutons.size(); ++pi) {
      for (int n = 1; n <= 5; ++n) {
        for (const Permutation& sigma : enumerate_permutations(n)) {
          tables[pi].emplace(sigma, exact_density(sigma, permutons[pi]));
        }
      }
    }
    std::vector<Permutation> pool;
    for (int n = 1; n <= 5; ++n) {
      for (Permutation& p : enumerate_permutations(n)) pool.push_back(std::move(p));
    }
    long long identities = 0;
    bool ok = true;
    std::string bad;
    std::vector<Permutation> multiset;
    auto visit = [&]() {
      const PermSum prod = flag_product(multiset);
      for (size_t pi = 0; pi < permutons.size(); ++pi) {
        Rat rhs = make_rat(1);
        for (const Permutation& f : multiset) rhs *= tables[pi].at(f);
        rhs.canonicalize();
        Rat lhs = make_rat(0);
        if (pi == 0) {
          // Exercise the public op once per multiset; cached tables cover
          // the other permutons.
          lhs = density_of_sum(prod, permutons[pi]);
        } else {
          for (const auto& [sigma, c] : prod.terms) lhs += c * tables[pi].at(sigma);
          lhs.canonicalize();
        }
        ++identities;
        if (lhs != rhs) {
          ok = false;
          if (bad.empty()) bad = join_perms(multiset);
        }
      }
    };
    auto rec = [&](auto&& self, size_t first, int budget) -> void {
      for (size_t i = first; i < pool.size(); ++i) {
        if (pool[i].size() > budget) continue;
        multiset.push_back(pool[i]);
        visit();
        self(self, i, budget - pool[i].size());
        multiset.pop_back();
      }
    };
    rec(rec, 0, 5);
    r.pass = ok;
    r.detail = ok ? std::to_string(identities) + " product identities hold exactly"
                  : "first failing multiset: " + bad;
  });
}

CheckResult check_shuffle_flag_lemmas() {
  return timed("shuffle-flag-lemmas", [](CheckResult& r) {
    const std::vector<Permutation> sigma5{perm("1"), perm("21"), perm("231"),
                                          perm("312"), perm("321")};
    std::vector<BlockWord> lyndon_words;
    std::vector<Permutation> letters;
    auto grow = [&](auto&& self) -> void {
      if (!letters.empty()) {
        BlockWord w(letters);
        if (is_lyndon_word(w)) lyndon_words.push_back(std::move(w));
      }
      if (static_cast<int>(letters.size()) == 5) return;
      for (const Permutation& a : sigma5) {
        letters.push_back(a);
        self(self);
        letters.pop_back();
      }
    };
    grow(grow);
    std::sort(lyndon_words.begin(), lyndon_words.end(),
              [](const BlockWord& a, const BlockWord& b) {
                return word_compare(a, b) > 0;
              });
    bool ok = true;
    long long lists = 0;
    std::string bad;
    std::vector<BlockWord> list;
    auto visit = [&]() {
      ++lists;
      const auto [top, coeff] = max_shuffle_constituent(list);
      BlockWord concat;
      for (const BlockWord& w : list) {
        concat.letters.insert(concat.letters.end(), w.letters.begin(),
                              w.letters.end());
      }
      bool good = top == concat;
      bool distinct = true;
      for (size_t i = 0; i + 1 < list.size() && distinct; ++i) {
        for (size_t j = i + 1; j < list.size(); ++j) {
          if (list[i] == list[j]) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct && coeff != 1) good = false;
      if (!good && bad.empty()) bad = concat.str();
      ok = ok && good;
    };
    auto rec = [&](auto&& self, size_t first, int budget) -> void {
      for (size_t i = first; i < lyndon_words.size(); ++i) {
        if (lyndon_words[i].length() > budget) continue;
        list.push_back(lyndon_words[i]);
        visit();
        self(self, i, budget - lyndon_words[i].length());
        list.pop_back();
      }
    };
    rec(rec, 0, 5);
    long long perms_checked = 0;
    for (int n = 1; n <= 5 && ok; ++n) {
      for (const Permutation& p : enumerate_permutations(n)) {
        if (!constituents_violating_flag_lemma(p).empty()) {
          ok = false;
          bad = p.str();
          break;
        }
        ++perms_checked;
      }
    }
    r.pass = ok;
    r.detail = ok ? std::to_string(lists) + " shuffle maxima and " +
                        std::to_string(perms_checked) +
                        " flag-lemma constituent sets verified"
                  : "violation at " + bad;
  });
}

CheckResult check_reduction_round_trip(std::uint64_t seed) {
  return timed("reduction-round-trip", [seed](CheckResult& r) {
    const ReductionTable table = build_reduction_table(4);
    Polynomial p12 = Polynomial::constant(make_rat(1));
    p12.add_term({{Variable::x(perm("21")), 1}}, make_rat(-1));
    Polynomial p213;
    p213.add_term({{Variable::x(perm("21")), 1}}, make_rat(3));
    p213.add_term({{Variable::x(perm("132")), 1}}, make_rat(-1));
    p213.add_term({{Variable::x(perm("231")), 1}}, make_rat(-2));
    p213.add_term({{Variable::x(perm("312")), 1}}, make_rat(-2));
    p213.add_term({{Variable::x(perm("321")), 1}}, make_rat(-3));
    bool ok = table.entries.at(perm("12")) == p12 &&
              table.entries.at(perm("213")) == p213;
    for (const Permutation& sigma : enumerate_lyndon_permutations(4)) {
      ok = ok && table.entries.at(sigma) ==
                     Polynomial::variable(Variable::x(sigma));
    }
    std::mt19937_64 rng(seed);
    long long round_trips = 0;
    std::string bad;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const BlowupPermuton P = random_blowup(rng, 5, 64);
      const auto point = lyndon_density_point(4, P);
      for (const auto& [pi, poly] : table.entries) {
        if (evaluate_polynomial(poly, point) != exact_density(pi, P)) {
          ok = false;
          bad = pi.str() + " on base " + P.base.str();
          break;
        }
        ++round_trips;
      }
    }
    r.pass = ok;
    r.detail = ok ? std::to_string(round_trips) +
                        " exact round-trips over random blow-ups"
                  : "round-trip failed for " + bad;
  });
}

CheckResult check_interval_lemma() {
  return timed("interval-lemma", [](CheckResult& r) {
    const std::vector<Permutation> pool =
        enumerate_lyndon_permutations(7, true);
    bool ok = true;
    long long tuples = 0;
    std::string bad;
    std::vector<Permutation> tuple;
    auto rec = [&](auto&& self, size_t first, int budget) -> void {
      for (size_t i = first; i < pool.size(); ++i) {
        if (pool[i].size() > budget) continue;
        tuple.push_back(pool[i]);
        ++tuples;
        if (!verify_lemma_lyndon(tuple)) {
          ok = false;
          if (bad.empty()) bad = join_perms(tuple);
        }
        self(self, i + 1, budget - pool[i].size());
        tuple.pop_back();
      }
    };
    rec(rec, 0, 7);
    r.pass = ok;
    r.detail = ok ? std::to_string(tuples) +
                        " decreasing tuples have unique interval occurrences"
                  : "non-canonical occurrence for " + bad;
  });
}

CheckResult check_jacobian_certificates(std::uint64_t seed) {
  return timed("jacobian-certificates", [seed](CheckResult& r) {
    std::ostringstream detail;
    bool ok = true;

    Polynomial want_density;
    want_density.add_term({{Variable::s(1), 2},
                           {Variable::t(1, 1), 1},
                           {Variable::t(1, 2), 1}},
                          make_rat(2));
    ok = ok && density_in_s_t(perm("21"), 2) == want_density;

    const PiLSpec spec2 = make_pil_spec(
        2, {make_rat(1, 2)}, {{make_rat(1, 4), make_rat(1, 4)}});
    const auto J2 = jacobian_matrix(spec2);
    ok = ok && J2.size() == 1 && J2[0][0] == make_rat(1, 8);
    ok = ok && jacobian_determinant(J2) == make_rat(1, 8);
    const Rat mono2 = det_monomial_coefficient(2);
    ok = ok && mono2 == 4;
    detail << "k=2: det at (1/2,1/4,1/4) = "
           << rat_to_string(jacobian_determinant(J2))
           << ", monomial coefficient " << rat_to_string(mono2);

    const JacobianCertificate cert2 = find_witness(2, 5, seed);
    const JacobianCertificate cert2_again = find_witness(2, 5, seed);
    ok = ok && cert2.determinant != 0 &&
         cert2.determinant == cert2_again.determinant &&
         cert2.point.s == cert2_again.point.s;
    const double float2 = certificate_float_determinant(cert2);
    const double rat2 = rat_to_double(cert2.determinant);
    ok = ok && std::fabs(float2 - rat2) <= 1e-6 * std::fabs(rat2);

    const JacobianCertificate cert3 = find_witness(3, 10, seed);
    ok = ok && cert3.determinant != 0;
    const double float3 = certificate_float_determinant(cert3);
    const double rat3 = rat_to_double(cert3.determinant);
    ok = ok && std::fabs(float3 - rat3) <= 1e-6 * std::fabs(rat3) &&
         (float3 > 0) == (rat3 > 0);
    detail << "; k=3: witness det = " << rat_to_string(cert3.determinant)
           << " (float recheck " << float3 << ")";

    const Rat mono3 = det_monomial_coefficient(3);
    ok = ok && mono3 != 0;
    const LyndonStructure st3 = lyndon_structure(3);
    Rat predicted = make_rat(1);
    for (int i = 0; i < st3.N; ++i) {
      predicted *= Rat(st3.sizes[static_cast<size_t>(i)]) *
                   measured_block_coefficient(3, i);
    }
    predicted.canonicalize();
    ok = ok && mono3 == predicted;
    detail << "; monomial coefficient " << rat_to_string(mono3)
           << " matches the per-block product " << rat_to_string(predicted);

    r.pass = ok;
    r.detail = detail.str();
  });
}

CheckResult check_monte_carlo(std::uint64_t seed) {
  return timed("monte-carlo", [seed](CheckResult& r) {
    struct Pair {
      Permutation sigma;
      BlowupPermuton P;
    };
    std::vector<Pair> battery;
    auto add = [&](const std::string& sigma, const std::string& base,
                   std::vector<Rat> scales) {
      battery.push_back(
          {perm(sigma), make_blowup(perm(base), std::move(scales))});
    };
    add("1", "1", {make_rat(1)});
    add("21", "21", {make_rat(1, 2), make_rat(1, 2)});
    add("12", "21", {make_rat(1, 2), make_rat(1, 2)});
    add("321", "21", {make_rat(1, 2), make_rat(1, 2)});
    add("12", "12", {make_rat(1, 3), make_rat(2, 3)});
    add("231", "231", {make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)});
    add("132", "132", {make_rat(1, 2), make_rat(1, 4), make_rat(1, 4)});
    add("21", "231", {make_rat(1, 6), make_rat(1, 3), make_rat(1, 2)});
    add("312", "312", {make_rat(1, 4), make_rat(1, 2), make_rat(1, 4)});
    add("213", "21", {make_rat(3, 4), make_rat(1, 4)});
    const long long trials = 100000;
    int failures = 0;
    long long ties = 0;
    std::ostringstream detail;
    for (size_t i = 0; i < battery.size(); ++i) {
      const Rat exact = exact_density(battery[i].sigma, battery[i].P);
      const DensityEstimate est = estimate_density(
          battery[i].sigma, battery[i].P, trials,
          seed + static_cast<std::uint64_t>(i));
      ties += est.tie_redraws;
      const double target = rat_to_double(exact);
      bool good;
      if (est.standard_error == 0.0) {
        good = est.mean == target;
      } else {
        good = std::fabs(est.mean - target) <= 4.0 * est.standard_error;
      }
      if (!good) {
        ++failures;
        detail << " [outlier " << battery[i].sigma.str() << ": "
               << est.mean << " vs " << target << "]";
      }
    }
    r.pass = failures <= 1;  // documented flake budget: one pair per run
    detail << (r.pass ? "" : " exceeded flake budget;") << " " << failures
           << "/10 outside 4 standard errors at " << trials
           << " trials, tie redraws " << ties;
    r.detail = detail.str();
  });
}

CheckResult check_homogeneity() {
  return timed("homogeneity", [](CheckResult& r) {
    bool ok = true;
    long long monomials = 0;
    for (int k = 2; k <= 3; ++k) {
      const LyndonStructure st = lyndon_structure(k);
      for (int i = 0; i < st.N; ++i) {
        const Polynomial d =
            density_in_s_t(st.lyndon_list[static_cast<size_t>(i)], k);
        const int n_i = st.sizes[static_cast<size_t>(i)];
        for (const auto& [mon, coeff] : d.terms()) {
          ++monomials;
          if (monomial_degree_in(mon, Variable::Kind::S) != n_i ||
              monomial_degree_in(mon, Variable::Kind::T) != n_i) {
            ok = false;
          }
          // s-exponent of block a must equal the block's t-degree; this
          // coupling is what pins the s-profile of the determinant's
          // squarefree-t monomial.
          for (int a = 1; a <= st.N; ++a) {
            int s_exp = 0;
            int t_deg = 0;
            for (const auto& [v, e] : mon) {
              if (v.kind == Variable::Kind::S && v.a == a) s_exp += e;
              if (v.kind == Variable::Kind::T && v.a == a) t_deg += e;
            }
            if (s_exp != t_deg) ok = false;
          }
        }
      }
    }
    const Polynomial d21 = density_in_s_t(perm("21"), 2);
    const Polynomial det2 = d21.derivative(Variable::s(1));
    ok = ok && det2.total_degree() == 2 * 2 - 1;
    r.pass = ok;
    r.detail = std::to_string(monomials) +
               " monomials s/t-homogeneous with per-block coupling; k=2 "
               "determinant degree " +
               std::to_string(det2.total_degree());
  });
}

CheckResult check_k4_witness(std::uint64_t seed) {
  return timed("k4-witness", [seed](CheckResult& r) {
    const JacobianCertificate cert = find_witness(4, 3, seed);
    r.pass = cert.determinant != 0;
    std::ostringstream detail;
    detail << "k=4 (N=22, base size " << lyndon_structure(4).base.size()
           << ") exact determinant is nonzero, about "
           << rat_to_double(cert.determinant);
    r.detail = detail.str();
  });
}

std::vector<CheckResult> run_checks(const std::string& level,
                                    std::uint64_t seed) {
  if (level != "desk" && level != "deep") {
    throw std::invalid_argument("verification level must be desk or deep");
  }
  std::vector<CheckResult> out;
  out.push_back(check_lyndon_enumeration());
  out.push_back(check_series_counts());
  out.push_back(check_flag_example());
  out.push_back(check_product_identity(seed));
  out.push_back(check_shuffle_flag_lemmas());
  out.push_back(check_reduction_round_trip(seed));
  out.push_back(check_interval_lemma());
  out.push_back(check_jacobian_certificates(seed));
  out.push_back(check_monte_carlo(seed));
  out.push_back(check_homogeneity());
  if (level == "deep") out.push_back(check_k4_witness(seed));
  return out;
}

}  // namespace lynperm
