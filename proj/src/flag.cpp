#include "lynperm/flag.hpp"

#include <stdexcept>

#include "lynperm/lyndon.hpp"
#include "lynperm/subsets.hpp"

namespace lynperm {

void PermSum::add(const Permutation& p, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Rat PermSum::coefficient(const Permutation& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? make_rat(0) : it->second;
}

Rat PermSum::total_mass() const {
  Rat total = make_rat(0);
  for (const auto& [p, c] : terms) total += c;
  total.canonicalize();
  return total;
}

std::string PermSum::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms) {
    const bool negative = c < 0;
    Rat abs_c = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (abs_c != 1) out += rat_to_string(abs_c) + "*";
    out += p.str();
  }
  return out;
}

namespace {

void check_flag_args(const std::vector<Permutation>& parts, int max_total) {
  if (parts.empty()) {
    throw std::invalid_argument("flag product of an empty list");
  }
  int total = 0;
  for (const Permutation& p : parts) {
    if (p.empty()) {
      throw std::invalid_argument("flag product with an empty permutation");
    }
    total += p.size();
  }
  if (total > max_total) {
    throw std::invalid_argument("flag product total size " +
                                std::to_string(total) + " exceeds bound " +
                                std::to_string(max_total));
  }
}

/// Writes pattern p into word: the i-th listed position gets the value of
/// rank p(i) among the listed values. Positions and values are sorted.
void place_pattern(const Permutation& p, const std::vector<int>& positions,
                   const std::vector<int>& values, std::vector<int>& word) {
  for (int i = 1; i <= p.size(); ++i) {
    word[static_cast<size_t>(positions[static_cast<size_t>(i - 1)] - 1)] =
        values[static_cast<size_t>(p.at(i) - 1)];
  }
}

PermSum binary_flag(const PermSum& acc, const Permutation& b) {
  PermSum out;
  for (const auto& [a, c] : acc.terms) {
    const int k1 = a.size();
    const int total = k1 + b.size();
    Rat unit = c / Rat(binomial(total, k1));
    unit.canonicalize();
    std::vector<int> all(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) all[static_cast<size_t>(i)] = i + 1;
    std::vector<int> word(static_cast<size_t>(total));
    for_each_choice(all, k1, [&](const std::vector<int>& pos_a,
                                 const std::vector<int>& pos_b) {
      for_each_choice(all, k1, [&](const std::vector<int>& val_a,
                                   const std::vector<int>& val_b) {
        place_pattern(a, pos_a, val_a, word);
        place_pattern(b, pos_b, val_b, word);
        out.add(Permutation(word), unit);
      });
    });
  }
  return out;
}

}  // namespace

PermSum flag_product(const std::vector<Permutation>& parts, int max_total) {
  check_flag_args(parts, max_total);
  PermSum acc;
  acc.add(parts.front(), make_rat(1));
  for (size_t i = 1; i < parts.size(); ++i) {
    acc = binary_flag(acc, parts[i]);
  }
  return acc;
}

PermSum flag_product_direct(const std::vector<Permutation>& parts,
                            int max_total) {
  check_flag_args(parts, max_total);
  int total = 0;
  std::vector<int> sizes;
  for (const Permutation& p : parts) {
    sizes.push_back(p.size());
    total += p.size();
  }
  std::vector<int> all(static_cast<size_t>(total));
  for (int i = 0; i < total; ++i) all[static_cast<size_t>(i)] = i + 1;
  std::map<Permutation, long long> counts;
  std::vector<int> word(static_cast<size_t>(total));
  auto rec = [&](auto&& self, size_t i, const std::vector<int>& avail_pos,
                 const std::vector<int>& avail_val) -> void {
    if (i == parts.size()) {
      ++counts[Permutation(word)];
      return;
    }
    const int k = parts[i].size();
    for_each_choice(avail_pos, k, [&](const std::vector<int>& pos,
                                      const std::vector<int>& pos_rest) {
      for_each_choice(avail_val, k, [&](const std::vector<int>& val,
                                        const std::vector<int>& val_rest) {
        place_pattern(parts[i], pos, val, word);
        self(self, i + 1, pos_rest, val_rest);
      });
    });
  };
  rec(rec, 0, all, all);
  Rat norm(1, multinomial(sizes));
  norm.canonicalize();
  PermSum out;
  for (const auto& [p, c] : counts) {
    Rat coeff = Rat(Int(static_cast<long>(c))) * norm;
    coeff.canonicalize();
    out.add(p, coeff);
  }
  return out;
}

std::vector<Permutation> constituents_violating_flag_lemma(
    const Permutation& pi, int max_total) {
  if (pi.empty()) {
    throw std::invalid_argument("flag lemma check on the empty permutation");
  }
  const std::vector<Permutation> factors = lyndon_factor_permutation(pi);
  const PermSum prod = flag_product(factors, max_total);
  const BlockWord word_pi = block_word_of(pi);
  std::vector<Permutation> violations;
  for (const auto& [sigma, c] : prod.terms) {
    if (sigma == pi) continue;
    const BlockWord word_sigma = block_word_of(sigma);
    if (word_sigma.length() < word_pi.length()) continue;
    if (word_sigma.length() == word_pi.length() &&
        word_compare(word_sigma, word_pi) < 0) {
      continue;
    }
    violations.push_back(sigma);
  }
  return violations;
}

Rat density_of_sum(const PermSum& s, const BlowupPermuton& P, int max_size) {
  Rat total = make_rat(0);
  for (const auto& [sigma, c] : s.terms) {
    total += c * exact_density(sigma, P, max_size);
  }
  total.canonicalize();
  return total;
}

}  // namespace lynperm
