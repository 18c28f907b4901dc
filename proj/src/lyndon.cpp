#include "lynperm/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace lynperm {

BlockWord::BlockWord(std::vector<Permutation> ls) : letters(std::move(ls)) {
  for (const Permutation& l : letters) {
    if (!is_indecomposable(l)) {
      throw std::invalid_argument("block word letter is not indecomposable: " +
                                  l.str());
    }
  }
}

int BlockWord::weight() const {
  int w = 0;
  for (const Permutation& l : letters) w += l.size();
  return w;
}

std::string BlockWord::str() const {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += '|';
    out += letters[i].str();
  }
  return out;
}

std::strong_ordering alphabet_compare(const Permutation& a,
                                      const Permutation& b) {
  if (!is_indecomposable(a) || !is_indecomposable(b)) {
    throw std::invalid_argument("alphabet_compare needs indecomposable letters");
  }
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.word() <=> b.word();
}

std::strong_ordering word_compare(const BlockWord& a, const BlockWord& b) {
  const size_t n = std::min(a.letters.size(), b.letters.size());
  for (size_t i = 0; i < n; ++i) {
    auto c = alphabet_compare(a.letters[i], b.letters[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return a.letters.size() <=> b.letters.size();
}

void WordSum::add(const BlockWord& w, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

long long WordSum::total_mass() const {
  long long m = 0;
  for (const auto& [w, c] : terms) m += c;
  return m;
}

BlockWord parse_block_word(const std::string& text) {
  std::vector<Permutation> letters;
  size_t start = 0;
  while (start <= text.size()) {
    size_t bar = text.find('|', start);
    if (bar == std::string::npos) bar = text.size();
    letters.push_back(parse_permutation(text.substr(start, bar - start)));
    start = bar + 1;
    if (bar == text.size()) break;
  }
  return BlockWord(std::move(letters));
}

BlockWord block_word_of(const Permutation& p) {
  if (p.empty()) {
    throw std::invalid_argument("block word of the empty permutation");
  }
  return BlockWord(decompose_blocks(p).blocks);
}

bool is_lyndon_word(const BlockWord& w) {
  if (w.letters.empty()) {
    throw std::invalid_argument("Lyndon predicate on the empty word");
  }
  for (size_t s = 1; s < w.letters.size(); ++s) {
    BlockWord suffix;
    suffix.letters.assign(w.letters.begin() + static_cast<long>(s),
                          w.letters.end());
    if (word_compare(w, suffix) >= 0) return false;
  }
  return true;
}

std::vector<BlockWord> cfl_factorize(const BlockWord& w) {
  if (w.letters.empty()) {
    throw std::invalid_argument("CFL factorization of the empty word");
  }
  const std::vector<Permutation>& a = w.letters;
  const size_t n = a.size();
  std::vector<BlockWord> out;
  size_t i = 0;
  while (i < n) {
    size_t j = i + 1;
    size_t k = i;
    while (j < n && alphabet_compare(a[k], a[j]) <= 0) {
      if (alphabet_compare(a[k], a[j]) < 0) {
        k = i;
      } else {
        ++k;
      }
      ++j;
    }
    const size_t len = j - k;  // length of the Lyndon factor repeated below
    while (i <= k) {
      BlockWord f;
      f.letters.assign(a.begin() + static_cast<long>(i),
                       a.begin() + static_cast<long>(i + len));
      out.push_back(std::move(f));
      i += len;
    }
  }
  return out;
}

std::strong_ordering compare_L(const Permutation& p, const Permutation& q) {
  return word_compare(block_word_of(p), block_word_of(q));
}

bool is_lyndon_permutation(const Permutation& p) {
  return is_lyndon_word(block_word_of(p));
}

std::vector<Permutation> lyndon_factor_permutation(const Permutation& p) {
  std::vector<Permutation> out;
  for (const BlockWord& f : cfl_factorize(block_word_of(p))) {
    out.push_back(direct_sum(f.letters));
  }
  return out;
}

std::vector<Permutation> enumerate_lyndon_permutations(int k,
                                                       bool include_trivial,
                                                       int max_size) {
  if (k < 1 || k > max_size) {
    throw std::invalid_argument("enumerate_lyndon_permutations: k out of range");
  }
  std::vector<Permutation> out;
  for (int n = include_trivial ? 1 : 2; n <= k; ++n) {
    for (const Permutation& p : enumerate_permutations(n, max_size)) {
      if (is_lyndon_permutation(p)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const Permutation& a,
                                       const Permutation& b) {
    return compare_L(a, b) > 0;
  });
  return out;
}

std::vector<Int> lyndon_counts_from_series(int kmax, int max_kmax) {
  if (kmax < 1 || kmax > max_kmax) {
    throw std::invalid_argument("lyndon_counts_from_series: kmax out of range");
  }
  // prod, truncated to degree kmax, of (1-x^n)^(-l_n) over the n handled so
  // far. Matching the x^m coefficient against m! forces l_m = m! - prod[m],
  // since (1-x^m)^(-l) = 1 + l x^m + O(x^(2m)).
  std::vector<Int> prod(static_cast<size_t>(kmax) + 1, Int(0));
  prod[0] = 1;
  std::vector<Int> ell;
  for (int m = 1; m <= kmax; ++m) {
    Int l = factorial(m) - prod[static_cast<size_t>(m)];
    ell.push_back(l);
    // Multiply prod by (1-x^m)^(-l) = sum_j C(l+j-1, j) x^(m j).
    std::vector<Int> next(prod);
    Int coeff(1);
    for (int j = 1; m * j <= kmax; ++j) {
      // C(l+j-1, j) built up incrementally: multiply by (l+j-1), divide by j.
      coeff *= l + (j - 1);
      coeff /= j;
      for (int d = 0; d + m * j <= kmax; ++d) {
        next[static_cast<size_t>(d + m * j)] += coeff * prod[static_cast<size_t>(d)];
      }
    }
    prod = std::move(next);
  }
  return ell;
}

namespace {

WordSum shuffle_pair(const WordSum& acc, const BlockWord& w) {
  WordSum out;
  const int m = w.length();
  for (const auto& [u, cu] : acc.terms) {
    const int n = u.length();
    const int total = n + m;
    // Choose which of the total positions carry letters of u; the rest carry
    // letters of w in order. Subset enumeration over bitmasks is fine at the
    // word lengths this library handles.
    std::vector<int> pick(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      BlockWord merged;
      merged.letters.resize(static_cast<size_t>(total));
      std::vector<bool> used(static_cast<size_t>(total), false);
      for (int i = 0; i < n; ++i) {
        merged.letters[static_cast<size_t>(pick[static_cast<size_t>(i)])] =
            u.letters[static_cast<size_t>(i)];
        used[static_cast<size_t>(pick[static_cast<size_t>(i)])] = true;
      }
      int next_w = 0;
      for (int pos = 0; pos < total; ++pos) {
        if (!used[static_cast<size_t>(pos)]) {
          merged.letters[static_cast<size_t>(pos)] =
              w.letters[static_cast<size_t>(next_w++)];
        }
      }
      out.add(merged, cu);
      if (n == 0) break;
      int t = n - 1;
      while (t >= 0 && pick[static_cast<size_t>(t)] == total - (n - t)) --t;
      if (t < 0) break;
      ++pick[static_cast<size_t>(t)];
      for (int s = t + 1; s < n; ++s) {
        pick[static_cast<size_t>(s)] = pick[static_cast<size_t>(s - 1)] + 1;
      }
    }
  }
  return out;
}

}  // namespace

WordSum shuffle_product(const std::vector<BlockWord>& words) {
  if (words.empty()) {
    throw std::invalid_argument("shuffle product of an empty list");
  }
  for (const BlockWord& w : words) {
    if (w.letters.empty()) {
      throw std::invalid_argument("shuffle product with an empty word");
    }
  }
  WordSum acc;
  acc.add(words.front(), 1);
  for (size_t i = 1; i < words.size(); ++i) {
    acc = shuffle_pair(acc, words[i]);
  }
  return acc;
}

std::pair<BlockWord, long long> max_shuffle_constituent(
    const std::vector<BlockWord>& words) {
  for (size_t i = 0; i < words.size(); ++i) {
    if (!is_lyndon_word(words[i])) {
      throw std::invalid_argument("max_shuffle_constituent: word " +
                                  words[i].str() + " is not Lyndon");
    }
    if (i > 0 && word_compare(words[i - 1], words[i]) < 0) {
      throw std::invalid_argument(
          "max_shuffle_constituent: words must be non-increasing");
    }
  }
  WordSum s = shuffle_product(words);
  const auto& last = *s.terms.rbegin();
  return {last.first, last.second};
}

}  // namespace lynperm
