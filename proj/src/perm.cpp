#include "lynperm/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lynperm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" +
                                  std::to_string(n) + "]");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::descending(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  if (word_.empty()) return "()";
  if (size() <= 9) {
    std::string out;
    for (int v : word_) out += static_cast<char>('0' + v);
    return out;
  }
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  if (text.empty() || text == "()") return Permutation();
  if (text.find(',') == std::string::npos) {
    std::vector<int> w;
    w.reserve(text.size());
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation literal: " + text);
      }
      w.push_back(c - '0');
    }
    return Permutation(std::move(w));
  }
  std::vector<int> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) {
      throw std::invalid_argument("bad permutation literal: " + text);
    }
    w.push_back(v);
  }
  return Permutation(std::move(w));
}

Permutation direct_sum(const std::vector<Permutation>& parts) {
  std::vector<int> w;
  int offset = 0;
  for (const Permutation& p : parts) {
    for (int v : p.word()) w.push_back(v + offset);
    offset += p.size();
  }
  return Permutation(std::move(w));
}

BlockDecomposition decompose_blocks(const Permutation& p) {
  // A prefix [1..i] forms a union of leading blocks exactly when its values
  // are {1..i}, i.e. when the running maximum equals i.
  BlockDecomposition d;
  int run_max = 0;
  int start = 1;
  for (int i = 1; i <= p.size(); ++i) {
    run_max = std::max(run_max, p.at(i));
    if (run_max == i) {
      std::vector<int> w;
      w.reserve(static_cast<size_t>(i - start + 1));
      for (int j = start; j <= i; ++j) w.push_back(p.at(j) - start + 1);
      d.blocks.emplace_back(std::move(w));
      start = i + 1;
    }
  }
  return d;
}

bool is_indecomposable(const Permutation& p) {
  if (p.empty()) return false;
  return decompose_blocks(p).blocks.size() == 1;
}

std::vector<int> increasing_segments(const Permutation& p) {
  std::vector<int> lens;
  int i = 1;
  while (i <= p.size()) {
    int j = i;
    while (j + 1 <= p.size() && p.at(j + 1) == p.at(j) + 1) ++j;
    lens.push_back(j - i + 1);
    i = j + 1;
  }
  return lens;
}

Permutation pattern_at(const Permutation& p, const std::vector<int>& indices) {
  const int m = static_cast<int>(indices.size());
  for (int t = 0; t < m; ++t) {
    const int idx = indices[static_cast<size_t>(t)];
    if (idx < 1 || idx > p.size()) {
      throw std::invalid_argument("pattern index out of range");
    }
    if (t > 0 && indices[static_cast<size_t>(t - 1)] >= idx) {
      throw std::invalid_argument("pattern indices must be strictly increasing");
    }
  }
  std::vector<int> picked(static_cast<size_t>(m));
  for (int t = 0; t < m; ++t) {
    picked[static_cast<size_t>(t)] = p.at(indices[static_cast<size_t>(t)]);
  }
  // Rank of each picked value among the picked values gives the pattern.
  std::vector<int> w(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) {
    int rank = 1;
    for (int b = 0; b < m; ++b) {
      if (picked[static_cast<size_t>(b)] < picked[static_cast<size_t>(a)]) {
        ++rank;
      }
    }
    w[static_cast<size_t>(a)] = rank;
  }
  return Permutation(std::move(w));
}

namespace {

long long count_occurrences(const Permutation& sigma, const Permutation& p) {
  const int m = sigma.size();
  const int n = p.size();
  long long hits = 0;
  std::vector<int> idx(static_cast<size_t>(m));
  std::iota(idx.begin(), idx.end(), 1);
  // Iterate over all m-subsets of [n] in combination order.
  while (true) {
    if (pattern_at(p, idx) == sigma) ++hits;
    int t = m - 1;
    while (t >= 0 && idx[static_cast<size_t>(t)] == n - (m - 1 - t)) --t;
    if (t < 0) break;
    ++idx[static_cast<size_t>(t)];
    for (int u = t + 1; u < m; ++u) {
      idx[static_cast<size_t>(u)] = idx[static_cast<size_t>(u - 1)] + 1;
    }
  }
  return hits;
}

}  // namespace

Rat pattern_density(const Permutation& sigma, const Permutation& p) {
  if (sigma.empty() || p.empty()) {
    throw std::invalid_argument("pattern density needs non-empty permutations");
  }
  if (sigma.size() > p.size()) return make_rat(0);
  Rat r(Int(static_cast<long>(count_occurrences(sigma, p))),
        binomial(p.size(), sigma.size()));
  r.canonicalize();
  return r;
}

std::vector<Permutation> enumerate_permutations(int n, int max_size) {
  if (n < 1 || n > max_size) {
    throw std::invalid_argument("enumerate_permutations: size out of range");
  }
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace lynperm
