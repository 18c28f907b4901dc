#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "lynperm/io.hpp"

namespace py = pybind11;

namespace {

using namespace lynperm;

BlowupPermuton blowup_from(const std::string& base,
                           const std::vector<std::string>& scales) {
  std::vector<Rat> rs;
  rs.reserve(scales.size());
  for (const std::string& s : scales) rs.push_back(rat_from_string(s));
  return make_blowup(parse_permutation(base), rs);
}

}  // namespace

PYBIND11_MODULE(_lynperm, m) {
  m.doc() = "exact pattern-density calculus on permutations and blow-ups";

  m.def("blocks", [](const std::string& p) {
    std::vector<std::string> out;
    for (const Permutation& b : decompose_blocks(parse_permutation(p)).blocks) {
      out.push_back(b.str());
    }
    return out;
  });

  m.def("block_word", [](const std::string& p) {
    return block_word_of(parse_permutation(p)).str();
  });

  m.def("is_lyndon", [](const std::string& p) {
    return is_lyndon_permutation(parse_permutation(p));
  });

  m.def(
      "lyndon_permutations",
      [](int k, bool include_trivial) {
        std::vector<std::string> out;
        for (const Permutation& p :
             enumerate_lyndon_permutations(k, include_trivial)) {
          out.push_back(p.str());
        }
        return out;
      },
      py::arg("k"), py::arg("include_trivial") = false);

  m.def("lyndon_counts", [](int k) {
    std::vector<long long> out;
    for (const Int& v : lyndon_counts_from_series(k)) out.push_back(v.get_si());
    return out;
  });

  m.def("cfl", [](const std::string& word) {
    std::vector<std::string> out;
    for (const BlockWord& f : cfl_factorize(parse_block_word(word))) {
      out.push_back(f.str());
    }
    return out;
  });

  m.def("lyndon_factors", [](const std::string& p) {
    std::vector<std::string> out;
    for (const Permutation& f :
         lyndon_factor_permutation(parse_permutation(p))) {
      out.push_back(f.str());
    }
    return out;
  });

  m.def("shuffle", [](const std::vector<std::string>& words) {
    std::vector<BlockWord> ws;
    for (const std::string& w : words) ws.push_back(parse_block_word(w));
    std::map<std::string, long long> out;
    for (const auto& [w, c] : shuffle_product(ws).terms) out[w.str()] = c;
    return out;
  });

  m.def("flag_product", [](const std::vector<std::string>& parts) {
    std::vector<Permutation> ps;
    for (const std::string& p : parts) ps.push_back(parse_permutation(p));
    std::map<std::string, std::string> out;
    for (const auto& [p, c] : flag_product(ps).terms) {
      out[p.str()] = rat_to_string(c);
    }
    return out;
  });

  m.def("pattern_density", [](const std::string& sigma, const std::string& p) {
    return rat_to_string(
        pattern_density(parse_permutation(sigma), parse_permutation(p)));
  });

  m.def("blowup_density", [](const std::string& sigma, const std::string& base,
                             const std::vector<std::string>& scales) {
    return rat_to_string(
        exact_density(parse_permutation(sigma), blowup_from(base, scales)));
  });

  m.def(
      "sample",
      [](const std::string& base, const std::vector<std::string>& scales,
         int n, std::uint64_t seed) {
        return sample_permutation(blowup_from(base, scales), n, seed).word();
      },
      py::arg("base"), py::arg("scales"), py::arg("n"), py::arg("seed") = 0);

  m.def(
      "estimate",
      [](const std::string& sigma, const std::string& base,
         const std::vector<std::string>& scales, long long trials,
         std::uint64_t seed) {
        const DensityEstimate est = estimate_density(
            parse_permutation(sigma), blowup_from(base, scales), trials, seed);
        py::dict d;
        d["mean"] = est.mean;
        d["standard_error"] = est.standard_error;
        d["trials"] = est.trials;
        d["tie_redraws"] = est.tie_redraws;
        return d;
      },
      py::arg("sigma"), py::arg("base"), py::arg("scales"),
      py::arg("trials") = 10000, py::arg("seed") = 0);

  m.def("reduce", [](const std::string& p) {
    const Permutation perm = parse_permutation(p);
    const ReductionTable table = build_reduction_table(perm.size());
    return reduce_to_lyndon(perm, table.entries).str();
  });

  m.def("reduction_table", [](int k) {
    std::map<std::string, std::string> out;
    for (const auto& [p, poly] : build_reduction_table(k).entries) {
      out[p.str()] = poly.str();
    }
    return out;
  });

  m.def(
      "witness_json",
      [](int k, int attempts, std::uint64_t seed) {
        return certificate_to_json(find_witness(k, attempts, seed)).dump();
      },
      py::arg("k"), py::arg("attempts") = 16, py::arg("seed") = 0);

  m.def(
      "verify_json",
      [](const std::string& level, std::uint64_t seed) {
        return check_results_to_json(run_checks(level, seed)).dump();
      },
      py::arg("level") = "desk", py::arg("seed") = 0);

  m.def("lemma_unique", [](const std::vector<std::string>& perms) {
    std::vector<Permutation> ps;
    for (const std::string& p : perms) ps.push_back(parse_permutation(p));
    return verify_lemma_lyndon(ps);
  });
}
