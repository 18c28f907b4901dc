#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lynperm/io.hpp"

namespace lynperm::cli {
namespace {

struct UsageError {
  std::string message;
};

struct Bounds {
  std::optional<int> override;
  int get(int fallback) const { return override ? *override : fallback; }
};

std::optional<int> max_size_override() {
  const char* env = std::getenv("LYNPERM_MAX_SIZE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v <= 0 || v > 1000000) {
    throw UsageError{"LYNPERM_MAX_SIZE must be a positive integer, got \"" +
                     std::string(env) + "\""};
  }
  return static_cast<int>(v);
}

int sign_of(std::strong_ordering o) {
  if (o < 0) return -1;
  if (o > 0) return 1;
  return 0;
}

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      throw std::invalid_argument("empty entry in integer list: " + text);
    }
    size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("not an integer: " + item);
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string approx(const Rat& r) {
  std::ostringstream o;
  o << rat_to_string(r) << " (~" << rat_to_double(r) << ")";
  return o.str();
}

std::string word_sum_text(const WordSum& s) {
  std::string out;
  for (const auto& [w, c] : s.terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + w.str();
  }
  return out.empty() ? "0" : out;
}

PiLSpec read_point_spec(int k, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  // Accept either a bare {"s": ..., "t": ...} object or a full certificate
  // (as emitted by `witness`), whose point lives under "point".
  const Json& p = j.is_object() && j.contains("point") ? j.at("point") : j;
  if (!p.is_object() || !p.contains("s") || !p.contains("t") ||
      !p.at("s").is_array() || !p.at("t").is_array()) {
    throw std::invalid_argument(
        "point file must contain {\"s\": [\"p/q\", ...], \"t\": [[...], ...]}");
  }
  std::vector<Rat> s;
  for (const Json& v : p.at("s")) s.push_back(rat_from_json(v));
  std::vector<std::vector<Rat>> t;
  for (const Json& row : p.at("t")) {
    if (!row.is_array()) {
      throw std::invalid_argument("t must be an array of arrays");
    }
    std::vector<Rat> r;
    for (const Json& v : row) r.push_back(rat_from_json(v));
    t.push_back(std::move(r));
  }
  return make_pil_spec(k, std::move(s), std::move(t));
}

struct ParsedArgs {
  std::string output = "json";

  std::string blocks_perm;
  std::vector<std::string> blocks_sum;

  std::string check_perm;
  std::string check_compare;

  int enum_k = 0;
  bool enum_trivial = false;
  bool enum_all = false;

  int counts_k = 0;

  std::string fact_perm;
  std::string fact_word;

  std::vector<std::string> shuffle_words;
  bool shuffle_max = false;

  std::vector<std::string> flag_parts;
  std::string flag_violations;
  std::string flag_density_spec;

  std::string density_sigma;
  std::string density_perm;
  std::string density_at;

  std::string pdensity_sigma;
  std::string pdensity_spec;
  bool pdensity_symbolic = false;
  std::string pdensity_counts;

  std::string sample_spec;
  int sample_n = 0;
  std::string sample_estimate;
  long long sample_trials = 10000;
  std::uint64_t sample_seed = 0;

  std::string reduce_perm;
  std::string reduce_eval_spec;

  int table_k = 0;

  int jac_k = 0;
  std::string jac_point;
  std::string jac_symbolic;

  int wit_k = 0;
  int wit_attempts = 16;
  std::uint64_t wit_seed = 0;
  bool wit_monomial = false;
  bool wit_float = false;

  std::string verify_level = "desk";
  std::uint64_t verify_seed = 0;
  std::vector<std::string> verify_lemma;
};

int handle_blocks(const ParsedArgs& a, const Bounds&, Json& j,
                  std::string& text) {
  std::vector<Permutation> parts{parse_permutation(a.blocks_perm)};
  for (const std::string& s : a.blocks_sum) parts.push_back(parse_permutation(s));
  const Permutation p = parts.size() == 1 ? parts[0] : direct_sum(parts);
  const BlockWord w = block_word_of(p);
  Json blocks = Json::array();
  for (const Permutation& b : decompose_blocks(p).blocks) blocks.push_back(b.str());
  const std::vector<int> segs = increasing_segments(p);
  j = Json{{"perm", p.str()},
           {"blocks", blocks},
           {"block_word", w.str()},
           {"indecomposable", is_indecomposable(p)},
           {"increasing_segments", segs}};
  std::ostringstream t;
  t << "perm: " << p.str() << "\nblock word: " << w.str()
    << "\nindecomposable: " << (is_indecomposable(p) ? "yes" : "no")
    << "\nincreasing segments:";
  for (int s : segs) t << " " << s;
  text = t.str();
  return 0;
}

int handle_lyndon_check(const ParsedArgs& a, const Bounds&, Json& j,
                        std::string& text) {
  const Permutation p = parse_permutation(a.check_perm);
  const BlockWord w = block_word_of(p);
  j = Json{{"perm", p.str()},
           {"block_word", w.str()},
           {"is_lyndon_word", is_lyndon_word(w)},
           {"is_lyndon_permutation", is_lyndon_permutation(p)}};
  std::ostringstream t;
  t << p.str() << " has block word " << w.str() << " and is "
    << (is_lyndon_permutation(p) ? "" : "not ") << "a Lyndon permutation";
  if (!a.check_compare.empty()) {
    const Permutation q = parse_permutation(a.check_compare);
    Json cmp{{"other", q.str()}, {"compare_L", sign_of(compare_L(p, q))}};
    if (is_indecomposable(p) && is_indecomposable(q)) {
      cmp["alphabet_compare"] = sign_of(alphabet_compare(p, q));
    }
    j["compare"] = cmp;
    const int c = sign_of(compare_L(p, q));
    t << "\n" << p.str() << (c < 0 ? " <_L " : c > 0 ? " >_L " : " =_L ")
      << q.str();
  }
  text = t.str();
  return 0;
}

int handle_lyndon_enum(const ParsedArgs& a, const Bounds& b, Json& j,
                       std::string& text) {
  const std::vector<Permutation> perms =
      a.enum_all
          ? enumerate_permutations(a.enum_k, b.get(kDefaultEnumBound))
          : enumerate_lyndon_permutations(a.enum_k, a.enum_trivial,
                                          b.get(kDefaultLyndonBound));
  j = Json::array();
  std::ostringstream t;
  for (const Permutation& p : perms) {
    j.push_back(p.str());
    t << p.str() << "\n";
  }
  text = t.str();
  return 0;
}

int handle_lyndon_counts(const ParsedArgs& a, const Bounds& b, Json& j,
                         std::string& text) {
  const std::vector<Int> counts =
      lyndon_counts_from_series(a.counts_k, b.get(kDefaultSeriesBound));
  j = Json::array();
  std::ostringstream t;
  for (size_t i = 0; i < counts.size(); ++i) {
    j.push_back(int_to_string(counts[i]));
    t << "l_" << (i + 1) << " = " << int_to_string(counts[i]) << "\n";
  }
  text = t.str();
  return 0;
}

int handle_factorize(const ParsedArgs& a, const Bounds&, Json& j,
                     std::string& text) {
  Permutation p;
  BlockWord w;
  if (!a.fact_word.empty()) {
    if (!a.fact_perm.empty()) {
      throw UsageError{"factorize takes a permutation or --word, not both"};
    }
    w = parse_block_word(a.fact_word);
    p = direct_sum(w.letters);
  } else if (!a.fact_perm.empty()) {
    p = parse_permutation(a.fact_perm);
    w = block_word_of(p);
  } else {
    throw UsageError{"factorize needs a permutation argument or --word"};
  }
  Json cfl = Json::array();
  for (const BlockWord& f : cfl_factorize(w)) cfl.push_back(f.str());
  Json lyndon = Json::array();
  for (const Permutation& f : lyndon_factor_permutation(p)) {
    lyndon.push_back(f.str());
  }
  j = Json{{"perm", p.str()},
           {"block_word", w.str()},
           {"cfl", cfl},
           {"lyndon_factors", lyndon}};
  std::ostringstream t;
  t << "perm: " << p.str() << "\nblock word: " << w.str() << "\ncfl:";
  for (const Json& f : cfl) t << " " << f.get<std::string>();
  t << "\nlyndon factors:";
  for (const Json& f : lyndon) t << " " << f.get<std::string>();
  text = t.str();
  return 0;
}

int handle_shuffle(const ParsedArgs& a, const Bounds&, Json& j,
                   std::string& text) {
  std::vector<BlockWord> words;
  for (const std::string& s : a.shuffle_words) words.push_back(parse_block_word(s));
  const WordSum sum = shuffle_product(words);
  j = Json{{"terms", word_sum_to_json(sum)}, {"total_mass", sum.total_mass()}};
  std::string t = word_sum_text(sum);
  if (a.shuffle_max) {
    const auto [w, coeff] = max_shuffle_constituent(words);
    j["max"] = Json{{"word", w.str()}, {"coeff", coeff}};
    t += "\nmax constituent: " + w.str() + " (coeff " + std::to_string(coeff) + ")";
  }
  text = t;
  return 0;
}

int handle_flag_product(const ParsedArgs& a, const Bounds& b, Json& j,
                        std::string& text) {
  if (!a.flag_violations.empty()) {
    if (!a.flag_parts.empty()) {
      throw UsageError{"--violations replaces the product arguments"};
    }
    const Permutation pi = parse_permutation(a.flag_violations);
    Json v = Json::array();
    for (const Permutation& p :
         constituents_violating_flag_lemma(pi, b.get(kDefaultFlagBound))) {
      v.push_back(p.str());
    }
    j = Json{{"perm", pi.str()}, {"violations", v}};
    text = v.empty() ? "no violating constituents"
                     : "violating constituents: " + j["violations"].dump();
    return 0;
  }
  if (a.flag_parts.empty()) {
    throw UsageError{"flag-product needs at least one permutation"};
  }
  std::vector<Permutation> parts;
  for (const std::string& s : a.flag_parts) parts.push_back(parse_permutation(s));
  const PermSum sum = flag_product(parts, b.get(kDefaultFlagBound));
  const Json terms = perm_sum_to_json(sum);
  text = sum.str();
  if (!a.flag_density_spec.empty()) {
    const BlowupPermuton P = read_permuton_spec(a.flag_density_spec);
    const Rat d = density_of_sum(sum, P, b.get(kDefaultDensityBound));
    j = Json{{"terms", terms}, {"density", rat_to_json(d)}};
    text += "\ndensity: " + approx(d);
  } else {
    j = terms;
  }
  return 0;
}

int handle_density(const ParsedArgs& a, const Bounds&, Json& j,
                   std::string& text) {
  const Permutation sigma = parse_permutation(a.density_sigma);
  const Permutation p = parse_permutation(a.density_perm);
  const Rat d = pattern_density(sigma, p);
  j = Json{{"sigma", sigma.str()}, {"perm", p.str()}, {"density", rat_to_json(d)}};
  std::ostringstream t;
  t << "d(" << sigma.str() << ", " << p.str() << ") = " << approx(d);
  if (!a.density_at.empty()) {
    const std::vector<int> indices = parse_csv_ints(a.density_at);
    const Permutation pat = pattern_at(p, indices);
    j["at"] = Json{{"indices", indices},
                   {"pattern", pat.str()},
                   {"matches_sigma", pat == sigma}};
    t << "\npattern at " << a.density_at << ": " << pat.str();
  }
  text = t.str();
  return 0;
}

int handle_permuton_density(const ParsedArgs& a, const Bounds& b, Json& j,
                            std::string& text) {
  const BlowupPermuton P = read_permuton_spec(a.pdensity_spec);
  j = Json{{"permuton", permuton_to_json(P)}};
  std::ostringstream t;
  bool did_something = false;
  if (!a.pdensity_counts.empty()) {
    const Permutation pat =
        blowup_pattern(P.base, parse_csv_ints(a.pdensity_counts));
    j["pattern"] = pat.str();
    t << "pattern for counts " << a.pdensity_counts << ": " << pat.str();
    did_something = true;
  }
  if (!a.pdensity_sigma.empty()) {
    const Permutation sigma = parse_permutation(a.pdensity_sigma);
    const Rat d = exact_density(sigma, P, b.get(kDefaultDensityBound));
    j["sigma"] = sigma.str();
    j["density"] = rat_to_json(d);
    if (did_something) t << "\n";
    t << "d(" << sigma.str() << ", P) = " << approx(d);
    if (a.pdensity_symbolic) {
      std::vector<std::string> names;
      for (int i = 1; i <= P.base.size(); ++i) {
        names.push_back("z" + std::to_string(i));
      }
      const Polynomial poly =
          symbolic_density(sigma, P.base, names, b.get(kDefaultDensityBound));
      j["symbolic"] = polynomial_to_json(poly);
      j["symbolic_text"] = poly.str();
      t << "\nsymbolic: " << poly.str();
    }
    did_something = true;
  }
  if (!did_something) {
    throw UsageError{"permuton-density needs a pattern argument or --counts"};
  }
  text = t.str();
  return 0;
}

int handle_permuton_sample(const ParsedArgs& a, const Bounds&, Json& j,
                           std::string& text) {
  const BlowupPermuton P = read_permuton_spec(a.sample_spec);
  std::ostringstream t;
  if (!a.sample_estimate.empty()) {
    const Permutation sigma = parse_permutation(a.sample_estimate);
    const DensityEstimate est =
        estimate_density(sigma, P, a.sample_trials, a.sample_seed);
    j = estimate_to_json(est);
    j["sigma"] = sigma.str();
    j["seed"] = a.sample_seed;
    t << "estimated d(" << sigma.str() << ", P) = " << est.mean << " +/- "
      << est.standard_error << " (" << est.trials << " trials, seed "
      << a.sample_seed << ")";
  } else {
    if (a.sample_n <= 0) {
      throw UsageError{"permuton-sample needs --n N or --estimate SIGMA"};
    }
    long long ties = 0;
    const Permutation q = sample_permutation(P, a.sample_n, a.sample_seed, &ties);
    j = Json{{"perm", q.str()},
             {"n", a.sample_n},
             {"seed", a.sample_seed},
             {"tie_redraws", ties}};
    t << q.str();
  }
  text = t.str();
  return 0;
}

int handle_reduce(const ParsedArgs& a, const Bounds& b, Json& j,
                  std::string& text) {
  const Permutation p = parse_permutation(a.reduce_perm);
  const ReductionTable table =
      build_reduction_table(p.size(), b.get(kDefaultReductionBound));
  const Polynomial poly = reduce_to_lyndon(p, table.entries);
  j = Json{{"perm", p.str()},
           {"polynomial", polynomial_to_json(poly)},
           {"text", poly.str()}};
  std::ostringstream t;
  t << poly.str();
  if (!a.reduce_eval_spec.empty()) {
    const BlowupPermuton P = read_permuton_spec(a.reduce_eval_spec);
    const Rat value =
        evaluate_polynomial(poly, lyndon_density_point(p.size(), P));
    const Rat direct = exact_density(p, P, b.get(kDefaultDensityBound));
    j["evaluated"] = rat_to_json(value);
    j["direct_density"] = rat_to_json(direct);
    j["agree"] = (value == direct);
    t << "\nevaluated: " << approx(value) << "\ndirect density: "
      << approx(direct) << "\nagree: " << (value == direct ? "yes" : "no");
  }
  text = t.str();
  return 0;
}

int handle_reduction_table(const ParsedArgs& a, const Bounds& b, Json& j,
                           std::string& text) {
  const ReductionTable table =
      build_reduction_table(a.table_k, b.get(kDefaultReductionBound));
  j = table_to_json(table);
  std::vector<Permutation> order;
  for (const auto& [p, poly] : table.entries) order.push_back(p);
  std::sort(order.begin(), order.end(),
            [](const Permutation& p, const Permutation& q) {
              return reduction_order_compare(p, q) < 0;
            });
  Json order_json = Json::array();
  std::ostringstream t;
  for (const Permutation& p : order) {
    order_json.push_back(p.str());
    t << "p_" << p.str() << " = " << table.entries.at(p).str() << "\n";
  }
  j["order"] = order_json;
  text = t.str();
  return 0;
}

int handle_jacobian(const ParsedArgs& a, const Bounds&, Json& j,
                    std::string& text) {
  if (a.jac_symbolic.empty() && a.jac_point.empty()) {
    throw UsageError{"jacobian needs --point FILE or --symbolic PERM"};
  }
  j = Json{{"k", a.jac_k}};
  std::ostringstream t;
  if (!a.jac_symbolic.empty()) {
    const Permutation pi = parse_permutation(a.jac_symbolic);
    const Polynomial poly = density_in_s_t(pi, a.jac_k);
    j["perm"] = pi.str();
    j["density"] = polynomial_to_json(poly);
    j["density_text"] = poly.str();
    t << "d(" << pi.str() << ", Pi^L) = " << poly.str();
  }
  if (!a.jac_point.empty()) {
    const PiLSpec spec = read_point_spec(a.jac_k, a.jac_point);
    const auto matrix = jacobian_matrix(spec);
    const Rat det = jacobian_determinant(matrix);
    const LyndonStructure st = lyndon_structure(a.jac_k);
    Json lyndon = Json::array();
    for (const Permutation& p : st.lyndon_list) lyndon.push_back(p.str());
    Json rows = Json::array();
    for (const auto& row : matrix) {
      Json r = Json::array();
      for (const Rat& v : row) r.push_back(rat_to_json(v));
      rows.push_back(r);
    }
    j["lyndon_list"] = lyndon;
    j["matrix"] = rows;
    j["determinant"] = rat_to_json(det);
    j["permuton"] = permuton_to_json(build_PiL(spec));
    if (!a.jac_symbolic.empty()) t << "\n";
    t << "det(J) = " << approx(det);
  }
  text = t.str();
  return 0;
}

int handle_witness(const ParsedArgs& a, const Bounds&, Json& j,
                   std::string& text) {
  std::ostringstream t;
  if (a.wit_monomial) {
    const Rat c = det_monomial_coefficient(a.wit_k);
    j = Json{{"k", a.wit_k}, {"monomial_coefficient", rat_to_json(c)}};
    t << "monomial coefficient for k=" << a.wit_k << ": " << rat_to_string(c);
    text = t.str();
    return 0;
  }
  const JacobianCertificate cert =
      find_witness(a.wit_k, a.wit_attempts, a.wit_seed);
  j = certificate_to_json(cert);
  t << "k=" << cert.k << " witness (seed " << cert.witness_seed
    << ")\ndeterminant: " << approx(cert.determinant);
  if (a.wit_float) {
    const double fd = certificate_float_determinant(cert);
    const double exact = rat_to_double(cert.determinant);
    const double rel = std::fabs(fd - exact) / std::fabs(exact);
    j["float_determinant"] = fd;
    j["float_relative_error"] = rel;
    t << "\nfloat recheck: " << fd << " (relative error " << rel << ")";
  }
  text = t.str();
  return 0;
}

int handle_verify(const ParsedArgs& a, const Bounds& b, Json& j,
                  std::string& text) {
  if (!a.verify_lemma.empty()) {
    std::vector<Permutation> perms;
    Json arr = Json::array();
    for (const std::string& s : a.verify_lemma) {
      perms.push_back(parse_permutation(s));
      arr.push_back(perms.back().str());
    }
    const bool ok = verify_lemma_lyndon(perms, b.get(kDefaultLemmaBound));
    j = Json{{"perms", arr}, {"unique_interval_occurrence", ok}};
    text = ok ? "unique canonical interval occurrence"
              : "found a non-canonical occurrence";
    return 0;
  }
  const std::vector<CheckResult> results =
      run_checks(a.verify_level, a.verify_seed);
  j = check_results_to_json(results);
  std::ostringstream t;
  bool all_pass = true;
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    t << (r.pass ? "PASS" : "FAIL") << " " << r.name << " ("
      << std::fixed << std::setprecision(2) << r.seconds << "s): " << r.detail
      << "\n";
    t.unsetf(std::ios::fixed);
    t << std::setprecision(6);
  }
  t << (all_pass ? "all checks passed" : "some checks FAILED");
  text = t.str();
  return all_pass ? 0 : 1;
}

}  // namespace

const std::vector<SubcommandInfo>& dispatch_table() {
  static const std::vector<SubcommandInfo> table{
      {"blocks",
       "indecomposable block structure of a permutation (or a direct sum)",
       {"parse_permutation", "direct_sum", "decompose_blocks",
        "is_indecomposable", "increasing_segments", "block_word_of"}},
      {"lyndon-check",
       "Lyndon status of a permutation; --compare orders two of them",
       {"is_lyndon_word", "is_lyndon_permutation", "compare_L",
        "alphabet_compare"}},
      {"lyndon-enum",
       "Lyndon permutations of size <= k in descending <_L order",
       {"enumerate_lyndon_permutations", "enumerate_permutations"}},
      {"lyndon-counts",
       "counts l_1..l_k solved from the blocks generating function",
       {"lyndon_counts_from_series"}},
      {"factorize",
       "Chen-Fox-Lyndon factorization of a block word",
       {"cfl_factorize", "lyndon_factor_permutation"}},
      {"shuffle",
       "shuffle product of block words",
       {"shuffle_product", "max_shuffle_constituent"}},
      {"flag-product",
       "flag product of permutations as a rational combination",
       {"flag_product", "constituents_violating_flag_lemma",
        "density_of_sum"}},
      {"density",
       "exact pattern density within a single permutation",
       {"pattern_density", "pattern_at"}},
      {"permuton-density",
       "exact pattern density in a blow-up permuton",
       {"make_blowup", "blowup_pattern", "exact_density", "symbolic_density"}},
      {"permuton-sample",
       "sample permutations from a blow-up, or Monte Carlo a density",
       {"sample_permutation", "estimate_density"}},
      {"reduce",
       "express a pattern density as a polynomial in Lyndon densities",
       {"reduce_to_lyndon", "evaluate_polynomial"}},
      {"reduction-table",
       "reduction polynomials for every permutation of size <= k",
       {"build_reduction_table", "reduction_order_compare"}},
      {"jacobian",
       "Jacobian of Lyndon densities on the Pi^L family at a point",
       {"build_PiL", "density_in_s_t", "jacobian_matrix",
        "jacobian_determinant"}},
      {"witness",
       "search for a rational point with non-zero Jacobian determinant",
       {"find_witness", "det_monomial_coefficient"}},
      {"verify",
       "run the property harnesses (desk or deep level)",
       {"verify_lemma_lyndon"}},
  };
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  ParsedArgs a;
  CLI::App app{"Lyndon permutation calculus", "lynperm"};
  app.require_subcommand(1);
  app.add_option("--output", a.output, "output mode: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::map<std::string, CLI::App*> subs;
  for (const SubcommandInfo& info : dispatch_table()) {
    CLI::App* sub = app.add_subcommand(info.name, info.summary);
    sub->fallthrough();
    subs[info.name] = sub;
  }

  subs["blocks"]->add_option("perm", a.blocks_perm, "permutation, one-line")
      ->required();
  subs["blocks"]->add_option("--sum", a.blocks_sum,
                             "extra summands joined by direct sum");

  subs["lyndon-check"]
      ->add_option("perm", a.check_perm, "permutation, one-line")
      ->required();
  subs["lyndon-check"]->add_option("--compare", a.check_compare,
                                   "second permutation to order against");

  subs["lyndon-enum"]->add_option("--k", a.enum_k, "size bound")->required();
  subs["lyndon-enum"]->add_flag("--include-trivial", a.enum_trivial,
                                "include the trivial permutation 1");
  subs["lyndon-enum"]->add_flag(
      "--all", a.enum_all, "every permutation of size exactly k instead");

  subs["lyndon-counts"]->add_option("--k", a.counts_k, "compute l_1..l_k")
      ->required();

  subs["factorize"]->add_option("perm", a.fact_perm, "permutation, one-line");
  subs["factorize"]->add_option("--word", a.fact_word,
                                "block word like 21|1|21 instead");

  subs["shuffle"]
      ->add_option("words", a.shuffle_words, "block words like 21|1")
      ->required();
  subs["shuffle"]->add_flag("--max", a.shuffle_max,
                            "also report the maximal constituent");

  subs["flag-product"]->add_option("parts", a.flag_parts,
                                   "permutations to multiply");
  subs["flag-product"]->add_option(
      "--violations", a.flag_violations,
      "check the product of this permutation's Lyndon factors instead");
  subs["flag-product"]->add_option("--density", a.flag_density_spec,
                                   "permuton spec file to evaluate against");

  subs["density"]->add_option("sigma", a.density_sigma, "pattern")->required();
  subs["density"]->add_option("perm", a.density_perm, "host permutation")
      ->required();
  subs["density"]->add_option("--at", a.density_at,
                              "1-based positions like 1,3,5");

  subs["permuton-density"]->add_option("sigma", a.pdensity_sigma, "pattern");
  subs["permuton-density"]
      ->add_option("--spec", a.pdensity_spec, "permuton spec file")
      ->required();
  subs["permuton-density"]->add_flag("--symbolic", a.pdensity_symbolic,
                                     "also emit the density polynomial");
  subs["permuton-density"]->add_option(
      "--counts", a.pdensity_counts,
      "emit the pattern for these per-part point counts");

  subs["permuton-sample"]
      ->add_option("--spec", a.sample_spec, "permuton spec file")
      ->required();
  subs["permuton-sample"]->add_option("--n", a.sample_n, "sample size");
  subs["permuton-sample"]->add_option("--estimate", a.sample_estimate,
                                      "pattern to Monte Carlo instead");
  subs["permuton-sample"]
      ->add_option("--trials", a.sample_trials, "Monte Carlo trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  subs["permuton-sample"]
      ->add_option("--seed", a.sample_seed, "RNG seed")
      ->capture_default_str();

  subs["reduce"]->add_option("perm", a.reduce_perm, "permutation, one-line")
      ->required();
  subs["reduce"]->add_option("--eval", a.reduce_eval_spec,
                             "evaluate at a permuton's Lyndon densities");

  subs["reduction-table"]->add_option("--k", a.table_k, "size bound")
      ->required();

  subs["jacobian"]->add_option("--k", a.jac_k, "pattern size bound")
      ->required();
  subs["jacobian"]->add_option("--point", a.jac_point,
                               "JSON point file with s and t arrays");
  subs["jacobian"]->add_option(
      "--symbolic", a.jac_symbolic,
      "emit d(PERM, Pi^L) as a polynomial in s and t");

  subs["witness"]->add_option("--k", a.wit_k, "pattern size bound")
      ->required();
  subs["witness"]
      ->add_option("--attempts", a.wit_attempts, "sampling attempts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  subs["witness"]->add_option("--seed", a.wit_seed, "RNG seed")
      ->capture_default_str();
  subs["witness"]->add_flag("--monomial-coefficient", a.wit_monomial,
                            "report det_monomial_coefficient(k) instead");
  subs["witness"]->add_flag("--float-check", a.wit_float,
                            "re-verify the determinant in floating point");

  subs["verify"]
      ->add_option("--level", a.verify_level, "desk or deep")
      ->check(CLI::IsMember({"desk", "deep"}))
      ->capture_default_str();
  subs["verify"]->add_option("--seed", a.verify_seed, "RNG seed")
      ->capture_default_str();
  subs["verify"]->add_option(
      "--lemma", a.verify_lemma,
      "check the interval lemma for this decreasing Lyndon tuple");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("lynperm");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (std::string& s : full) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const Bounds bounds{max_size_override()};
    Json j;
    std::string text;
    int code = 0;
    if (name == "blocks") code = handle_blocks(a, bounds, j, text);
    else if (name == "lyndon-check") code = handle_lyndon_check(a, bounds, j, text);
    else if (name == "lyndon-enum") code = handle_lyndon_enum(a, bounds, j, text);
    else if (name == "lyndon-counts") code = handle_lyndon_counts(a, bounds, j, text);
    else if (name == "factorize") code = handle_factorize(a, bounds, j, text);
    else if (name == "shuffle") code = handle_shuffle(a, bounds, j, text);
    else if (name == "flag-product") code = handle_flag_product(a, bounds, j, text);
    else if (name == "density") code = handle_density(a, bounds, j, text);
    else if (name == "permuton-density") code = handle_permuton_density(a, bounds, j, text);
    else if (name == "permuton-sample") code = handle_permuton_sample(a, bounds, j, text);
    else if (name == "reduce") code = handle_reduce(a, bounds, j, text);
    else if (name == "reduction-table") code = handle_reduction_table(a, bounds, j, text);
    else if (name == "jacobian") code = handle_jacobian(a, bounds, j, text);
    else if (name == "witness") code = handle_witness(a, bounds, j, text);
    else if (name == "verify") code = handle_verify(a, bounds, j, text);
    else throw UsageError{"unknown subcommand: " + name};
    if (a.output == "json") {
      out << j.dump(2) << "\n";
    } else {
      out << text;
      if (text.empty() || text.back() != '\n') out << "\n";
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (a.output == "json") {
      out << Json{{"error", e.what()}}.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace lynperm::cli
