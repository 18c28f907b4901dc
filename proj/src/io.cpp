#include "lynperm/io.hpp"

#include <fstream>
#include <stdexcept>

namespace lynperm {

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("rational must be a \"p/q\" string");
  }
  return rat_from_string(j.get<std::string>());
}

Json perm_sum_to_json(const PermSum& s) {
  Json out = Json::array();
  for (const auto& [p, c] : s.terms) {
    out.push_back({{"perm", p.str()}, {"coeff", rat_to_json(c)}});
  }
  return out;
}

Json word_sum_to_json(const WordSum& s) {
  Json out = Json::array();
  for (const auto& [w, c] : s.terms) {
    out.push_back({{"word", w.str()}, {"coeff", c}});
  }
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mon, coeff] : p.terms()) {
    Json vars = Json::array();
    for (const auto& [v, e] : mon) {
      vars.push_back(v.str() + "^" + std::to_string(e));
    }
    out.push_back({{"monomial", vars}, {"coeff", rat_to_json(coeff)}});
  }
  return out;
}

Json table_to_json(const ReductionTable& table) {
  Json entries = Json::object();
  for (const auto& [p, poly] : table.entries) {
    entries[p.str()] = polynomial_to_json(poly);
  }
  return Json{{"k", table.k}, {"entries", entries}};
}

Json permuton_to_json(const BlowupPermuton& P) {
  Json scales = Json::array();
  for (const Rat& z : P.scales) scales.push_back(rat_to_json(z));
  return Json{{"base", P.base.str()}, {"scales", scales}};
}

BlowupPermuton permuton_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("scales")) {
    throw std::invalid_argument(
        "permuton spec must be {\"base\": \"...\", \"scales\": [\"p/q\", ...]}");
  }
  if (!j.at("base").is_string() || !j.at("scales").is_array()) {
    throw std::invalid_argument("permuton spec has wrong field types");
  }
  const Permutation base = parse_permutation(j.at("base").get<std::string>());
  std::vector<Rat> scales;
  for (const Json& z : j.at("scales")) scales.push_back(rat_from_json(z));
  return make_blowup(base, scales);
}

BlowupPermuton read_permuton_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open permuton spec file: " + path);
  }
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return permuton_from_json(j);
}

Json certificate_to_json(const JacobianCertificate& cert) {
  Json s = Json::array();
  for (const Rat& v : cert.point.s) s.push_back(rat_to_json(v));
  Json t = Json::array();
  for (const auto& row : cert.point.t) {
    Json jr = Json::array();
    for (const Rat& v : row) jr.push_back(rat_to_json(v));
    t.push_back(jr);
  }
  Json matrix = Json::array();
  for (const auto& row : cert.matrix) {
    Json jr = Json::array();
    for (const Rat& v : row) jr.push_back(rat_to_json(v));
    matrix.push_back(jr);
  }
  Json lyndon = Json::array();
  for (const Permutation& p : cert.lyndon_list) lyndon.push_back(p.str());
  return Json{{"k", cert.k},
              {"point", Json{{"s", s}, {"t", t}}},
              {"matrix", matrix},
              {"determinant", rat_to_json(cert.determinant)},
              {"seed", cert.witness_seed},
              {"lyndon_list", lyndon}};
}

Json estimate_to_json(const DensityEstimate& est) {
  return Json{{"mean", est.mean},
              {"standard_error", est.standard_error},
              {"trials", est.trials},
              {"tie_redraws", est.tie_redraws}};
}

Json check_results_to_json(const std::vector<CheckResult>& results) {
  Json out = Json::array();
  for (const CheckResult& r : results) {
    out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  return out;
}

}  // namespace lynperm
