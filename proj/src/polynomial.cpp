#include "lynperm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lynperm {

Variable Variable::x(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("x-variable of empty permutation");
  return {Kind::X, p.size(), 0, p.str()};
}

std::string Variable::str() const {
  switch (kind) {
    case Kind::S:
      return "s[" + std::to_string(a) + "]";
    case Kind::T:
      return "t[" + std::to_string(a) + "," + std::to_string(b) + "]";
    case Kind::X:
      return "x[" + name + "]";
    case Kind::Named:
      return name;
  }
  return {};
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

int monomial_degree_in(const Monomial& m, Variable::Kind kind) {
  int d = 0;
  for (const auto& [v, e] : m) {
    if (v.kind == kind) d += e;
  }
  return d;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += '*';
    out += v.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial Polynomial::constant(const Rat& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(const Variable& v) {
  Polynomial p;
  p.add_term({{v, 1}}, make_rat(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  for (const auto& [v, e] : m) {
    if (e <= 0) throw std::invalid_argument("monomial exponent must be >= 1");
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

Polynomial Polynomial::derivative(const Variable& v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(v);
    if (it == m.end()) continue;
    Monomial dm = m;
    const int e = it->second;
    if (e == 1) {
      dm.erase(v);
    } else {
      dm[v] = e - 1;
    }
    out.add_term(dm, c * e);
  }
  return out;
}

Rat Polynomial::evaluate(const std::map<Variable, Rat>& point) const {
  Rat total = make_rat(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) {
        throw std::invalid_argument("evaluate: unassigned variable " + v.str());
      }
      for (int i = 0; i < e; ++i) term *= it->second;
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? make_rat(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) out.insert(v);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Rat abs_c = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty()) {
      out += rat_to_string(abs_c);
    } else {
      if (abs_c != 1) out += rat_to_string(abs_c) + "*";
      out += monomial_str(m);
    }
  }
  return out;
}

}  // namespace lynperm
