#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lynperm/perm.hpp"
#include "lynperm/rational.hpp"

namespace lynperm {

/// A typed polynomial variable. The kinds cover everything the calculus
/// needs: x[sigma] for Lyndon-density unknowns, s[i] and t[i,j] for the
/// independence construction, and free named symbols for ad-hoc use.
struct Variable {
  enum class Kind { S, T, X, Named };

  Kind kind = Kind::Named;
  int a = 0;
  int b = 0;
  std::string name;  // permutation text for X, symbol for Named

  static Variable s(int i) { return {Kind::S, i, 0, {}}; }
  static Variable t(int i, int j) { return {Kind::T, i, j, {}}; }
  static Variable x(const Permutation& p);
  static Variable named(std::string n) {
    return {Kind::Named, 0, 0, std::move(n)};
  }

  std::string str() const;

  /// x-variables order by permutation size then word, so rendering lists
  /// x[21] before x[132]; s and t order by their indices.
  auto operator<=>(const Variable&) const = default;
};

/// Exponent map; absent variables have exponent 0.
using Monomial = std::map<Variable, int>;

int monomial_degree(const Monomial& m);
int monomial_degree_in(const Monomial& m, Variable::Kind kind);
std::string monomial_str(const Monomial& m);

/// Sparse exact-rational polynomial in canonical expanded form.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Rat& c);
  static Polynomial variable(const Variable& v);

  void add_term(const Monomial& m, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;

  Polynomial derivative(const Variable& v) const;

  /// Exact evaluation; throws if a variable of the polynomial is missing
  /// from the point.
  Rat evaluate(const std::map<Variable, Rat>& point) const;

  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Monomial& m) const;
  int total_degree() const;
  std::set<Variable> variables() const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }

  /// Deterministic human form, e.g. "1 - x[21]" or "2*s[1]^2*t[1,1]*t[1,2]".
  std::string str() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Monomial, Rat> terms_;
};

}  // namespace lynperm
