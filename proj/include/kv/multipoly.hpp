#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kv/rational.hpp"

namespace kv {

// Ordered list of chart variable names, shared by every value built over the
// same chart.
using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

// Validates names ([A-Za-z][A-Za-z0-9_]*, pairwise distinct).
VarListPtr make_variables(std::vector<std::string> names);

// One exponent per variable.
using Exponents = std::vector<unsigned>;

// Graded lexicographic term order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with rational coefficients. The term map is
// the canonical form: no zero coefficients are ever stored, so operator== is
// mathematical equality.
class MultiPoly {
 public:
  explicit MultiPoly(VarListPtr vars) : vars_(std::move(vars)) {}
  static MultiPoly constant(VarListPtr vars, const Rational& c);
  static MultiPoly variable(VarListPtr vars, std::size_t index);

  const VarListPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  unsigned total_degree() const;    // 0 for the zero polynomial

  const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly pow(unsigned k) const;

  MultiPoly partial(std::size_t var) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Graded-lex greatest term; requires a nonzero polynomial.
  const std::pair<const Exponents, Rational>& leading() const;

  // Positive rational content: gcd of coefficient numerators over lcm of
  // coefficient denominators. Requires nonzero.
  Rational rational_content() const;
  // Elementwise minimum exponent over all terms; requires nonzero.
  Exponents min_exponents() const;
  // Divide by the monomial x^e; every term must have exponents >= e.
  MultiPoly shifted_down(const Exponents& e) const;
  // Exact single-divisor division: quotient q with *this == q * d, if one
  // exists. Leading-term division, fail-fast.
  std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

  std::string to_string() const;

 private:
  VarListPtr vars_;
  std::map<Exponents, Rational, GradedLexLess> terms_;

  void check_same_vars(const MultiPoly& o) const;
};

}  // namespace kv
