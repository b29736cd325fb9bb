#pragma once

#include <string>

#include "kv/multipoly.hpp"

namespace kv {

// Element of the rational-function field over a chart. The representation is
// not canonical (no full multivariate gcd); equality and zero-testing are
// exact via cross-multiplication regardless of representation.
class RatFunc {
 public:
  explicit RatFunc(MultiPoly num);
  RatFunc(MultiPoly num, MultiPoly den);  // throws DivisionByZero if den == 0

  static RatFunc zero(VarListPtr vars);
  static RatFunc one(VarListPtr vars);
  static RatFunc constant(VarListPtr vars, const Rational& c);
  static RatFunc variable(VarListPtr vars, std::size_t index);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarListPtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // DivisionByZero
  RatFunc& operator+=(const RatFunc& o);
  RatFunc pow(unsigned k) const;

  // Exact equality of values: a.num*b.den - b.num*a.den == 0.
  bool eq(const RatFunc& o) const;

  // Partial derivative by the quotient rule.
  RatFunc partial(std::size_t var) const;
  RatFunc partial(const std::string& var) const;  // throws UnknownVariable

 private:
  MultiPoly num_, den_;
  void reduce();
};

inline bool rf_eq(const RatFunc& a, const RatFunc& b) { return a.eq(b); }

}  // namespace kv
