#include "kv/expr.hpp"

#include <algorithm>
#include <cctype>

#include "kv/errors.hpp"

namespace kv {

namespace {

constexpr unsigned long kMaxExponent = 1000000;

class Parser {
 public:
  Parser(const std::string& text, const VarListPtr& vars) : s_(text), vars_(vars) {}

  RatFunc run() {
    RatFunc r = expression();
    skip_ws();
    if (!at_end()) throw SyntaxError("unexpected character", pos_);
    return r;
  }

 private:
  const std::string& s_;
  const VarListPtr& vars_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  RatFunc expression() {
    RatFunc r = term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        RatFunc rhs = term();
        r = (c == '+') ? r + rhs : r - rhs;
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        skip_ws();
        std::size_t rhs_off = pos_;
        RatFunc rhs = unary();
        if (c == '*') {
          r = r * rhs;
        } else {
          if (rhs.is_zero()) throw ZeroDenominatorLiteral(rhs_off);
          r = r / rhs;
        }
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t off = pos_;
    if (peek() == '-') throw NegativeExponent(off);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError("exponent must be a nonnegative integer literal", off);
    unsigned long k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + static_cast<unsigned long>(peek() - '0');
      if (k > kMaxExponent) throw SyntaxError("exponent too large", off);
      ++pos_;
    }
    skip_ws();
    if (peek() == '^') throw SyntaxError("nested exponent", pos_);
    return base.pow(static_cast<unsigned>(k));
  }

  RatFunc primary() {
    skip_ws();
    std::size_t off = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expression();
      skip_ws();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return RatFunc::constant(vars_, Rational::from_string(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_->begin(), vars_->end(), name);
      if (it == vars_->end()) throw UnknownVariable(name);
      return RatFunc::variable(vars_, static_cast<std::size_t>(it - vars_->begin()));
    }
    throw SyntaxError("expected a literal, variable, or '('", off);
  }
};

bool atomic_denominator(const MultiPoly& d) {
  if (d.terms().size() != 1) return false;
  const auto& [e, c] = *d.terms().begin();
  std::size_t nnz = 0;
  for (unsigned x : e)
    if (x != 0) ++nnz;
  if (nnz == 0) return c.is_integer() && !c.is_negative();
  return nnz == 1 && c.is_one();
}

}  // namespace

RatFunc parse_expr(const ExprSource& src) { return Parser(src.text, src.variables).run(); }

RatFunc parse_expr(const std::string& text, const VarListPtr& variables) {
  return Parser(text, variables).run();
}

std::string print_expr(const RatFunc& f) {
  if (f.is_zero()) return "0";
  std::string ns = f.num().to_string();
  if (f.den().is_constant() && f.den().constant_value().is_one()) return ns;
  if (f.num().terms().size() > 1) ns = "(" + ns + ")";
  std::string ds = f.den().to_string();
  if (!atomic_denominator(f.den())) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace kv
