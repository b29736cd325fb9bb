#include "kv/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "kv/errors.hpp"

namespace kv {

VarListPtr make_variables(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0]))))
      throw ValidationError("bad variable name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ValidationError("bad variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw ValidationError("duplicate variable name '" + n + "'");
  }
  return std::make_shared<const VarList>(std::move(names));
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(VarListPtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarListPtr vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.nvars()) throw Error("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  if (e.size() != nvars()) throw Error("exponent vector has wrong length");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (vars_ == o.vars_) return;
  if (*vars_ != *o.vars_)
    throw Error("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r(a.vars_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = MultiPoly::constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::partial(std::size_t var) const {
  if (var >= nvars()) throw Error("variable index out of range");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

const std::pair<const Exponents, Rational>& MultiPoly::leading() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

Exponents MultiPoly::min_exponents() const {
  if (terms_.empty()) throw Error("zero polynomial has no exponents");
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

MultiPoly MultiPoly::shifted_down(const Exponents& e) const {
  MultiPoly r(vars_);
  for (const auto& [t, c] : terms_) {
    Exponents d(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < e[i]) throw Error("monomial division underflow");
      d[i] = t[i] - e[i];
    }
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
  check_same_vars(d);
  if (d.is_zero()) throw DivisionByZero();
  MultiPoly q(vars_);
  MultiPoly r = *this;
  const auto& [de, dc] = d.leading();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    Exponents qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    // The leading term cancels exactly at every step and graded-lex is a
    // well-order on monomials, so this terminates.
    MultiPoly t(vars_);
    t.terms_.emplace(qe, rc / dc);
    q += t;
    r = r - t * d;
  }
  return q;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Graded-lex descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.is_negative()) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a.is_negative() ? " - " : " + ");
      if (a.is_negative()) a = -a;
    }
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
    if (!has_vars) {
      out << a.to_string();
      continue;
    }
    bool printed = false;
    if (!a.is_one()) {
      out << a.to_string();
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << (*vars_)[i];
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace kv
