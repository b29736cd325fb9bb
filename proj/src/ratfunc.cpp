#include "kv/ratfunc.hpp"

#include <algorithm>

#include "kv/errors.hpp"

namespace kv {

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), Rational(1))) {
  reduce();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

RatFunc RatFunc::zero(VarListPtr vars) { return RatFunc(MultiPoly(std::move(vars))); }

RatFunc RatFunc::one(VarListPtr vars) {
  return RatFunc(MultiPoly::constant(std::move(vars), Rational(1)));
}

RatFunc RatFunc::constant(VarListPtr vars, const Rational& c) {
  return RatFunc(MultiPoly::constant(std::move(vars), c));
}

RatFunc RatFunc::variable(VarListPtr vars, std::size_t index) {
  return RatFunc(MultiPoly::variable(std::move(vars), index));
}

namespace {

// lcm of all coefficient denominators, gcd of all coefficient numerators.
void coefficient_span(const MultiPoly& p, mpz_class& num_gcd, mpz_class& den_lcm) {
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
}

}  // namespace

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.vars(), Rational(1));
    return;
  }
  // Common monomial factor.
  Exponents mn = num_.min_exponents();
  Exponents md = den_.min_exponents();
  Exponents m(mn.size());
  bool any = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = std::min(mn[i], md[i]);
    any = any || m[i] > 0;
  }
  if (any) {
    num_ = num_.shifted_down(m);
    den_ = den_.shifted_down(m);
  }
  // Rational content: scale so both polynomials have integer coefficients
  // with overall content 1.
  mpz_class g(0), l(1);
  coefficient_span(num_, g, l);
  coefficient_span(den_, g, l);
  mpq_class scale(l, g);
  scale.canonicalize();
  if (scale != 1) {
    Rational s{scale};
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
  // Exact-division fast path (best effort; no multivariate gcd).
  if (!den_.is_constant()) {
    if (auto q = num_.divided_exactly_by(den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly::constant(num_.vars(), Rational(1));
    }
  }
  // Positive leading coefficient in the denominator.
  if (den_.leading().second.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.vars());
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  *this = *this + o;
  return *this;
}

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc r = RatFunc::one(vars());
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

bool RatFunc::eq(const RatFunc& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::partial(std::size_t var) const {
  if (den_.is_constant())
    return RatFunc(num_.partial(var), den_);
  MultiPoly dden = den_.partial(var);
  if (dden.is_zero())
    return RatFunc(num_.partial(var), den_);
  return RatFunc(num_.partial(var) * den_ - num_ * dden, den_ * den_);
}

RatFunc RatFunc::partial(const std::string& var) const {
  const VarList& names = *vars();
  auto it = std::find(names.begin(), names.end(), var);
  if (it == names.end()) throw UnknownVariable(var);
  return partial(static_cast<std::size_t>(it - names.begin()));
}

}  // namespace kv
