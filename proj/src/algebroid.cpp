#include "kv/algebroid.hpp"

#include <algorithm>

#include "kv/errors.hpp"

namespace kv {

Section operator+(const Section& a, const Section& b) {
  if (a.size() != b.size()) throw RankMismatch();
  Section r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  return r;
}

Section operator-(const Section& a, const Section& b) {
  if (a.size() != b.size()) throw RankMismatch();
  Section r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  return r;
}

Section scaled(const RatFunc& f, const Section& x) {
  Section r = x;
  for (auto& v : r.c) v = v * f;
  return r;
}

CoSection operator+(const CoSection& a, const CoSection& b) {
  if (a.size() != b.size()) throw RankMismatch();
  CoSection r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  return r;
}

CoSection operator-(const CoSection& a, const CoSection& b) {
  if (a.size() != b.size()) throw RankMismatch();
  CoSection r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  return r;
}

CoSection scaled(const RatFunc& f, const CoSection& a) {
  CoSection r = a;
  for (auto& v : r.c) v = v * f;
  return r;
}

bool is_zero(const Section& x) {
  return std::all_of(x.c.begin(), x.c.end(), [](const RatFunc& f) { return f.is_zero(); });
}

bool is_zero(const CoSection& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](const RatFunc& f) { return f.is_zero(); });
}

RatFunc pairing(const CoSection& alpha, const Section& x) {
  if (alpha.size() != x.size()) throw RankMismatch();
  if (x.size() == 0) throw Error("pairing on rank-0 module has no variable context");
  RatFunc s = RatFunc::zero(x.c[0].vars());
  for (std::size_t i = 0; i < x.size(); ++i) s += alpha.c[i] * x.c[i];
  return s;
}

// ---------------------------------------------------------------------------
// Cochain

namespace {

void increasing_tuples(std::size_t rank, std::size_t len, std::vector<std::size_t>& cur,
                       std::size_t start, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < rank; ++i) {
    cur.push_back(i);
    increasing_tuples(rank, len, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

Cochain::Cochain(VarListPtr vars, std::size_t rank, std::size_t degree)
    : vars_(std::move(vars)), rank_(rank), degree_(degree) {
  if (degree_ < 1) throw Error("cochain degree must be >= 1");
  std::vector<std::size_t> cur;
  increasing_tuples(rank_, degree_ - 1, cur, 0, tuples_);
  for (std::size_t t = 0; t < tuples_.size(); ++t) tuple_index_[tuples_[t]] = t;
  comp_.assign(tuples_.size() * rank_, RatFunc::zero(vars_));
}

Cochain Cochain::from_cosection(VarListPtr vars, const CoSection& a) {
  Cochain c(std::move(vars), a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) c.component(0, i) = a.c[i];
  return c;
}

Cochain Cochain::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw RankMismatch("cochain matrix must be square");
  Cochain c(m.vars(), m.rows(), 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c.component(i, j) = m.at(i, j);
  return c;
}

const RatFunc& Cochain::component(std::size_t tuple_idx, std::size_t last) const {
  return comp_[tuple_idx * rank_ + last];
}

RatFunc& Cochain::component(std::size_t tuple_idx, std::size_t last) {
  return comp_[tuple_idx * rank_ + last];
}

RatFunc Cochain::eval_basis(const std::vector<std::size_t>& args) const {
  if (args.size() != degree_) throw RankMismatch("cochain arity mismatch");
  std::vector<std::size_t> head(args.begin(), args.end() - 1);
  int sign = 1;
  for (std::size_t i = 1; i < head.size(); ++i)
    for (std::size_t j = i; j > 0 && head[j] < head[j - 1]; --j) {
      std::swap(head[j], head[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < head.size(); ++i)
    if (head[i] == head[i - 1]) return RatFunc::zero(vars_);
  const RatFunc& v = component(tuple_index_.at(head), args.back());
  return sign == 1 ? v : -v;
}

RatFunc Cochain::eval(const std::vector<Section>& args) const {
  if (args.size() != degree_) throw RankMismatch("cochain arity mismatch");
  for (const auto& s : args)
    if (s.size() != rank_) throw RankMismatch();
  RatFunc total = RatFunc::zero(vars_);
  std::vector<std::size_t> idx(degree_, 0);
  for (;;) {
    RatFunc coeff = RatFunc::one(vars_);
    bool zero = false;
    for (std::size_t s = 0; s < degree_ && !zero; ++s) {
      if (args[s].c[idx[s]].is_zero())
        zero = true;
      else
        coeff = coeff * args[s].c[idx[s]];
    }
    if (!zero) total += coeff * eval_basis(idx);
    std::size_t s = 0;
    while (s < degree_ && ++idx[s] == rank_) {
      idx[s] = 0;
      ++s;
    }
    if (s == degree_) break;
  }
  return total;
}

bool Cochain::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const RatFunc& f) { return f.is_zero(); });
}

// ---------------------------------------------------------------------------
// Algebroid

Algebroid::Algebroid(Chart chart, std::size_t rank, std::vector<RatFunc> gamma, Matrix anchor)
    : chart_(std::move(chart)), rank_(rank), gamma_(std::move(gamma)), anchor_(std::move(anchor)) {
  if (gamma_.size() != rank_ * rank_ * rank_)
    throw ValidationError("structure-function array must have rank^3 entries");
  if (anchor_.rows() != chart_.dim() || anchor_.cols() != rank_)
    throw ValidationError("anchor matrix must be (chart dim) x rank");
}

Algebroid Algebroid::flat_tangent(const Chart& chart) {
  std::size_t n = chart.dim();
  std::vector<RatFunc> gamma(n * n * n, RatFunc::zero(chart.vars));
  return Algebroid(chart, n, std::move(gamma), Matrix::identity(chart.vars, n));
}

bool Algebroid::is_flat_tangent() const {
  if (rank_ != chart_.dim()) return false;
  for (const auto& g : gamma_)
    if (!g.is_zero()) return false;
  return anchor_.eq(Matrix::identity(vars(), rank_));
}

Section Algebroid::zero_section() const {
  return Section{std::vector<RatFunc>(rank_, RatFunc::zero(vars()))};
}

Section Algebroid::basis(std::size_t i) const {
  Section s = zero_section();
  s.c.at(i) = RatFunc::one(vars());
  return s;
}

CoSection Algebroid::zero_cosection() const {
  return CoSection{std::vector<RatFunc>(rank_, RatFunc::zero(vars()))};
}

CoSection Algebroid::cobasis(std::size_t i) const {
  CoSection s = zero_cosection();
  s.c.at(i) = RatFunc::one(vars());
  return s;
}

RatFunc Algebroid::anchor_apply(const Section& x, const RatFunc& f) const {
  if (x.size() != rank_) throw RankMismatch();
  RatFunc r = RatFunc::zero(vars());
  if (f.is_constant()) return r;
  std::vector<RatFunc> df;
  df.reserve(chart_.dim());
  for (std::size_t mu = 0; mu < chart_.dim(); ++mu) df.push_back(f.partial(mu));
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x.c[i].is_zero()) continue;
    RatFunc s = RatFunc::zero(vars());
    for (std::size_t mu = 0; mu < chart_.dim(); ++mu) s += anchor_.at(mu, i) * df[mu];
    r += x.c[i] * s;
  }
  return r;
}

Section Algebroid::multiply(const Section& x, const Section& y) const {
  if (x.size() != rank_ || y.size() != rank_) throw RankMismatch();
  Section r = zero_section();
  for (std::size_t j = 0; j < rank_; ++j) r.c[j] = anchor_apply(x, y.c[j]);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y.c[j].is_zero()) continue;
      RatFunc fg = x.c[i] * y.c[j];
      for (std::size_t k = 0; k < rank_; ++k) {
        const RatFunc& g = gamma(i, j, k);
        if (!g.is_zero()) r.c[k] += fg * g;
      }
    }
  }
  return r;
}

Section Algebroid::bracket(const Section& x, const Section& y) const {
  return multiply(x, y) - multiply(y, x);
}

CoSection Algebroid::function_differential(const RatFunc& f) const {
  CoSection r = zero_cosection();
  for (std::size_t i = 0; i < rank_; ++i) r.c[i] = anchor_apply(basis(i), f);
  return r;
}

CoSection Algebroid::lie_derivative(const Section& x, const CoSection& alpha) const {
  if (alpha.size() != rank_) throw RankMismatch();
  CoSection r = zero_cosection();
  for (std::size_t j = 0; j < rank_; ++j)
    r.c[j] = anchor_apply(x, alpha.c[j]) - pairing(alpha, bracket(x, basis(j)));
  return r;
}

CoSection Algebroid::dual_left(const Section& x, const CoSection& xi) const {
  if (xi.size() != rank_) throw RankMismatch();
  CoSection r = zero_cosection();
  for (std::size_t j = 0; j < rank_; ++j)
    r.c[j] = anchor_apply(x, xi.c[j]) - pairing(xi, multiply(x, basis(j)));
  return r;
}

CoSection Algebroid::dual_right(const Section& x, const CoSection& xi) const {
  if (xi.size() != rank_) throw RankMismatch();
  CoSection r = zero_cosection();
  for (std::size_t j = 0; j < rank_; ++j) r.c[j] = -pairing(xi, multiply(basis(j), x));
  return r;
}

Section Algebroid::apply(const Matrix& m, const Section& x) const {
  if (m.rows() != rank_ || m.cols() != rank_ || x.size() != rank_) throw RankMismatch();
  Section r = zero_section();
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (!m.at(i, j).is_zero() && !x.c[j].is_zero()) r.c[i] += m.at(i, j) * x.c[j];
  return r;
}

CoSection Algebroid::co_apply(const Matrix& m, const CoSection& alpha) const {
  if (m.rows() != rank_ || m.cols() != rank_ || alpha.size() != rank_) throw RankMismatch();
  CoSection r = zero_cosection();
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i)
      if (!m.at(i, j).is_zero() && !alpha.c[i].is_zero()) r.c[j] += m.at(i, j) * alpha.c[i];
  return r;
}

Section Algebroid::deformed_multiply(const Matrix& n, const Section& x, const Section& y) const {
  return multiply(apply(n, x), y) + multiply(x, apply(n, y)) - apply(n, multiply(x, y));
}

AlgebroidPtr deform(const Algebroid& a, const Matrix& n) {
  const std::size_t r = a.rank();
  if (n.rows() != r || n.cols() != r) throw RankMismatch();
  std::vector<RatFunc> gamma;
  gamma.reserve(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Section p = a.deformed_multiply(n, a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < r; ++k) gamma.push_back(p.c[k]);
    }
  return std::make_shared<const Algebroid>(a.chart(), r, std::move(gamma), a.anchor() * n);
}

// ---------------------------------------------------------------------------
// Axioms

Certificate check_axioms(const Algebroid& a) {
  Certificate cert;
  const std::size_t n = a.rank();
  const std::size_t m = a.chart().dim();

  auto associator = [&](std::size_t i, std::size_t j, std::size_t k) {
    Section ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
    return a.multiply(ei, a.multiply(ej, ek)) - a.multiply(a.multiply(ei, ej), ek);
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Section r = associator(i, j, k) - associator(j, i, k);
        for (std::size_t l = 0; l < n; ++l)
          cert.add_residual("associator-symmetry", {i + 1, j + 1, k + 1, l + 1}, r.c[l]);
      }

  // a([e_i,e_j]) = [a(e_i), a(e_j)] as coordinate vector fields.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t mu = 0; mu < m; ++mu) {
        RatFunc lhs = RatFunc::zero(a.vars());
        for (std::size_t k = 0; k < n; ++k) {
          RatFunc g = a.gamma(i, j, k) - a.gamma(j, i, k);
          if (!g.is_zero()) lhs += g * a.anchor().at(mu, k);
        }
        RatFunc rhs = RatFunc::zero(a.vars());
        for (std::size_t nu = 0; nu < m; ++nu)
          rhs += a.anchor().at(nu, i) * a.anchor().at(mu, j).partial(nu) -
                 a.anchor().at(nu, j) * a.anchor().at(mu, i).partial(nu);
        cert.add_residual("anchor-morphism", {i + 1, j + 1, mu + 1}, lhs - rhs);
      }
    }

  // Jacobi for the sub-adjacent bracket, checked rather than trusted.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Section ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
        Section jac = a.bracket(a.bracket(ei, ej), ek) + a.bracket(a.bracket(ej, ek), ei) +
                      a.bracket(a.bracket(ek, ei), ej);
        for (std::size_t l = 0; l < n; ++l)
          cert.add_residual("jacobi", {i + 1, j + 1, k + 1, l + 1}, jac.c[l]);
      }

  return cert;
}

// ---------------------------------------------------------------------------
// Coboundary

namespace {

RatFunc coboundary_at(const Algebroid& a, const Cochain& phi, const std::vector<std::size_t>& t) {
  const std::size_t d = phi.degree();
  RatFunc val = RatFunc::zero(a.vars());
  // sum_i (-1)^{i+1} a(x_i) phi(..., x_i omitted, ...)
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::size_t> rest;
    rest.reserve(d);
    for (std::size_t q = 0; q <= d; ++q)
      if (q != i) rest.push_back(t[q]);
    RatFunc term = a.anchor_apply(a.basis(t[i]), phi.eval_basis(rest));
    val = (i % 2 == 0) ? val + term : val - term;
  }
  // - sum_i (-1)^{i+1} phi(..., x_i omitted ..., x_i . x_{d+1})
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Section> args;
    args.reserve(d);
    for (std::size_t q = 0; q < d; ++q)
      if (q != i) args.push_back(a.basis(t[q]));
    args.push_back(a.multiply(a.basis(t[i]), a.basis(t[d])));
    RatFunc term = phi.eval(args);
    val = (i % 2 == 0) ? val - term : val + term;
  }
  // + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], ..., x_{d+1})
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Section> args;
      args.reserve(d);
      args.push_back(a.bracket(a.basis(t[i]), a.basis(t[j])));
      for (std::size_t q = 0; q < d; ++q)
        if (q != i && q != j) args.push_back(a.basis(t[q]));
      args.push_back(a.basis(t[d]));
      RatFunc term = phi.eval(args);
      val = ((i + j) % 2 == 0) ? val + term : val - term;
    }
  return val;
}

}  // namespace

Cochain coboundary(const Algebroid& a, const Cochain& phi) {
  if (phi.rank() != a.rank()) throw RankMismatch("cochain rank mismatch");
  const std::size_t n = a.rank();
  const std::size_t d = phi.degree();
  Cochain result(a.vars(), n, d + 1);
  if (n == 0) return result;

  std::size_t total = 1;
  for (std::size_t q = 0; q <= d; ++q) total *= n;
  std::vector<RatFunc> dense(total, RatFunc::zero(a.vars()));
  std::vector<std::size_t> t(d + 1, 0);
  for (std::size_t lin = 0; lin < total; ++lin) {
    std::size_t rem = lin;
    for (std::size_t q = 0; q <= d; ++q) {
      t[q] = rem % n;
      rem /= n;
    }
    dense[lin] = coboundary_at(a, phi, t);
  }

  auto linear = [&](const std::vector<std::size_t>& idx) {
    std::size_t lin = 0;
    std::size_t mul = 1;
    for (std::size_t q = 0; q <= d; ++q) {
      lin += idx[q] * mul;
      mul *= n;
    }
    return lin;
  };

  // Antisymmetry in the first d slots, verified on adjacent transpositions.
  for (std::size_t lin = 0; lin < total; ++lin) {
    std::size_t rem = lin;
    for (std::size_t q = 0; q <= d; ++q) {
      t[q] = rem % n;
      rem /= n;
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      std::vector<std::size_t> s = t;
      std::swap(s[p], s[p + 1]);
      if (!dense[lin].eq(-dense[linear(s)]))
        throw Error("coboundary result is not antisymmetric (internal)");
    }
  }

  for (std::size_t ti = 0; ti < result.tuples().size(); ++ti) {
    const auto& head = result.tuples()[ti];
    for (std::size_t last = 0; last < n; ++last) {
      std::vector<std::size_t> idx = head;
      idx.push_back(last);
      result.component(ti, last) = dense[linear(idx)];
    }
  }
  return result;
}

}  // namespace kv
