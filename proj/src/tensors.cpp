#include "kv/tensors.hpp"

#include <stdexcept>

#include "kv/errors.hpp"

namespace kv {

namespace {

void require_same_alg(const AlgebroidPtr& a, const AlgebroidPtr& b) {
  if (a != b) throw Error("tensors defined over different algebroid instances");
}

void require_square(const Matrix& m, std::size_t rank) {
  if (m.rows() != rank || m.cols() != rank) throw RankMismatch("matrix is not rank x rank");
}

}  // namespace

SymTensorContra::SymTensorContra(AlgebroidPtr alg, Matrix h)
    : alg_(std::move(alg)), h_(std::move(h)) {
  require_square(h_, alg_->rank());
  if (!h_.is_symmetric())
    throw SymmetryViolation("contravariant 2-tensor matrix is not symmetric");
}

Section SymTensorContra::sharp(const CoSection& alpha) const {
  if (alpha.size() != alg_->rank()) throw RankMismatch();
  Section r = alg_->zero_section();
  for (std::size_t i = 0; i < alg_->rank(); ++i)
    for (std::size_t j = 0; j < alg_->rank(); ++j)
      if (!h_.at(i, j).is_zero() && !alpha.c[j].is_zero()) r.c[i] += h_.at(i, j) * alpha.c[j];
  return r;
}

RatFunc SymTensorContra::eval(const CoSection& alpha, const CoSection& beta) const {
  RatFunc s = RatFunc::zero(alg_->vars());
  for (std::size_t i = 0; i < alg_->rank(); ++i)
    for (std::size_t j = 0; j < alg_->rank(); ++j) {
      if (alpha.c[i].is_zero() || beta.c[j].is_zero() || h_.at(i, j).is_zero()) continue;
      s += alpha.c[i] * h_.at(i, j) * beta.c[j];
    }
  return s;
}

SymTensorCo::SymTensorCo(AlgebroidPtr alg, Matrix b) : alg_(std::move(alg)), b_(std::move(b)) {
  require_square(b_, alg_->rank());
  if (!b_.is_symmetric()) throw SymmetryViolation("covariant 2-tensor matrix is not symmetric");
}

CoSection SymTensorCo::natural(const Section& x) const {
  if (x.size() != alg_->rank()) throw RankMismatch();
  CoSection r = alg_->zero_cosection();
  for (std::size_t i = 0; i < alg_->rank(); ++i)
    for (std::size_t j = 0; j < alg_->rank(); ++j)
      if (!b_.at(i, j).is_zero() && !x.c[j].is_zero()) r.c[i] += b_.at(i, j) * x.c[j];
  return r;
}

RatFunc SymTensorCo::eval(const Section& x, const Section& y) const {
  RatFunc s = RatFunc::zero(alg_->vars());
  for (std::size_t i = 0; i < alg_->rank(); ++i)
    for (std::size_t j = 0; j < alg_->rank(); ++j) {
      if (x.c[i].is_zero() || y.c[j].is_zero() || b_.at(i, j).is_zero()) continue;
      s += x.c[i] * b_.at(i, j) * y.c[j];
    }
  return s;
}

Cochain SymTensorCo::as_cochain() const { return Cochain::from_matrix(b_); }

BundleMap::BundleMap(AlgebroidPtr alg, Matrix m) : alg_(std::move(alg)), m_(std::move(m)) {
  require_square(m_, alg_->rank());
}

Section BundleMap::apply(const Section& x) const { return alg_->apply(m_, x); }

CoSection BundleMap::co_apply(const CoSection& alpha) const { return alg_->co_apply(m_, alpha); }

TriTensor::TriTensor(VarListPtr vars, std::size_t rank)
    : vars_(std::move(vars)), rank_(rank), t_(rank * rank * rank, RatFunc::zero(vars_)) {}

bool TriTensor::is_zero() const {
  for (const auto& f : t_)
    if (!f.is_zero()) return false;
  return true;
}

RatFunc kv_bracket_at(const SymTensorContra& h1, const SymTensorContra& h2,
                      const CoSection& a1, const CoSection& a2, const CoSection& a3) {
  require_same_alg(h1.alg(), h2.alg());
  const Algebroid& a = *h1.alg();
  Section h1a1 = h1.sharp(a1), h1a2 = h1.sharp(a2), h1a3 = h1.sharp(a3);
  Section h2a1 = h2.sharp(a1), h2a2 = h2.sharp(a2), h2a3 = h2.sharp(a3);

  RatFunc val = a.anchor_apply(h1a1, pairing(a3, h2a2));
  val += a.anchor_apply(h2a1, pairing(a3, h1a2));
  val = val - a.anchor_apply(h1a2, pairing(a3, h2a1));
  val = val - a.anchor_apply(h2a2, pairing(a3, h1a1));
  val += pairing(a1, a.multiply(h1a2, h2a3));
  val += pairing(a1, a.multiply(h2a2, h1a3));
  val = val - pairing(a2, a.multiply(h1a1, h2a3));
  val = val - pairing(a2, a.multiply(h2a1, h1a3));
  val = val - pairing(a3, a.bracket(h1a1, h2a2));
  val = val - pairing(a3, a.bracket(h2a1, h1a2));
  return val * RatFunc::constant(a.vars(), Rational(1, 2));
}

TriTensor kv_bracket(const SymTensorContra& h1, const SymTensorContra& h2) {
  require_same_alg(h1.alg(), h2.alg());
  const Algebroid& a = *h1.alg();
  const std::size_t n = a.rank();
  TriTensor t(a.vars(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        t.at(i, j, k) = kv_bracket_at(h1, h2, a.cobasis(i), a.cobasis(j), a.cobasis(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t.at(i, j, k).eq(-t.at(j, i, k)))
          throw std::logic_error("kv_bracket lost antisymmetry (internal)");
  return t;
}

CoSection dual_product_with(const Algebroid& a, const Matrix& k, const CoSection& alpha,
                            const CoSection& beta) {
  require_square(k, a.rank());
  auto lower = [&](const CoSection& c) {
    Section s = a.zero_section();
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        if (!k.at(i, j).is_zero() && !c.c[j].is_zero()) s.c[i] += k.at(i, j) * c.c[j];
    return s;
  };
  Section ka = lower(alpha);
  Section kb = lower(beta);
  return a.lie_derivative(ka, beta) - a.dual_right(kb, alpha) -
         a.function_differential(pairing(beta, ka));
}

CoSection dual_product(const SymTensorContra& h, const CoSection& alpha, const CoSection& beta) {
  const Algebroid& a = *h.alg();
  Section ha = h.sharp(alpha);
  Section hb = h.sharp(beta);
  return a.lie_derivative(ha, beta) - a.dual_right(hb, alpha) -
         a.function_differential(h.eval(alpha, beta));
}

CoSection twisted_dual_product(const SymTensorContra& h, const BundleMap& n,
                               const CoSection& alpha, const CoSection& beta) {
  AlgebroidPtr def = deform(*h.alg(), n.matrix());
  return twisted_dual_product(h, n, alpha, beta, *def);
}

CoSection twisted_dual_product(const SymTensorContra& h, const BundleMap& n,
                               const CoSection& alpha, const CoSection& beta,
                               const Algebroid& deformed_alg) {
  require_same_alg(h.alg(), n.alg());
  const Algebroid& a = *h.alg();
  Section ha = h.sharp(alpha);
  Section hb = h.sharp(beta);
  RatFunc hab = h.eval(alpha, beta);

  // N-twisted operator formulas over the base algebroid.
  CoSection lie_n = a.lie_derivative(n.apply(ha), beta) + n.co_apply(a.lie_derivative(ha, beta)) -
                    a.lie_derivative(ha, n.co_apply(beta));
  CoSection r_n = a.dual_right(n.apply(hb), alpha) + n.co_apply(a.dual_right(hb, alpha)) -
                  a.dual_right(hb, n.co_apply(alpha));
  CoSection d_n = n.co_apply(a.function_differential(hab));
  CoSection twisted = lie_n - r_n - d_n;

  // Same three operators over deform(A, N).
  CoSection direct = deformed_alg.lie_derivative(ha, beta) - deformed_alg.dual_right(hb, alpha) -
                     deformed_alg.function_differential(hab);
  for (std::size_t i = 0; i < twisted.size(); ++i)
    if (!twisted.c[i].eq(direct.c[i]))
      throw std::logic_error("twisted dual product routes disagree (internal)");
  return twisted;
}

CoSection deformed_dual_product(const SymTensorContra& h, const BundleMap& n,
                                const CoSection& alpha, const CoSection& beta) {
  require_same_alg(h.alg(), n.alg());
  CoSection na = n.co_apply(alpha);
  CoSection nb = n.co_apply(beta);
  return dual_product(h, na, beta) + dual_product(h, alpha, nb) -
         n.co_apply(dual_product(h, alpha, beta));
}

CoSection dual_commutator(const SymTensorContra& h, const CoSection& alpha,
                          const CoSection& beta) {
  return dual_product(h, alpha, beta) - dual_product(h, beta, alpha);
}

CoSection twisted_dual_commutator(const SymTensorContra& h, const BundleMap& n,
                                  const CoSection& alpha, const CoSection& beta) {
  AlgebroidPtr def = deform(*h.alg(), n.matrix());
  return twisted_dual_product(h, n, alpha, beta, *def) -
         twisted_dual_product(h, n, beta, alpha, *def);
}

CoSection deformed_dual_commutator(const SymTensorContra& h, const BundleMap& n,
                                   const CoSection& alpha, const CoSection& beta) {
  return deformed_dual_product(h, n, alpha, beta) - deformed_dual_product(h, n, beta, alpha);
}

SymTensorCo invert(const SymTensorContra& h) {
  auto inv = h.matrix().inverse();
  if (!inv) throw Degenerate();
  return SymTensorCo(h.alg(), std::move(*inv));
}

SymTensorContra invert(const SymTensorCo& b) {
  auto inv = b.matrix().inverse();
  if (!inv) throw Degenerate();
  return SymTensorContra(b.alg(), std::move(*inv));
}

BundleMap power(const BundleMap& n, unsigned k) {
  return BundleMap(n.alg(), n.matrix().pow(k));
}

SymTensorContra deformed(const SymTensorContra& h, const BundleMap& n, unsigned k) {
  require_same_alg(h.alg(), n.alg());
  if (k == 0) return h;
  Matrix m = n.matrix().pow(k) * h.matrix();
  if (!m.is_symmetric())
    throw SymmetryViolation("N^k H# is not symmetric (N o H# = H# o N* fails)");
  return SymTensorContra(h.alg(), std::move(m));
}

SymTensorCo deformed(const SymTensorCo& b, const BundleMap& n, unsigned k) {
  require_same_alg(b.alg(), n.alg());
  if (k == 0) return b;
  Matrix m = b.matrix() * n.matrix().pow(k);
  if (!m.is_symmetric())
    throw SymmetryViolation("B# N^k is not symmetric (B(Nx,y) = B(x,Ny) fails)");
  return SymTensorCo(b.alg(), std::move(m));
}

Matrix deformed_co_matrix(const SymTensorCo& b, const BundleMap& n, unsigned k) {
  require_same_alg(b.alg(), n.alg());
  return b.matrix() * n.matrix().pow(k);
}

AlgebroidPtr dual_algebroid(const SymTensorContra& h) {
  const Algebroid& a = *h.alg();
  const std::size_t n = a.rank();
  std::vector<RatFunc> gamma;
  gamma.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CoSection p = dual_product(h, a.cobasis(i), a.cobasis(j));
      for (std::size_t k = 0; k < n; ++k) gamma.push_back(p.c[k]);
    }
  return std::make_shared<const Algebroid>(a.chart(), n, std::move(gamma),
                                           a.anchor() * h.matrix());
}

}  // namespace kv
