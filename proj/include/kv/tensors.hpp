#pragma once

#include "kv/algebroid.hpp"

namespace kv {

// Symmetric contravariant 2-tensor H with musical map H#(alpha) = h * alpha.
class SymTensorContra {
 public:
  SymTensorContra(AlgebroidPtr alg, Matrix h);

  const AlgebroidPtr& alg() const { return alg_; }
  const Matrix& matrix() const { return h_; }

  Section sharp(const CoSection& alpha) const;
  RatFunc eval(const CoSection& alpha, const CoSection& beta) const;

 private:
  AlgebroidPtr alg_;
  Matrix h_;
};

// Symmetric covariant 2-tensor B with natural map B#(x) = b * x.
class SymTensorCo {
 public:
  SymTensorCo(AlgebroidPtr alg, Matrix b);

  const AlgebroidPtr& alg() const { return alg_; }
  const Matrix& matrix() const { return b_; }

  CoSection natural(const Section& x) const;
  RatFunc eval(const Section& x, const Section& y) const;
  Cochain as_cochain() const;

 private:
  AlgebroidPtr alg_;
  Matrix b_;
};

// Bundle map N: A -> A in the frame, N(e_j) = sum_i m[i][j] e_i; the dual
// N* acts on cosections by the transpose.
class BundleMap {
 public:
  BundleMap(AlgebroidPtr alg, Matrix m);

  const AlgebroidPtr& alg() const { return alg_; }
  const Matrix& matrix() const { return m_; }

  Section apply(const Section& x) const;
  CoSection co_apply(const CoSection& alpha) const;

 private:
  AlgebroidPtr alg_;
  Matrix m_;
};

// Element of Gamma(wedge^2 A (x) A): antisymmetric in the first two slots.
class TriTensor {
 public:
  TriTensor(VarListPtr vars, std::size_t rank);

  std::size_t rank() const { return rank_; }
  RatFunc& at(std::size_t i, std::size_t j, std::size_t k) {
    return t_[(i * rank_ + j) * rank_ + k];
  }
  const RatFunc& at(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * rank_ + j) * rank_ + k];
  }
  bool is_zero() const;

 private:
  VarListPtr vars_;
  std::size_t rank_;
  std::vector<RatFunc> t_;
};

// Koszul-Vinberg bracket [[H1, H2]] (the symmetrized two-tensor extension;
// for H1 == H2 it reduces to the unpolarized bracket). Evaluated on basis
// coframes; tensoriality makes that determine it.
TriTensor kv_bracket(const SymTensorContra& h1, const SymTensorContra& h2);

// The same displayed formula at arbitrary covector arguments (the
// tensoriality audit evaluates this off-basis).
RatFunc kv_bracket_at(const SymTensorContra& h1, const SymTensorContra& h2,
                      const CoSection& a1, const CoSection& a2, const CoSection& a3);

// alpha .^K beta = L_{K alpha} beta - R_{K beta} alpha - d <K alpha, beta>
// for an arbitrary bundle map K: A* -> A given by its matrix.
CoSection dual_product_with(const Algebroid& a, const Matrix& k, const CoSection& alpha,
                            const CoSection& beta);

// alpha .^{H#} beta.
CoSection dual_product(const SymTensorContra& h, const CoSection& alpha, const CoSection& beta);

// alpha *^{H#} beta: the dual product taken over the N-deformed structure.
// Computed both from the N-twisted operator formulas and from operations on
// deform(A, N); the two routes are cross-asserted on every call.
CoSection twisted_dual_product(const SymTensorContra& h, const BundleMap& n,
                               const CoSection& alpha, const CoSection& beta);
CoSection twisted_dual_product(const SymTensorContra& h, const BundleMap& n,
                               const CoSection& alpha, const CoSection& beta,
                               const Algebroid& deformed_alg);

// alpha .^{H#}_{N*} beta = N*alpha .^{H#} beta + alpha .^{H#} N*beta
//                          - N*(alpha .^{H#} beta).
CoSection deformed_dual_product(const SymTensorContra& h, const BundleMap& n,
                                const CoSection& alpha, const CoSection& beta);

// Commutators of the three products above.
CoSection dual_commutator(const SymTensorContra& h, const CoSection& alpha,
                          const CoSection& beta);
CoSection twisted_dual_commutator(const SymTensorContra& h, const BundleMap& n,
                                  const CoSection& alpha, const CoSection& beta);
CoSection deformed_dual_commutator(const SymTensorContra& h, const BundleMap& n,
                                   const CoSection& alpha, const CoSection& beta);

// Exact inverses between the two variances. Throws Degenerate when the
// determinant is identically zero. Generic nondegeneracy only: domain
// restrictions like x > 0 are the caller's business.
SymTensorCo invert(const SymTensorContra& h);
SymTensorContra invert(const SymTensorCo& b);

BundleMap power(const BundleMap& n, unsigned k);

// H_{N^k} with matrix N^k h; requires the result to be symmetric
// (equivalently N o H# = H# o N*), else SymmetryViolation.
SymTensorContra deformed(const SymTensorContra& h, const BundleMap& n, unsigned k);
// B_{N^k} with matrix b N^k; requires b N symmetric, else SymmetryViolation.
SymTensorCo deformed(const SymTensorCo& b, const BundleMap& n, unsigned k);
// Raw matrix b N^k for use as a (possibly asymmetric) degree-2 cochain.
Matrix deformed_co_matrix(const SymTensorCo& b, const BundleMap& n, unsigned k);

// (A*, .^{H#}, a o H#). Precondition [[H,H]] = 0 is the caller's (not
// re-verified here).
AlgebroidPtr dual_algebroid(const SymTensorContra& h);

}  // namespace kv
