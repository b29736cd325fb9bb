#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kv/certificate.hpp"
#include "kv/matrix.hpp"

namespace kv {

// Coordinate chart of a flat manifold. The empty chart models a point, in
// which case an algebroid over it is a finite-dimensional left-symmetric
// algebra over the rationals.
struct Chart {
  VarListPtr vars;

  static Chart make(std::vector<std::string> names) { return Chart{make_variables(std::move(names))}; }
  std::size_t dim() const { return vars->size(); }
};

// x = sum_i c[i] e_i over the frame of an algebroid.
struct Section {
  std::vector<RatFunc> c;
  std::size_t size() const { return c.size(); }
};

// alpha = sum_i c[i] eps^i over the coframe.
struct CoSection {
  std::vector<RatFunc> c;
  std::size_t size() const { return c.size(); }
};

Section operator+(const Section& a, const Section& b);
Section operator-(const Section& a, const Section& b);
Section scaled(const RatFunc& f, const Section& x);
CoSection operator+(const CoSection& a, const CoSection& b);
CoSection operator-(const CoSection& a, const CoSection& b);
CoSection scaled(const RatFunc& f, const CoSection& a);
bool is_zero(const Section& x);
bool is_zero(const CoSection& a);

// <alpha, x> = sum_i alpha_i x_i.
RatFunc pairing(const CoSection& alpha, const Section& x);

// Degree-k cochain: k arguments, antisymmetric in the first k-1. Canonical
// storage keeps one component per strictly increasing (k-1)-tuple and free
// last index; antisymmetry reconstructs the rest.
class Cochain {
 public:
  Cochain(VarListPtr vars, std::size_t rank, std::size_t degree);  // zero cochain
  static Cochain from_cosection(VarListPtr vars, const CoSection& a);   // degree 1
  static Cochain from_matrix(const Matrix& m);                          // degree 2

  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  const VarListPtr& vars() const { return vars_; }

  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
  const RatFunc& component(std::size_t tuple_idx, std::size_t last) const;
  RatFunc& component(std::size_t tuple_idx, std::size_t last);

  // Evaluation on basis indices (args.size() == degree); signs and zeros from
  // antisymmetry.
  RatFunc eval_basis(const std::vector<std::size_t>& args) const;
  // Multilinear extension to arbitrary sections.
  RatFunc eval(const std::vector<Section>& args) const;

  bool is_zero() const;

 private:
  VarListPtr vars_;
  std::size_t rank_, degree_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::map<std::vector<std::size_t>, std::size_t> tuple_index_;
  std::vector<RatFunc> comp_;  // tuples_.size() * rank_
};

// Left-symmetric algebroid over a flat chart: rank-n anchored module with
// structure functions gamma^k_{ij} (e_i . e_j = sum_k gamma^k_{ij} e_k) and
// an anchor matrix (column i = a(e_i) in the coordinate frame). Instances are
// immutable; validity is certified separately by check_axioms.
class Algebroid {
 public:
  // gamma is indexed by ((i*n)+j)*n+k.
  Algebroid(Chart chart, std::size_t rank, std::vector<RatFunc> gamma, Matrix anchor);

  // Gamma = 0, anchor = identity: the algebroid of the standard flat
  // connection on the chart.
  static Algebroid flat_tangent(const Chart& chart);

  const Chart& chart() const { return chart_; }
  const VarListPtr& vars() const { return chart_.vars; }
  std::size_t rank() const { return rank_; }
  const RatFunc& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * rank_ + j) * rank_ + k];
  }
  const Matrix& anchor() const { return anchor_; }
  bool is_flat_tangent() const;

  Section zero_section() const;
  Section basis(std::size_t i) const;
  CoSection zero_cosection() const;
  CoSection cobasis(std::size_t i) const;

  // x . y, C-infinity-linear in x, Leibniz in y.
  Section multiply(const Section& x, const Section& y) const;
  // a(x)(f).
  RatFunc anchor_apply(const Section& x, const RatFunc& f) const;
  // [x, y] = x.y - y.x (sub-adjacent bracket).
  Section bracket(const Section& x, const Section& y) const;
  // (d f)(e_i) = a(e_i)(f).
  CoSection function_differential(const RatFunc& f) const;
  // <L_x alpha, y> = a(x)<alpha,y> - <alpha,[x,y]>.
  CoSection lie_derivative(const Section& x, const CoSection& alpha) const;
  // <L_x xi, y> = a(x)<xi,y> - <xi, x.y>.
  CoSection dual_left(const Section& x, const CoSection& xi) const;
  // <R_x xi, y> = -<xi, y.x>.
  CoSection dual_right(const Section& x, const CoSection& xi) const;

  // Bundle-map action m.x on sections and the transpose action on
  // cosections.
  Section apply(const Matrix& m, const Section& x) const;
  CoSection co_apply(const Matrix& m, const CoSection& alpha) const;

  // x ._N y = Nx.y + x.Ny - N(x.y).
  Section deformed_multiply(const Matrix& n, const Section& x, const Section& y) const;

 private:
  Chart chart_;
  std::size_t rank_;
  std::vector<RatFunc> gamma_;
  Matrix anchor_;
};

using AlgebroidPtr = std::shared_ptr<const Algebroid>;

// Algebroid with product ._N and anchor a o N. Passes check_axioms exactly
// when N is Nijenhuis; the caller is expected to run it.
AlgebroidPtr deform(const Algebroid& a, const Matrix& n);

// Associator symmetry on basis triples, the anchor-morphism condition, and
// sub-adjacent Jacobi; basis checks extend to all rational-function sections
// because the function terms cancel once the anchor condition holds.
Certificate check_axioms(const Algebroid& a);

// Left-symmetric coboundary, degree k -> k+1 (degree >= 1).
Cochain coboundary(const Algebroid& a, const Cochain& phi);

}  // namespace kv
