#pragma once

#include <string>
#include <vector>

#include "kv/certificate.hpp"
#include "kv/tensors.hpp"

namespace kv {

// [[H,H]] = 0. On flat-tangent algebroids the coordinate criterion
// sum_l (h_jl d_l h_ik - h_il d_l h_jk) = 0 is evaluated as a second route
// and cross-asserted entrywise.
Certificate check_koszul_vinberg(const SymTensorContra& h);

// [[H1,H2]] = 0.
Certificate check_compatible(const SymTensorContra& h1, const SymTensorContra& h2);

// Torsion Nx.Ny - N(x._N y) vanishes on all basis pairs.
Certificate check_nijenhuis(const BundleMap& n);

// The torsion at arbitrary sections (tensoriality audits evaluate this
// off-basis).
Section nijenhuis_torsion_at(const BundleMap& n, const Section& x, const Section& y);

// KVN: H Koszul-Vinberg, N Nijenhuis (both re-verified), N o H# = H# o N*,
// and *^{H#} = .^{H#}_{N*}. The product identity is evaluated on basis pairs
// only after the matrix condition holds (that is what makes the difference
// tensorial).
Certificate check_kvn(const SymTensorContra& h, const BundleMap& n);

// delta B = 0; on flat charts the coordinate oracle dB_ij/dx^k = dB_kj/dx^i
// is cross-asserted.
Certificate check_pseudo_hessian(const SymTensorCo& b);

// KVB: H Koszul-Vinberg, B a 2-cocycle, and B_N a 2-cocycle for
// N = H# o B#. The certificate's derived tensors carry N and B_N.
Certificate check_kvb(const SymTensorContra& h, const SymTensorCo& b);

// [[B,B]]_{A*} = 0 over the dual algebroid induced by H, cross-asserted
// against the direct ten-term expansion. Throws PreconditionFailed when H is
// not Koszul-Vinberg.
Certificate check_complementary(const SymTensorContra& h, const SymTensorCo& b);

// HN: B(Nx,y) = B(x,Ny), delta B = 0, N Nijenhuis, delta B_N = 0.
Certificate check_hessian_nijenhuis(const SymTensorCo& b, const BundleMap& n);

// Same verdict from delta B_N = delta B_{N^2} = 0 alone, given the
// precondition (symmetry + delta B = 0, re-verified; PreconditionFailed on
// failure). Cross-asserted against check_hessian_nijenhuis on every call.
Certificate check_hessian_nijenhuis_via_squares(const SymTensorCo& b, const BundleMap& n);

// N = H1# o (H#)^{-1}. Throws Degenerate. Makes no structure claims; run
// check_nijenhuis on the result.
BundleMap derive_nijenhuis(const SymTensorContra& h1, const SymTensorContra& h);

// Tower of deformed tensors with all member and pairwise certificates.
struct Hierarchy {
  std::string base_kind;  // "contravariant" | "covariant"
  unsigned depth = 0;
  std::vector<Matrix> members;             // depth + 1 tensors, member k at power k
  std::vector<Certificate> member_certs;   // KV resp. pseudo-Hessian per member
  std::vector<Certificate> pair_certs;     // (depth+1)^2, symmetric table

  const Certificate& pair(std::size_t k, std::size_t l) const {
    return pair_certs[k * (depth + 1) + l];
  }
  bool all_hold() const;
};

// Requires (H,N) KVN resp. (B,N) HN; PreconditionFailed otherwise. Members
// are H_{N^k} (checked Koszul-Vinberg, pairwise compatible) resp. B_{N^k}
// (checked pseudo-Hessian; pair verdicts follow from the endpoints by
// linearity of the coboundary).
Hierarchy hierarchy(const SymTensorContra& h, const BundleMap& n, unsigned depth);
Hierarchy hierarchy(const SymTensorCo& b, const BundleMap& n, unsigned depth);

}  // namespace kv
