#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kv/algebroid.hpp"
#include "kv/expr.hpp"
#include "kv/matrix.hpp"

namespace kvtest {

// Deterministic across platforms: raw engine draws only, no std distributions.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(g() % n); }
  long in_range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Random polynomial of total degree <= max_deg with small integer
// coefficients; may be zero unless nonzero is set.
inline kv::MultiPoly random_poly(Rng& rng, const kv::VarListPtr& vars, unsigned max_deg,
                                 std::size_t max_terms, bool nonzero = false) {
  for (;;) {
    kv::MultiPoly p(vars);
    std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
      kv::Exponents e(vars->size(), 0);
      unsigned budget = max_deg == 0 ? 0 : static_cast<unsigned>(rng.below(max_deg + 1));
      for (unsigned d = 0; d < budget && !vars->empty(); ++d) e[rng.below(vars->size())] += 1;
      long c = rng.in_range(-3, 3);
      p.add_term(e, kv::Rational(c));
    }
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline kv::RatFunc random_ratfunc(Rng& rng, const kv::VarListPtr& vars, unsigned max_deg = 3,
                                  std::size_t max_terms = 3) {
  kv::MultiPoly num = random_poly(rng, vars, max_deg, max_terms);
  kv::MultiPoly den = random_poly(rng, vars, max_deg, max_terms, /*nonzero=*/true);
  return kv::RatFunc(std::move(num), std::move(den));
}

inline kv::RatFunc random_poly_rf(Rng& rng, const kv::VarListPtr& vars, unsigned max_deg = 2,
                                  std::size_t max_terms = 2) {
  return kv::RatFunc(random_poly(rng, vars, max_deg, max_terms));
}

inline kv::Matrix random_matrix(Rng& rng, const kv::VarListPtr& vars, std::size_t n,
                                unsigned max_deg = 2) {
  kv::Matrix m(vars, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly_rf(rng, vars, max_deg);
  return m;
}

inline kv::Matrix random_symmetric(Rng& rng, const kv::VarListPtr& vars, std::size_t n,
                                   unsigned max_deg = 2) {
  kv::Matrix m(vars, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m.at(i, j) = random_poly_rf(rng, vars, max_deg);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

inline kv::Section random_section(Rng& rng, const kv::Algebroid& a, unsigned max_deg = 2) {
  kv::Section s = a.zero_section();
  for (auto& c : s.c) c = random_poly_rf(rng, a.vars(), max_deg);
  return s;
}

inline kv::CoSection random_cosection(Rng& rng, const kv::Algebroid& a, unsigned max_deg = 2) {
  kv::CoSection s = a.zero_cosection();
  for (auto& c : s.c) c = random_poly_rf(rng, a.vars(), max_deg);
  return s;
}

inline kv::RatFunc rf(const std::string& text, const kv::VarListPtr& vars) {
  return kv::parse_expr(text, vars);
}

// n x n matrix from expression strings, row major.
inline kv::Matrix mat(const kv::VarListPtr& vars, std::size_t n,
                      const std::vector<std::string>& entries) {
  kv::Matrix m(vars, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rf(entries[i * n + j], vars);
  return m;
}

}  // namespace kvtest
