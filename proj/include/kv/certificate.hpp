#pragma once

#include <string>
#include <vector>

#include "kv/errors.hpp"
#include "kv/matrix.hpp"
#include "kv/ratfunc.hpp"

namespace kv {

// One nonzero obstruction of a claimed identity. Indices are 1-based.
struct Residual {
  std::string label;
  std::vector<std::size_t> index;
  RatFunc value;
};

// A tensor produced while checking (e.g. the induced N of a KVB check).
struct NamedMatrix {
  std::string name;
  std::string kind;  // "contravariant" | "covariant" | "endomorphism"
  Matrix value;
};

// Verdict plus the complete list of nonzero residuals. Empty residual list
// means the identity holds.
struct Certificate {
  std::vector<Residual> residuals;
  std::vector<NamedMatrix> derived;

  bool holds() const { return residuals.empty(); }

  // Records the residual only when the value is nonzero.
  void add_residual(std::string label, std::vector<std::size_t> index, RatFunc value) {
    if (value.is_zero()) return;
    residuals.push_back({std::move(label), std::move(index), std::move(value)});
  }

  void merge(const Certificate& o) {
    residuals.insert(residuals.end(), o.residuals.begin(), o.residuals.end());
    derived.insert(derived.end(), o.derived.begin(), o.derived.end());
  }
};

// Raised by operations whose stated precondition fails; carries the failing
// certificate so callers can report the witnesses.
struct PreconditionFailed : Error {
  Certificate certificate;
  PreconditionFailed(const std::string& what, Certificate cert)
      : Error(what), certificate(std::move(cert)) {}
};

}  // namespace kv
