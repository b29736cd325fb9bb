#pragma once

#include <map>
#include <string>
#include <vector>

#include "kv/algebroid.hpp"

namespace kv {

// A named tensor from the input document, already parsed over the chart.
struct ParsedTensor {
  std::string kind;  // "contravariant" | "covariant" | "endomorphism"
  Matrix matrix;
};

// Fully validated structure-definition document: chart, algebroid (custom
// algebroids have passed check_axioms), and symmetric/endomorphism tensors.
struct InputDocument {
  Chart chart{nullptr};
  std::string algebroid_type;  // "flat-tangent" | "custom"
  AlgebroidPtr algebroid;
  std::vector<std::string> tensor_order;
  std::map<std::string, ParsedTensor> tensors;

  const ParsedTensor& tensor(const std::string& name) const;  // UnknownTensorName
};

// Throws ParseError (malformed JSON, with location), ValidationError (naming
// the offending entry).
InputDocument load(const std::string& path);
InputDocument load_from_text(const std::string& text, const std::string& origin);

}  // namespace kv
