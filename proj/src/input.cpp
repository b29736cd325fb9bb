#include "kv/input.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kv/errors.hpp"
#include "kv/expr.hpp"

namespace kv {

namespace {

using Json = nlohmann::ordered_json;

RatFunc parse_entry(const Json& cell, const VarListPtr& vars, const std::string& where) {
  if (!cell.is_string())
    throw ValidationError(where + ": expression entries must be strings");
  try {
    return parse_expr(cell.get<std::string>(), vars);
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

Matrix parse_matrix(const Json& rows, const VarListPtr& vars, std::size_t r, std::size_t c,
                    const std::string& where) {
  if (!rows.is_array() || rows.size() != r)
    throw ValidationError(where + ": expected " + std::to_string(r) + " rows");
  Matrix m(vars, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != c)
      throw ValidationError(where + ": row " + std::to_string(i + 1) + " must have " +
                            std::to_string(c) + " entries");
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = parse_entry(row[j], vars,
                               where + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
  return m;
}

}  // namespace

const ParsedTensor& InputDocument::tensor(const std::string& name) const {
  auto it = tensors.find(name);
  if (it == tensors.end()) throw UnknownTensorName(name);
  return it->second;
}

InputDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_from_text(buf.str(), path);
}

InputDocument load_from_text(const std::string& text, const std::string& origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError(origin + ": top level must be an object");

  InputDocument out;

  if (!doc.contains("chart") || !doc["chart"].is_array())
    throw ValidationError("chart: expected an array of variable names");
  std::vector<std::string> names;
  for (const auto& v : doc["chart"]) {
    if (!v.is_string()) throw ValidationError("chart: variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  try {
    out.chart = Chart::make(std::move(names));
  } catch (const Error& e) {
    throw ValidationError(std::string("chart: ") + e.what());
  }
  const VarListPtr& vars = out.chart.vars;

  if (!doc.contains("algebroid") || !doc["algebroid"].is_object())
    throw ValidationError("algebroid: expected an object with a 'type'");
  const Json& alg = doc["algebroid"];
  std::string type = alg.value("type", "");
  std::size_t rank = 0;
  if (type == "flat-tangent") {
    out.algebroid = std::make_shared<const Algebroid>(Algebroid::flat_tangent(out.chart));
    rank = out.chart.dim();
  } else if (type == "custom") {
    if (!alg.contains("gamma") || !alg["gamma"].is_array() || alg["gamma"].empty())
      throw ValidationError("algebroid.gamma: expected a rank x rank x rank array");
    rank = alg["gamma"].size();
    std::vector<RatFunc> gamma;
    gamma.reserve(rank * rank * rank);
    for (std::size_t i = 0; i < rank; ++i) {
      const Json& gi = alg["gamma"][i];
      if (!gi.is_array() || gi.size() != rank)
        throw ValidationError("algebroid.gamma: expected a rank x rank x rank array");
      for (std::size_t j = 0; j < rank; ++j) {
        const Json& gij = gi[j];
        if (!gij.is_array() || gij.size() != rank)
          throw ValidationError("algebroid.gamma: expected a rank x rank x rank array");
        for (std::size_t k = 0; k < rank; ++k)
          gamma.push_back(parse_entry(gij[k], vars,
                                      "algebroid.gamma[" + std::to_string(i + 1) + "][" +
                                          std::to_string(j + 1) + "][" + std::to_string(k + 1) +
                                          "]"));
      }
    }
    if (!alg.contains("anchor"))
      throw ValidationError("algebroid.anchor: required for custom algebroids");
    Matrix anchor = parse_matrix(alg["anchor"], vars, out.chart.dim(), rank, "algebroid.anchor");
    AlgebroidPtr built;
    try {
      built = std::make_shared<const Algebroid>(out.chart, rank, std::move(gamma),
                                                std::move(anchor));
    } catch (const Error& e) {
      throw ValidationError(std::string("algebroid: ") + e.what());
    }
    Certificate axioms = check_axioms(*built);
    if (!axioms.holds())
      throw ValidationError("algebroid: left-symmetric axioms fail (" +
                            std::to_string(axioms.residuals.size()) + " nonzero residuals, first: " +
                            axioms.residuals.front().label + ")");
    out.algebroid = built;
  } else {
    throw ValidationError("algebroid.type: expected 'flat-tangent' or 'custom'");
  }
  out.algebroid_type = type;

  if (doc.contains("tensors")) {
    if (!doc["tensors"].is_object())
      throw ValidationError("tensors: expected an object of named tensors");
    for (const auto& [name, spec] : doc["tensors"].items()) {
      if (name.empty()) throw ValidationError("tensors: empty tensor name");
      if (!spec.is_object())
        throw ValidationError("tensors." + name + ": expected an object");
      std::string kind = spec.value("variance", "");
      if (kind != "contravariant" && kind != "covariant" && kind != "endomorphism")
        throw ValidationError("tensors." + name +
                              ".variance: expected 'contravariant', 'covariant', or "
                              "'endomorphism'");
      if (!spec.contains("matrix"))
        throw ValidationError("tensors." + name + ".matrix: required");
      Matrix m = parse_matrix(spec["matrix"], vars, rank, rank, "tensors." + name + ".matrix");
      if (kind != "endomorphism" && !m.is_symmetric())
        throw ValidationError("tensors." + name + ".matrix: must be symmetric (rf_eq) for a " +
                              kind + " tensor");
      out.tensor_order.push_back(name);
      out.tensors.emplace(name, ParsedTensor{kind, std::move(m)});
    }
  }
  return out;
}

}  // namespace kv
