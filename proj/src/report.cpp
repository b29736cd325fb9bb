#include "kv/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "kv/errors.hpp"
#include "kv/expr.hpp"

namespace kv {

namespace {

using Json = nlohmann::ordered_json;

SymTensorContra contra(const InputDocument& doc, const std::string& name) {
  const ParsedTensor& t = doc.tensor(name);
  if (t.kind != "contravariant")
    throw VarianceMismatch("'" + name + "' is " + t.kind + ", expected contravariant");
  return {doc.algebroid, t.matrix};
}

SymTensorCo covariant(const InputDocument& doc, const std::string& name) {
  const ParsedTensor& t = doc.tensor(name);
  if (t.kind != "covariant")
    throw VarianceMismatch("'" + name + "' is " + t.kind + ", expected covariant");
  return {doc.algebroid, t.matrix};
}

BundleMap endo(const InputDocument& doc, const std::string& name) {
  const ParsedTensor& t = doc.tensor(name);
  if (t.kind != "endomorphism")
    throw VarianceMismatch("'" + name + "' is " + t.kind + ", expected endomorphism");
  return {doc.algebroid, t.matrix};
}

void expect_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n)
    throw Error("expected " + std::to_string(n) + " tensor argument(s): " + usage);
}

std::string paren_list(const std::vector<std::string>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += args[i];
  }
  return s + ")";
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(print_expr(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostringstream& out, const Matrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(print_expr(m.at(i, j)));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << cells[i][j];
      out << std::string(width[j] - cells[i][j].size(), ' ');
      out << (j + 1 < m.cols() ? "  " : "");
    }
    out << " ]\n";
  }
}

}  // namespace

int Report::exit_code() const {
  for (const auto& c : checks)
    if (!c.ok()) return 1;
  return 0;
}

std::string Report::human(bool verbose) const {
  std::ostringstream out;
  out << command << " " << file;
  for (const auto& a : arguments) out << " " << a;
  out << "\n" << algebroid_summary << "\n";
  for (const auto& c : checks) {
    out << c.name << ": ";
    if (!c.note.empty()) {
      out << "FAILS - " << c.note << "\n";
      for (const auto& r : c.certificate.residuals) {
        out << "  " << r.label << "[";
        for (std::size_t i = 0; i < r.index.size(); ++i)
          out << (i ? "," : "") << r.index[i];
        out << "] = " << print_expr(r.value) << "\n";
      }
      continue;
    }
    if (c.certificate.holds()) {
      out << "holds\n";
    } else {
      out << "FAILS - " << c.certificate.residuals.size() << " nonzero residual(s)\n";
      for (const auto& r : c.certificate.residuals) {
        out << "  " << r.label << "[";
        for (std::size_t i = 0; i < r.index.size(); ++i)
          out << (i ? "," : "") << r.index[i];
        out << "] = " << print_expr(r.value) << "\n";
      }
    }
    if (verbose)
      for (const auto& d : c.certificate.derived) {
        out << "  derived " << d.name << " (" << d.kind << "):\n";
        print_matrix(out, d.value, "    ");
      }
  }
  for (const auto& d : derived) {
    out << "derived " << d.name << " (" << d.kind << "):\n";
    print_matrix(out, d.value, "  ");
  }
  out << "exit " << exit_code() << " (" << elapsed_ms << " ms)\n";
  return out.str();
}

std::string Report::machine() const {
  Json j;
  j["command"] = command;
  j["file"] = file;
  j["arguments"] = arguments;
  j["algebroid"] = algebroid_summary;
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["check"] = c.name;
    cj["verdict"] = c.ok() ? "holds" : "fails";
    if (!c.note.empty()) cj["note"] = c.note;
    Json residuals = Json::array();
    for (const auto& r : c.certificate.residuals) {
      Json rj;
      rj["check"] = r.label;
      rj["index"] = r.index;
      rj["expression"] = print_expr(r.value);
      residuals.push_back(rj);
    }
    cj["residuals"] = residuals;
    Json derived_json = Json::array();
    for (const auto& d : c.certificate.derived) {
      Json dj;
      dj["name"] = d.name;
      dj["kind"] = d.kind;
      dj["matrix"] = matrix_json(d.value);
      derived_json.push_back(dj);
    }
    if (!derived_json.empty()) cj["derived"] = derived_json;
    checks_json.push_back(cj);
  }
  j["checks"] = checks_json;
  Json derived_json = Json::array();
  for (const auto& d : derived) {
    Json dj;
    dj["name"] = d.name;
    dj["kind"] = d.kind;
    dj["matrix"] = matrix_json(d.value);
    derived_json.push_back(dj);
  }
  j["derived"] = derived_json;
  j["exit"] = exit_code();
  return j.dump(2) + "\n";
}

Report run_command(const InputDocument& doc, const std::string& command,
                   const std::vector<std::string>& args, const RunOptions& opts,
                   const std::string& file_echo) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = command;
  report.file = file_echo;
  report.arguments = args;
  {
    std::ostringstream s;
    s << "algebroid: " << doc.algebroid_type << ", chart (";
    for (std::size_t i = 0; i < doc.chart.dim(); ++i)
      s << (i ? ", " : "") << (*doc.chart.vars)[i];
    s << "), rank " << doc.algebroid->rank();
    report.algebroid_summary = s.str();
  }

  auto add = [&](const std::string& name, Certificate cert) {
    report.checks.push_back({name, std::move(cert), ""});
  };

  if (command == "axioms") {
    expect_args(args, 0, "axioms <file>");
    add("axioms", check_axioms(*doc.algebroid));
  } else if (command == "kv") {
    expect_args(args, 1, "kv <file> H");
    add("kv" + paren_list(args), check_koszul_vinberg(contra(doc, args[0])));
  } else if (command == "compatible") {
    expect_args(args, 2, "compatible <file> H1 H2");
    add("compatible" + paren_list(args),
        check_compatible(contra(doc, args[0]), contra(doc, args[1])));
  } else if (command == "nijenhuis") {
    expect_args(args, 1, "nijenhuis <file> N");
    add("nijenhuis" + paren_list(args), check_nijenhuis(endo(doc, args[0])));
  } else if (command == "kvn") {
    expect_args(args, 2, "kvn <file> H N");
    add("kvn" + paren_list(args), check_kvn(contra(doc, args[0]), endo(doc, args[1])));
  } else if (command == "kvb") {
    expect_args(args, 2, "kvb <file> H B");
    Certificate cert = check_kvb(contra(doc, args[0]), covariant(doc, args[1]));
    report.derived = std::move(cert.derived);
    cert.derived.clear();
    add("kvb" + paren_list(args), std::move(cert));
  } else if (command == "hessian") {
    expect_args(args, 1, "hessian <file> B");
    add("hessian" + paren_list(args), check_pseudo_hessian(covariant(doc, args[0])));
  } else if (command == "complementary") {
    expect_args(args, 2, "complementary <file> H B");
    try {
      add("complementary" + paren_list(args),
          check_complementary(contra(doc, args[0]), covariant(doc, args[1])));
    } catch (const PreconditionFailed& e) {
      report.checks.push_back({"complementary" + paren_list(args), e.certificate, e.what()});
    }
  } else if (command == "hn") {
    expect_args(args, 2, "hn <file> B N");
    add("hn" + paren_list(args),
        check_hessian_nijenhuis(covariant(doc, args[0]), endo(doc, args[1])));
  } else if (command == "hn2") {
    expect_args(args, 2, "hn2 <file> B N");
    try {
      add("hn2" + paren_list(args),
          check_hessian_nijenhuis_via_squares(covariant(doc, args[0]), endo(doc, args[1])));
    } catch (const PreconditionFailed& e) {
      report.checks.push_back({"hn2" + paren_list(args), e.certificate, e.what()});
    }
  } else if (command == "hierarchy") {
    expect_args(args, 2, "hierarchy <file> (H|B) N [--depth k]");
    const ParsedTensor& base = doc.tensor(args[0]);
    try {
      Hierarchy tower = base.kind == "covariant"
                            ? hierarchy(covariant(doc, args[0]), endo(doc, args[1]), opts.depth)
                            : hierarchy(contra(doc, args[0]), endo(doc, args[1]), opts.depth);
      for (unsigned k = 0; k <= tower.depth; ++k) {
        add("member[" + std::to_string(k) + "]", tower.member_certs[k]);
        report.derived.push_back({args[0] + "_N^" + std::to_string(k),
                                  base.kind == "covariant" ? "covariant" : "contravariant",
                                  tower.members[k]});
      }
      for (unsigned k = 0; k <= tower.depth; ++k)
        for (unsigned l = k; l <= tower.depth; ++l)
          add("pair[" + std::to_string(k) + "," + std::to_string(l) + "]", tower.pair(k, l));
    } catch (const PreconditionFailed& e) {
      report.checks.push_back({"hierarchy" + paren_list(args), e.certificate, e.what()});
    }
  } else if (command == "dual") {
    expect_args(args, 1, "dual <file> H");
    SymTensorContra h = contra(doc, args[0]);
    Certificate kv = check_koszul_vinberg(h);
    bool is_kv = kv.holds();
    add("kv" + paren_list(args), std::move(kv));
    if (is_kv) {
      AlgebroidPtr dual = dual_algebroid(h);
      for (std::size_t k = 0; k < dual->rank(); ++k) {
        Matrix slice(dual->vars(), dual->rank(), dual->rank());
        for (std::size_t i = 0; i < dual->rank(); ++i)
          for (std::size_t j = 0; j < dual->rank(); ++j) slice.at(i, j) = dual->gamma(i, j, k);
        report.derived.push_back({"dual.gamma^" + std::to_string(k + 1), "structure", slice});
      }
      report.derived.push_back({"dual.anchor", "anchor", dual->anchor()});
      add("axioms(dual)", check_axioms(*dual));
    }
  } else if (command == "invert") {
    expect_args(args, 1, "invert <file> T");
    const ParsedTensor& t = doc.tensor(args[0]);
    try {
      if (t.kind == "contravariant") {
        SymTensorCo inv = invert(SymTensorContra(doc.algebroid, t.matrix));
        report.derived.push_back({args[0] + "^-1", "covariant", inv.matrix()});
        add("invert" + paren_list(args), Certificate{});
      } else if (t.kind == "covariant") {
        SymTensorContra inv = invert(SymTensorCo(doc.algebroid, t.matrix));
        report.derived.push_back({args[0] + "^-1", "contravariant", inv.matrix()});
        add("invert" + paren_list(args), Certificate{});
      } else {
        throw VarianceMismatch("'" + args[0] + "' is an endomorphism, expected a symmetric tensor");
      }
    } catch (const Degenerate& e) {
      report.checks.push_back({"invert" + paren_list(args), Certificate{}, e.what()});
    }
  } else if (command == "derive-n") {
    expect_args(args, 2, "derive-n <file> H1 H");
    try {
      BundleMap n = derive_nijenhuis(contra(doc, args[0]), contra(doc, args[1]));
      report.derived.push_back({"N", "endomorphism", n.matrix()});
      add("nijenhuis(derived N)", check_nijenhuis(n));
    } catch (const Degenerate& e) {
      report.checks.push_back({"derive-n" + paren_list(args), Certificate{}, e.what()});
    }
  } else {
    throw Error("unknown command '" + command + "'");
  }

  auto end = std::chrono::steady_clock::now();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return report;
}

}  // namespace kv
