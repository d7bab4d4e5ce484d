#include "jordan/io/document.hpp"

#include <algorithm>
#include <stdexcept>

namespace jordan::io {

using nlohmann::json;

const char* kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::RepMatrix: return "RepMatrix";
    case DocumentKind::WBasis: return "WBasis";
    case DocumentKind::CgcTable: return "CgcTable";
    case DocumentKind::VerifyReport: return "VerifyReport";
  }
  return "?";
}

DocumentKind parse_kind(const std::string& name) {
  for (auto k : {DocumentKind::RepMatrix, DocumentKind::WBasis, DocumentKind::CgcTable, DocumentKind::VerifyReport}) {
    if (name == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown document kind '" + name + "'");
}

Format parse_format(const std::string& name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (ascii, latex, json)");
}

bool SuiteReport::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.pass; });
}

json to_json(const BigRational& q) { return {{"num", q.num().get_str()}, {"den", q.den().get_str()}}; }

json to_json(const Radical& r) {
  json out = json::array();
  for (const auto& t : r.terms()) {
    out.push_back({{"num", t.coeff.num().get_str()}, {"den", t.coeff.den().get_str()}, {"radicand", t.radicand.get_str()}});
  }
  return out;
}

json to_json(const HPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({{"power", t.power}, {"coeff", to_json(t.coeff)}});
  return out;
}

json to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

BigInt integer_from_string(const std::string& s) {
  BigRational q = BigRational::parse(s);
  if (q.den() != 1 || s.find('/') != std::string::npos) throw std::invalid_argument("'" + s + "' is not an integer");
  return q.num();
}

HalfInt half_field(const json& j, const char* key) { return HalfInt::parse(string_field(j, key)); }

json labels_to_json(const Labels& labels) {
  json out = json::object();
  for (const auto& [k, v] : labels) out[k] = v;
  return out;
}

Labels labels_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("labels must be an object");
  Labels out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw std::invalid_argument("label '" + k + "' must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

BigRational rational_from_json(const json& j) {
  return BigRational(integer_from_string(string_field(j, "num")), integer_from_string(string_field(j, "den")));
}

Radical radical_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("radical must be an array of terms");
  std::vector<Radical::Term> terms;
  for (const auto& t : j) {
    terms.push_back({integer_from_string(string_field(t, "radicand")), rational_from_json(t)});
  }
  return Radical::from_terms(std::move(terms));
}

HPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  std::vector<HPoly::Term> terms;
  for (const auto& t : j) {
    const json& p = field(t, "power");
    if (!p.is_number_integer()) throw std::invalid_argument("power must be an integer");
    terms.push_back({p.get<int>(), radical_from_json(field(t, "coeff"))});
  }
  return HPoly::from_terms(std::move(terms));
}

PolyMatrix matrix_from_json(const json& j) {
  const json& rows = field(j, "rows");
  const json& cols = field(j, "cols");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned()) throw std::invalid_argument("rows/cols must be counts");
  PolyMatrix m(rows.get<std::size_t>(), cols.get<std::size_t>());
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != m.rows()) throw std::invalid_argument("entries has the wrong row count");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!entries[r].is_array() || entries[r].size() != m.cols()) {
      throw std::invalid_argument("entries row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = poly_from_json(entries[r][c]);
  }
  return m;
}

json to_json(const OutputDocument& doc) {
  json out = {{"kind", kind_name(doc.kind)}};
  if (const auto* m = std::get_if<MatrixDocument>(&doc.payload)) {
    out["labels"] = labels_to_json(m->labels);
    out["matrix"] = to_json(m->matrix);
  } else if (const auto* t = std::get_if<cgc::CgcTable>(&doc.payload)) {
    out["j1"] = t->j1.to_string();
    out["j2"] = t->j2.to_string();
    json entries = json::array();
    for (const auto& e : t->entries) {
      entries.push_back({{"j", e.j.to_string()},
                         {"m", e.m.to_string()},
                         {"n1", e.n1.to_string()},
                         {"n2", e.n2.to_string()},
                         {"value", to_json(e.value)}});
    }
    out["entries"] = std::move(entries);
  } else {
    const auto& r = std::get<SuiteReport>(doc.payload);
    out["suite"] = r.suite;
    out["seed"] = r.seed;
    out["pass"] = r.passed();
    json cells = json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"labels", labels_to_json(c.labels)}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out["cells"] = std::move(cells);
  }
  return out;
}

OutputDocument document_from_json(const json& j) {
  try {
    const DocumentKind kind = parse_kind(string_field(j, "kind"));
    switch (kind) {
      case DocumentKind::RepMatrix:
      case DocumentKind::WBasis:
        return {kind, MatrixDocument{labels_from_json(field(j, "labels")), matrix_from_json(field(j, "matrix"))}};
      case DocumentKind::CgcTable: {
        cgc::CgcTable table{half_field(j, "j1"), half_field(j, "j2"), {}};
        for (const auto& e : field(j, "entries")) {
          table.entries.push_back({half_field(e, "j"), half_field(e, "m"), half_field(e, "n1"), half_field(e, "n2"),
                                   poly_from_json(field(e, "value"))});
        }
        return {kind, std::move(table)};
      }
      case DocumentKind::VerifyReport: {
        SuiteReport report;
        report.suite = string_field(j, "suite");
        const json& seed = field(j, "seed");
        if (!seed.is_number_unsigned()) throw std::invalid_argument("seed must be a non-negative integer");
        report.seed = seed.get<std::uint64_t>();
        for (const auto& c : field(j, "cells")) {
          const json& pass = field(c, "pass");
          if (!pass.is_boolean()) throw std::invalid_argument("pass must be a boolean");
          report.cells.push_back({labels_from_json(field(c, "labels")), pass.get<bool>(), string_field(c, "detail")});
        }
        return {kind, std::move(report)};
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
  throw std::invalid_argument("unreachable document kind");
}

}  // namespace jordan::io
