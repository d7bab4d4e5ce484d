#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "jordan/cgc/cgc.hpp"
#include "jordan/exact/poly_matrix.hpp"

namespace jordan::io {

enum class DocumentKind { RepMatrix, WBasis, CgcTable, VerifyReport };
enum class Format { Ascii, Latex, Json };

const char* kind_name(DocumentKind kind);
DocumentKind parse_kind(const std::string& name);
Format parse_format(const std::string& name);

using Labels = std::map<std::string, std::string>;

struct MatrixDocument {
  Labels labels;  // e.g. j, gen, order
  PolyMatrix matrix;
  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

struct Cell {
  Labels labels;
  bool pass = true;
  std::string detail;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Cell> cells;

  bool passed() const;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct OutputDocument {
  DocumentKind kind;
  std::variant<MatrixDocument, cgc::CgcTable, SuiteReport> payload;
  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

// Lossless JSON. Integers are decimal strings:
//   rational   {"num": "3", "den": "4"}
//   radical    [{"num", "den", "radicand"}]
//   polynomial [{"power": 2, "coeff": radical}]
//   matrix     {"rows": n, "cols": n, "entries": [[polynomial]]}
nlohmann::json to_json(const BigRational& q);
nlohmann::json to_json(const Radical& r);
nlohmann::json to_json(const HPoly& p);
nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const OutputDocument& doc);

BigRational rational_from_json(const nlohmann::json& j);
Radical radical_from_json(const nlohmann::json& j);
HPoly poly_from_json(const nlohmann::json& j);
PolyMatrix matrix_from_json(const nlohmann::json& j);
/// Throws std::invalid_argument on any schema violation.
OutputDocument document_from_json(const nlohmann::json& j);

/// Final text for stdout; JSON is pretty-printed with a trailing newline.
std::string render(const OutputDocument& doc, Format format);

std::string matrix_ascii(const PolyMatrix& m);
std::string matrix_latex(const PolyMatrix& m);

}  // namespace jordan::io
