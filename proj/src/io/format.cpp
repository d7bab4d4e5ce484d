#include <algorithm>
#include <sstream>

#include "jordan/io/document.hpp"

namespace jordan::io {

namespace {

std::string labels_line(const Labels& labels) {
  std::string out;
  for (const auto& [k, v] : labels) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

std::string entry_text(const HPoly& p) { return p.is_zero() ? "0" : p.to_string(); }
std::string entry_latex(const HPoly& p) { return p.is_zero() ? "0" : p.to_latex(); }

}  // namespace

std::string matrix_ascii(const PolyMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], entry_text(m(r, c)).size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = entry_text(m(r, c));
      os << ' ' << std::string(width[c] - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string matrix_latex(const PolyMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " & " : "") << entry_latex(m(r, c));
    os << (r + 1 < m.rows() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string render(const OutputDocument& doc, Format format) {
  if (format == Format::Json) return to_json(doc).dump(2) + "\n";

  std::ostringstream os;
  const bool latex = format == Format::Latex;
  const std::string comment = latex ? "% " : "# ";
  if (const auto* m = std::get_if<MatrixDocument>(&doc.payload)) {
    os << comment << kind_name(doc.kind) << ' ' << labels_line(m->labels) << '\n';
    os << (latex ? matrix_latex(m->matrix) : matrix_ascii(m->matrix));
  } else if (const auto* t = std::get_if<cgc::CgcTable>(&doc.payload)) {
    os << comment << "CgcTable j1=" << t->j1.to_string() << " j2=" << t->j2.to_string() << '\n';
    if (latex) os << "\\begin{array}{rrrr|l}\nj & m & n_1 & n_2 & C \\\\ \\hline\n";
    for (const auto& e : t->entries) {
      if (latex) {
        os << e.j.to_string() << " & " << e.m.to_string() << " & " << e.n1.to_string() << " & " << e.n2.to_string()
           << " & " << entry_latex(e.value) << " \\\\\n";
      } else {
        os << "j=" << e.j.to_string() << " m=" << e.m.to_string() << " n1=" << e.n1.to_string()
           << " n2=" << e.n2.to_string() << " : " << entry_text(e.value) << '\n';
      }
    }
    if (latex) os << "\\end{array}\n";
  } else {
    const auto& r = std::get<SuiteReport>(doc.payload);
    std::size_t failed = 0;
    for (const auto& c : r.cells) failed += c.pass ? 0 : 1;
    os << comment << "VerifyReport suite=" << r.suite << " seed=" << r.seed << " cells=" << r.cells.size()
       << " failed=" << failed << '\n';
    for (const auto& c : r.cells) {
      os << (c.pass ? "PASS " : "FAIL ") << labels_line(c.labels);
      if (!c.pass && !c.detail.empty()) os << " : " << c.detail;
      os << '\n';
    }
    os << (r.passed() ? "PASS\n" : "FAIL\n");
  }
  return os.str();
}

}  // namespace jordan::io
