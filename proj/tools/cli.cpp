#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "jordan/cgc/cgc.hpp"
#include "jordan/io/document.hpp"
#include "jordan/io/suites.hpp"
#include "jordan/sl2/sl2.hpp"
#include "jordan/tensor/tensor.hpp"
#include "jordan/uhsl2/uhsl2.hpp"

namespace jordan::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

HalfInt spin_arg(const std::string& text, const char* flag) {
  try {
    const HalfInt j = HalfInt::parse(text);
    require_spin(j);
    return j;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

HalfInt weight_arg(const std::string& text, const char* flag) {
  try {
    return HalfInt::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

std::string spin_range(HalfInt j1, HalfInt j2) {
  std::string out;
  for (HalfInt j : sl2::coupled_spins(j1, j2)) out += (out.empty() ? "" : ", ") + j.to_string();
  return out;
}

PolyMatrix rep_matrix(HalfInt j, const std::string& gen) {
  const auto rep = uhsl2::uh_rep(j);
  if (gen == "H") return rep.h;
  if (gen == "X") return rep.x;
  if (gen == "Y") return rep.y;
  if (gen == "T") return uhsl2::exp_hx(rep.x);
  if (gen == "Zplus") return uhsl2::z_from_xy(rep).zplus;
  return uhsl2::z_from_xy(rep).zminus;
}

struct Args {
  std::string format = "ascii";
  std::string order = "asc";
  std::string j, j1, j2, filter_j, filter_m;
  std::string gen;
  bool inverse = false;
  bool diagonal_only = false;
  std::string suite;
  int max_twice_j = 4;
  int samples = 100;
  std::uint64_t seed = 42;
  int max_kl = 8;
};

PolyMatrix ordered(const PolyMatrix& m, const std::string& order) { return order == "desc" ? m.reversed() : m; }

io::OutputDocument cmd_repmat(const Args& a) {
  const HalfInt j = spin_arg(a.j, "j");
  return {io::DocumentKind::RepMatrix,
          io::MatrixDocument{{{"j", j.to_string()}, {"gen", a.gen}, {"order", a.order}},
                             ordered(rep_matrix(j, a.gen), a.order)}};
}

io::OutputDocument cmd_wbasis(const Args& a) {
  const HalfInt j1 = spin_arg(a.j1, "j1");
  const HalfInt j2 = spin_arg(a.j2, "j2");
  PolyMatrix w = tensor::w_basis(j1, j2).matrix;
  if (a.inverse) w = unipotent_inverse(w);
  return {io::DocumentKind::WBasis,
          io::MatrixDocument{{{"j1", j1.to_string()},
                              {"j2", j2.to_string()},
                              {"inverse", a.inverse ? "true" : "false"},
                              {"order", a.order}},
                             ordered(w, a.order)}};
}

io::OutputDocument cmd_cgc(const Args& a) {
  const HalfInt j1 = spin_arg(a.j1, "j1");
  const HalfInt j2 = spin_arg(a.j2, "j2");
  cgc::CgcTable table = cgc::cgc_table(j1, j2);
  const auto spins = sl2::coupled_spins(j1, j2);
  std::optional<HalfInt> fj, fm;
  if (!a.filter_j.empty()) {
    fj = weight_arg(a.filter_j, "j");
    if (std::find(spins.begin(), spins.end(), *fj) == spins.end()) {
      throw UsageError("--j " + fj->to_string() + " violates the triangle rule for j1=" + j1.to_string() +
                       ", j2=" + j2.to_string() + "; valid j: " + spin_range(j1, j2));
    }
  }
  if (!a.filter_m.empty()) {
    fm = weight_arg(a.filter_m, "m");
    const HalfInt top = fj ? *fj : j1 + j2;
    if (!is_weight_of(top, *fm)) {
      throw UsageError("--m " + fm->to_string() + " is not a weight of V(" + top.to_string() + ")");
    }
  }
  std::erase_if(table.entries, [&](const cgc::CgcEntry& e) {
    return (fj && e.j != *fj) || (fm && e.m != *fm) || (a.diagonal_only && e.m != e.n1 + e.n2);
  });
  return {io::DocumentKind::CgcTable, std::move(table)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact representations, w-bases and Clebsch-Gordan coefficients of the Jordanian U_h(sl(2))", "jordan"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::string> formats{"ascii", "latex", "json"};
  const std::vector<std::string> orders{"asc", "desc"};

  auto add_output = [&](CLI::App* sub, bool with_order) {
    sub->add_option("--format", a.format, "ascii, latex or json")->check(CLI::IsMember(formats));
    if (with_order) sub->add_option("--order", a.order, "basis order, asc or desc")->check(CLI::IsMember(orders));
  };

  auto* repmat = app.add_subcommand("repmat", "representation matrix of one generator");
  repmat->add_option("--j", a.j, "spin, e.g. 2 or 3/2")->required();
  repmat->add_option("--gen", a.gen, "H, X, Y, T, Zplus or Zminus")
      ->required()
      ->check(CLI::IsMember({"H", "X", "Y", "T", "Zplus", "Zminus"}));
  add_output(repmat, true);

  auto* wbasis = app.add_subcommand("wbasis", "w-basis coefficient matrix");
  wbasis->add_option("--j1", a.j1)->required();
  wbasis->add_option("--j2", a.j2)->required();
  wbasis->add_flag("--inverse", a.inverse, "emit the inverse (equal to the skew-transpose)");
  add_output(wbasis, true);

  auto* cgc_cmd = app.add_subcommand("cgc", "Clebsch-Gordan coefficient table");
  cgc_cmd->add_option("--j1", a.j1)->required();
  cgc_cmd->add_option("--j2", a.j2)->required();
  cgc_cmd->add_option("--j", a.filter_j, "keep one coupled spin");
  cgc_cmd->add_option("--m", a.filter_m, "keep one coupled weight");
  cgc_cmd->add_flag("--diagonal-only", a.diagonal_only, "keep entries with m = n1 + n2");
  add_output(cgc_cmd, false);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = io::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", a.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-2j", a.max_twice_j, "largest 2j on the label grid")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", a.samples, "random points per eq14 cell")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", a.seed);
  verify->add_option("--max-kl", a.max_kl, "eq14 runs K + L <= max-kl")->check(CLI::NonNegativeNumber);
  add_output(verify, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const io::Format format = io::parse_format(a.format);
    io::OutputDocument doc{io::DocumentKind::RepMatrix, io::MatrixDocument{}};
    if (*repmat) {
      doc = cmd_repmat(a);
    } else if (*wbasis) {
      doc = cmd_wbasis(a);
    } else if (*cgc_cmd) {
      doc = cmd_cgc(a);
    } else {
      io::SuiteOptions options{a.max_twice_j, a.samples, a.seed, a.max_kl};
      doc = {io::DocumentKind::VerifyReport, io::run_suite(a.suite, options)};
    }
    out << io::render(doc, format);
    if (const auto* r = std::get_if<io::SuiteReport>(&doc.payload)) return r->passed() ? kExitPass : kExitFail;
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace jordan::cli
