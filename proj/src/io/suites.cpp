#include "jordan/io/suites.hpp"

#include <functional>
#include <stdexcept>

#include "jordan/cgc/cgc.hpp"
#include "jordan/tensor/tensor.hpp"
#include "jordan/uhsl2/uhsl2.hpp"

namespace jordan::io {

namespace {

Cell make_cell(Labels labels, const Report& report) {
  Cell cell{std::move(labels), report.passed(), {}};
  cell.detail = cell.pass ? std::to_string(report.checks.size()) + " checks" : report.first_failure();
  return cell;
}

void single_grid(std::vector<Cell>& cells, const SuiteOptions& o, const std::function<Report(HalfInt)>& run) {
  for (int t = 0; t <= o.max_twice_j; ++t) {
    const HalfInt j = HalfInt::from_twice(t);
    cells.push_back(make_cell({{"j", j.to_string()}}, run(j)));
  }
}

void pair_grid(std::vector<Cell>& cells, const SuiteOptions& o, const std::function<Report(HalfInt, HalfInt)>& run,
               int min_twice = 0) {
  for (int t1 = min_twice; t1 <= o.max_twice_j; ++t1) {
    for (int t2 = min_twice; t2 <= o.max_twice_j; ++t2) {
      const HalfInt j1 = HalfInt::from_twice(t1);
      const HalfInt j2 = HalfInt::from_twice(t2);
      cells.push_back(make_cell({{"j1", j1.to_string()}, {"j2", j2.to_string()}}, run(j1, j2)));
    }
  }
}

std::vector<Cell> run_one(const std::string& suite, const SuiteOptions& o) {
  std::vector<Cell> cells;
  if (suite == "relations") {
    single_grid(cells, o, [](HalfInt j) { return uhsl2::verify_uh_relations(j); });
    // A spin-0 factor makes the tensor space a copy of a single module.
    pair_grid(cells, o, tensor::verify_coproduct_relations, 1);
  } else if (suite == "nonlinear-map") {
    single_grid(cells, o, [](HalfInt j) { return uhsl2::verify_nonlinear_map(j); });
  } else if (suite == "prop2") {
    pair_grid(cells, o, [](HalfInt j1, HalfInt j2) {
      Report r = tensor::verify_w_action(j1, j2);
      r.append(tensor::verify_classical_conjugation(j1, j2));
      return r;
    });
  } else if (suite == "prop3") {
    pair_grid(cells, o, [](HalfInt j1, HalfInt j2) { return tensor::verify_skew_inverse(j1, j2); });
  } else if (suite == "eq14") {
    for (int total = 0; total <= o.max_kl; ++total) {
      for (int k = total; k >= 0; --k) {
        const int l = total - k;
        const auto seed = xy_cell_seed(o.seed, k, l);
        const auto res = tensor::xy_identity_check(k, l, o.samples, seed);
        Cell cell = make_cell({{"K", std::to_string(k)}, {"L", std::to_string(l)}, {"seed", std::to_string(seed)},
                               {"samples", std::to_string(o.samples)}},
                              res.report);
        if (cell.pass) {
          cell.detail += ", redraws " + std::to_string(res.redraws) + ", grid " + std::to_string(res.degree_x + 1) +
                         "x" + std::to_string(res.degree_y + 1);
        }
        cells.push_back(std::move(cell));
      }
    }
  } else if (suite == "prop6") {
    pair_grid(cells, o, [](HalfInt j1, HalfInt j2) {
      Report r = cgc::verify_cgc_structure(j1, j2);
      r.append(cgc::verify_factorization(j1, j2));
      return r;
    });
  } else if (suite == "prop7") {
    pair_grid(cells, o, [](HalfInt j1, HalfInt j2) { return cgc::verify_skew_orthogonality(j1, j2); });
  } else if (suite == "decomposition") {
    pair_grid(cells, o, [](HalfInt j1, HalfInt j2) { return cgc::verify_decomposition(j1, j2); });
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return cells;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "nonlinear-map", "prop2", "prop3",
                                              "eq14",      "prop6",         "prop7", "decomposition"};
  return names;
}

std::uint64_t xy_cell_seed(std::uint64_t seed, int big_k, int big_l) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(1 + 64 * big_k + big_l);
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.max_twice_j < 0) throw std::invalid_argument("max-2j must be non-negative");
  if (options.samples < 0) throw std::invalid_argument("samples must be non-negative");
  if (options.max_kl < 0) throw std::invalid_argument("max-kl must be non-negative");
  SuiteReport report{suite, options.seed, {}};
  if (suite != "all") {
    report.cells = run_one(suite, options);
    return report;
  }
  for (const auto& name : suite_names()) {
    for (auto& cell : run_one(name, options)) {
      cell.labels["suite"] = name;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace jordan::io
