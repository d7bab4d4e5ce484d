#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "jordan/io/document.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = jordan::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("repmat") {
  const Run x = run({"repmat", "--j", "2", "--gen", "X", "--order", "desc"});
  CHECK(x.code == 0);
  CHECK(x.out ==
        "# RepMatrix gen=X j=2 order=desc\n"
        "[ 0 1 0 h^2/12      0 ]\n"
        "[ 0 0 1      0 h^2/12 ]\n"
        "[ 0 0 0      1      0 ]\n"
        "[ 0 0 0      0      1 ]\n"
        "[ 0 0 0      0      0 ]\n");
  const Run y = run({"repmat", "--j", "2", "--gen", "Y", "--order", "desc"});
  CHECK(y.out.find("[ 4       0 -5h^2/4       0  h^4/16 ]") != std::string::npos);
  const Run h = run({"repmat", "--j", "2", "--gen", "H", "--order", "desc"});
  CHECK(h.out.find("[ 4 0 0  0  0 ]") != std::string::npos);
  CHECK(h.out.find("[ 0 0 0  0 -4 ]") != std::string::npos);
  const json y0 = run_json({"repmat", "--j", "0", "--gen", "Y"});
  CHECK(y0["matrix"]["rows"] == 1);
  CHECK(y0["matrix"]["entries"][0][0] == json::array());
  const Run latex = run({"repmat", "--j", "1", "--gen", "T", "--format", "latex"});
  CHECK(latex.out.find("\\begin{pmatrix}") != std::string::npos);
}

TEST_CASE("desc is the reversal of asc") {
  for (const char* gen : {"H", "X", "Y", "T", "Zplus", "Zminus"}) {
    const json asc = run_json({"repmat", "--j", "3/2", "--gen", gen});
    const json desc = run_json({"repmat", "--j", "3/2", "--gen", gen, "--order", "desc"});
    const auto a = jordan::io::matrix_from_json(asc["matrix"]);
    CHECK(jordan::io::matrix_from_json(desc["matrix"]) == a.reversed());
  }
}

TEST_CASE("wbasis") {
  const Run w = run({"wbasis", "--j1", "1", "--j2", "1/2"});
  CHECK(w.out.find("[ 1 h -h/2 h^2/4 h^2/4 -h^3/8 ]") != std::string::npos);
  const Run inv = run({"wbasis", "--j1", "1", "--j2", "1/2", "--inverse"});
  CHECK(inv.out.find("[ 1 -h h/2 h^2/4   0 -h^3/8 ]") != std::string::npos);
  const Run one = run({"wbasis", "--j1", "0", "--j2", "0"});
  CHECK(one.out.find("[ 1 ]") != std::string::npos);
}

TEST_CASE("cgc") {
  const json t = run_json({"cgc", "--j1", "1/2", "--j2", "1/2"});
  CHECK(t["kind"] == "CgcTable");
  CHECK(t["entries"].size() == 16);
  const json d = run_json({"cgc", "--j1", "1", "--j2", "1/2", "--diagonal-only"});
  for (const auto& e : d["entries"]) {
    const auto m = jordan::HalfInt::parse(e["m"].get<std::string>());
    CHECK(m == jordan::HalfInt::parse(e["n1"].get<std::string>()) + jordan::HalfInt::parse(e["n2"].get<std::string>()));
    const auto v = jordan::io::poly_from_json(e["value"]);
    CHECK(v.is_constant());
  }
  const json id = run_json({"cgc", "--j1", "0", "--j2", "1"});
  CHECK(id["entries"].size() == 9);
  for (const auto& e : id["entries"]) {
    const bool diag = e["m"] == e["n2"];
    CHECK(jordan::io::poly_from_json(e["value"]) == (diag ? jordan::HPoly(1L) : jordan::HPoly()));
  }
  const json slice = run_json({"cgc", "--j1", "1", "--j2", "1", "--j", "1", "--m", "0"});
  CHECK(slice["entries"].size() == 9);
  const Run bad = run({"cgc", "--j1", "1", "--j2", "1/2", "--j", "5/2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("valid j: 1/2, 3/2") != std::string::npos);
  CHECK(run({"cgc", "--j1", "1", "--j2", "1/2", "--j", "1/2", "--m", "3/2"}).code == 2);
}

TEST_CASE("verify") {
  const Run all = run({"verify", "--suite", "all", "--max-2j", "4", "--seed", "42"});
  CHECK(all.code == 0);
  const json e = run_json({"verify", "--suite", "eq14", "--samples", "100", "--seed", "7"});
  CHECK(e["seed"] == 7);
  CHECK(e["pass"] == true);
  CHECK(e["cells"].size() == 45);
  const json r = run_json({"verify", "--suite", "relations", "--max-2j", "0"});
  CHECK(r["cells"].size() == 1);
  CHECK(r["cells"][0]["labels"]["j"] == "0");
  CHECK(r["cells"][0]["pass"] == true);
}

TEST_CASE("identical flags give identical bytes") {
  const std::vector<std::string> args{"verify", "--suite", "eq14", "--samples", "20", "--seed", "11", "--max-kl", "4",
                                      "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> c{"cgc", "--j1", "3/2", "--j2", "1", "--format", "latex"};
  CHECK(run(c).out == run(c).out);
}

TEST_CASE("usage errors exit with 2") {
  const Run bad = run({"repmat", "--j", "5/3", "--gen", "X"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("5/3") != std::string::npos);
  CHECK(run({"repmat", "--j", "-1", "--gen", "X"}).code == 2);
  CHECK(run({"repmat", "--j", "1", "--gen", "Q"}).code == 2);
  CHECK(run({"repmat", "--j", "1", "--gen", "X", "--format", "xml"}).code == 2);
  CHECK(run({"wbasis", "--j1", "1"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "prop2", "--max-2j", "-1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
