#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hodgeloci/cli.hpp"
#include "support.hpp"

using namespace hodgeloci;
using testing_support::data_path;

namespace {

struct Result {
  int code = -1;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> tsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, '\t')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("hodgeloci_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

const std::string kCeva = data_path("arrangements/ceva.json");
const std::string kGeneric4 = data_path("arrangements/generic4.json");
const std::string kTrefoil = data_path("presentations/trefoil.json");
const std::string kFree2 = data_path("presentations/free2.json");
const std::string kTrivial1 = data_path("reps/trivial1.json");

}  // namespace

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, cli::ok);
  EXPECT_EQ(run({"hodge", "--help"}).code, cli::ok);
  EXPECT_EQ(run({}).code, cli::parse_failure);
  EXPECT_EQ(run({"frobnicate"}).code, cli::parse_failure);
  EXPECT_EQ(run({"hodge", "--weights", "1/2"}).code, cli::parse_failure);
  EXPECT_EQ(run({"charvar", "--presentation", kTrefoil, "--order-bound", "0"}).code, cli::parse_failure);
  EXPECT_EQ(run({"cohomology", "--arrangement", kGeneric4}).code, cli::parse_failure);
  EXPECT_EQ(run({"cohomology", "--arrangement", kGeneric4, "--weights", "1/2", "--presentation", kTrefoil, "--chi", "1/2"}).code,
            cli::parse_failure);
}

TEST(Cli, ParseFailures) {
  EXPECT_EQ(run({"polytopes", "--arrangement", "/nonexistent/file.json"}).code, cli::parse_failure);
  EXPECT_EQ(run({"polytopes", "--arrangement", temp_file("bad.json", "{\"dim\": 2, \"lines\": [")}).code, cli::parse_failure);
  EXPECT_EQ(run({"polytopes", "--arrangement", temp_file("nolines.json", "{\"dim\": 2}")}).code, cli::parse_failure);
  EXPECT_EQ(run({"hodge", "--family", "generic-p2", "--weights", "1/2,abc"}).code, cli::parse_failure);
  EXPECT_EQ(run({"hodge", "--family", "generic-p2", "--weights", "1/0,1/2"}).code, cli::parse_failure);
  EXPECT_EQ(run({"hodge", "--family", "fano", "--weights", "1/2,1/2"}).code, cli::parse_failure);
  EXPECT_EQ(run({"covers", "--presentation", kFree2, "--moduli", "2,x"}).code, cli::parse_failure);
  EXPECT_EQ(run({"twisted-alex", "--presentation", kTrefoil, "--rep", kTrivial1, "--check-cyclotomic", "-1"}).code, cli::parse_failure);
  const auto r = run({"polytopes", "--arrangement", "/nonexistent/file.json"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, PreconditionFailures) {
  EXPECT_EQ(run({"hodge", "--family", "generic-p2", "--weights", "0,0,0"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"hodge", "--family", "generic-p2", "--r", "4", "--weights", "1/3,1/3,1/3"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"hodge", "--family", "cone-p3", "--weights", "1/2,1/2,1/2"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"hodge", "--family", "ceva", "--weights", "1/2,1/2,1/2,1/2,1/2,1/2"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"cohomology", "--arrangement", kCeva, "--weights", "1/3,1/3,1/3,1/3,1/3,1/3"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"cohomology", "--presentation", kTrefoil, "--chi", "1/2,1/2"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"covers", "--presentation", kFree2, "--moduli", "2"}).code, cli::precondition_failure);
  EXPECT_EQ(run({"twisted-alex", "--presentation", kTrefoil, "--rep", data_path("reps/diag_zeta3.json")}).code,
            cli::precondition_failure);
  const auto infinity_bad = temp_file("inf.json", R"({"dim": 2, "lines": [["1","-1","0"],["0","0","1"],["1","-1","1"],["1","0","0"]], "infinity": 1})");
  EXPECT_EQ(run({"polytopes", "--arrangement", infinity_bad}).code, cli::precondition_failure);
}

TEST(Cli, InvariantFailureStatus) {
  std::ostringstream err;
  EXPECT_EQ(cli::detail::report_exception(std::make_exception_ptr(InvariantError("x")), err), cli::invariant_failure);
  EXPECT_EQ(cli::detail::report_exception(std::make_exception_ptr(std::runtime_error("y")), err), cli::invariant_failure);
  EXPECT_EQ(cli::detail::report_exception(std::make_exception_ptr(PreconditionError("z")), err), cli::precondition_failure);
  EXPECT_EQ(cli::detail::report_exception(std::make_exception_ptr(ParseError("w")), err), cli::parse_failure);
}

TEST(Cli, PolytopesCeva) {
  const auto r = run({"polytopes", "--arrangement", kCeva});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto rows = tsv(r.out);
  const auto rs = residue_system(io::decode_arrangement(io::load_file(kCeva)));
  const auto cells = polytope_decomposition(rs);
  ASSERT_EQ(rows.size(), cells.size() + 1);
  EXPECT_EQ(rows[0][0], "cell");
  EXPECT_EQ(rows[0].size(), rs.functionals.size() + 4);
  EXPECT_EQ(rows[0].back(), "torsion_order");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& row = rows[i + 1];
    for (std::size_t k = 0; k < cells[i].signature.size(); ++k) EXPECT_EQ(row[1 + k], std::to_string(cells[i].signature[k]));
    EXPECT_NE(std::stol(row.back()), 0);
  }
}

TEST(Cli, HodgeGenericExample) {
  const auto r = run({"hodge", "--family", "generic-p2", "--r", "5", "--weights", "3/10,3/10,3/10,3/10,3/10"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(r.out, "n\tp\tdim\n2\t0\t0\n2\t1\t3\n2\t2\t3\n");
  const auto j = io::parse_text(run({"--json", "hodge", "--family", "generic-p2", "--weights", "3/10,3/10,3/10,3/10,3/10"}).out);
  EXPECT_EQ(io::decode_grf(j["table"]), generic_grf(5, WeightVector(std::vector<Rational>(5, Rational(3, 10)))));
  const auto s = run({"hodge", "--family", "d84", "--weights", "3/4,3/4,3/4,3/4,3/4,3/4,3/4,3/4"});
  EXPECT_EQ(s.out, "n\tp\tdim\n2\t2\t1\n");
  const auto c = run({"hodge", "--family", "cone-p3", "--weights", "1/2,1/2,1/2,1/2"});
  EXPECT_EQ(c.code, cli::ok);
  EXPECT_EQ(tsv(c.out)[1][0], "3");
}

TEST(Cli, TwistedAlexExample) {
  const auto r = run({"twisted-alex", "--presentation", kTrefoil, "--rep", kTrivial1, "--check-cyclotomic", "0"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto rows = tsv(r.out);
  ASSERT_GE(rows.size(), 4u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"Delta0", "t - 1"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"Delta1", "t^2 - t + 1"}));
  EXPECT_EQ(rows[3], (std::vector<std::string>{"Delta2", "1"}));
  EXPECT_EQ(rows[4][0], "cyclotomic0");
  EXPECT_EQ(rows[5], (std::vector<std::string>{"cyclotomic1", "true", "Phi6"}));

  const auto j = io::parse_text(run({"twisted-alex", "--json", "--presentation", kTrefoil, "--rep", kTrivial1}).out);
  EXPECT_EQ(io::decode_laurent(j["torsion"]["numerator"]), Laurent1::from_coefficients({1, -1, 1}).normalized());
  EXPECT_EQ(io::decode_laurent(j["torsion"]["denominator"]), Laurent1::from_coefficients({-1, 1}).normalized());
  EXPECT_FALSE(j.contains("cyclotomic"));
}

TEST(Cli, CohomologyAndCovers) {
  auto r = run({"cohomology", "--arrangement", kGeneric4, "--weights", "1/5,2/7,1/3,1/11"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(r.out, "engine\th0\th1\th2\n"
                   "aomoto\t0\t0\t3\n");
  // weights are reduced mod 1; a resonant entry on a generic arrangement goes to Koszul
  r = run({"cohomology", "--arrangement", kGeneric4, "--weights", "1,3/2,1/3,1/4"});
  EXPECT_EQ(tsv(r.out)[1][0], "koszul");
  r = run({"cohomology", "--presentation", kTrefoil, "--chi", "1/6"});
  EXPECT_EQ(r.out, "engine\th0\th1\th2\nfox\t0\t1\t1\n");
  const auto j = io::parse_text(run({"--json", "cohomology", "--presentation", kTrefoil, "--chi", "1/6"}).out);
  EXPECT_EQ(j["h"].get<std::vector<long>>(), (std::vector<long>{0, 1, 1}));
  EXPECT_EQ(io::decode_character(j["character"]), Character({RootOfUnity::of(6, 1)}));

  r = run({"covers", "--presentation", kFree2, "--moduli", "2,2"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto rows = tsv(r.out);
  EXPECT_EQ(rows.back(), (std::vector<std::string>{"total", "5"}));
  EXPECT_EQ(rows.size(), 6u);
  const auto jc = io::parse_text(run({"covers", "--json", "--presentation", kFree2, "--moduli", "3,3"}).out);
  EXPECT_EQ(jc["total"].get<long>(), 10);
  // canonical order of characters
  std::vector<Character> chis;
  for (const auto& row : jc["characters"]) chis.push_back(io::decode_character(row["character"]));
  EXPECT_TRUE(std::is_sorted(chis.begin(), chis.end()));
}

TEST(Cli, Charvar) {
  const auto r = run({"charvar", "--presentation", kTrefoil, "--order-bound", "6"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto rows = tsv(r.out);
  EXPECT_EQ(rows[0][0].substr(0, 1), "#");
  EXPECT_EQ(rows[1][0], "depth");
  const auto j = io::parse_text(run({"charvar", "--json", "--presentation", kTrefoil, "--order-bound", "6"}).out);
  EXPECT_EQ(j["status"], "candidates");
  const auto rep = characteristic_variety_sweep(io::decode_presentation(io::load_file(kTrefoil)), 6);
  ASSERT_EQ(j["components"].size(), rep.components.size());
  for (std::size_t i = 0; i < rep.components.size(); ++i)
    EXPECT_EQ(io::decode_subtorus(j["components"][i]["subtorus"]), rep.components[i].subtorus);
}

TEST(Cli, PolytopesJsonRoundTripAndDeterminism) {
  const auto a = run({"polytopes", "--json", "--arrangement", kGeneric4});
  const auto b = run({"polytopes", "--json", "--arrangement", kGeneric4});
  ASSERT_EQ(a.code, cli::ok) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"polytopes", "--arrangement", kGeneric4}).out, run({"polytopes", "--arrangement", kGeneric4}).out);
  const auto j = io::parse_text(a.out);
  const auto cells = polytope_decomposition(residue_system(io::decode_arrangement(io::load_file(kGeneric4))));
  ASSERT_EQ(j["cells"].size(), cells.size());
  std::vector<std::vector<long>> sigs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = j["cells"][i];
    sigs.push_back(c["signature"].get<std::vector<long>>());
    EXPECT_EQ(sigs.back(), cells[i].signature);
    EXPECT_EQ(io::decode_polytope(c["polytope"]), cells[i].polytope);
    EXPECT_EQ(io::decode_weights(c["witness"]), cells[i].witness);
    EXPECT_EQ(io::decode_subtorus(c["closure"]), zariski_closure_of_polytope(cells[i].polytope, cells[i].witness));
    // re-encoding the decoded values reproduces the emitted JSON
    EXPECT_EQ(io::encode(io::decode_polytope(c["polytope"])), c["polytope"]);
    EXPECT_EQ(io::encode(io::decode_subtorus(c["closure"])), c["closure"]);
  }
  EXPECT_TRUE(std::is_sorted(sigs.begin(), sigs.end()));
}

TEST(Cli, DataFilesMatchFamilies) {
  EXPECT_EQ(io::decode_arrangement(io::load_file(kCeva)), families::ceva());
  EXPECT_EQ(io::decode_arrangement(io::load_file(data_path("arrangements/d84.json"))), families::d84());
  EXPECT_EQ(io::decode_arrangement(io::load_file(kGeneric4)), families::generic_lines(4));
  EXPECT_EQ(io::decode_arrangement(io::load_file(data_path("arrangements/cone5.json"))), families::generic_cone(5));
  EXPECT_EQ(io::decode_presentation(io::load_file(kTrefoil)), families::trefoil());
  EXPECT_EQ(io::decode_presentation(io::load_file(data_path("presentations/figure8.json"))), families::figure_eight());
  EXPECT_EQ(io::decode_presentation(io::load_file(data_path("presentations/torus_skeleton3.json"))), families::torus_skeleton(3));
  for (const auto& f : {families::ceva(), families::d84(), families::generic_cone(3)})
    EXPECT_EQ(io::decode_arrangement(io::encode(f)), f);
  const auto p = families::figure_eight();
  EXPECT_EQ(io::decode_presentation(io::encode(p)), p);
}
