#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "plot.hpp"
#include "puiseux/puiseux.hpp"

using namespace puiseux;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(PUISEUX_SPECS_DIR) + "/" + name + ".json"; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, MonoidElasticityOfHalfThird) {
  const auto r = run({"elasticity", "--spec", spec("half_third"), "--mode", "truncated", "--depth", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3/2\n");
}

TEST(Cli, LengthsOfOneInFactorial) {
  const auto r = run({"lengths", "--spec", spec("factorial"), "--depth", "3", "--element", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{2, 3, 5}\n");
}

TEST(Cli, BifurcusFirstStage) {
  const auto r = run({"bifurcus", "--stages", "1", "--bound", "3/2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("7/6 prime 13 atoms 79/156 103/156"), std::string::npos) << r.out;
}

TEST(Cli, BifurcusJsonVerifiesFromFile) {
  const auto built = run({"bifurcus", "--stages", "2", "--bound", "3/2", "--format", "json"});
  ASSERT_EQ(built.code, 0);
  const auto path = std::filesystem::temp_directory_path() / "puiseux_cli_staged.json";
  std::ofstream(path) << built.out;
  const auto r = run({"verify-bifurcus", "--input", path.string(), "--bound", "3/2", "--format", "json"});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("min_nonzero"), "1/3");
  EXPECT_TRUE(j.at("atoms_preserved").get<bool>());
  EXPECT_TRUE(j.at("length_two_everywhere").get<bool>());
}

TEST(Cli, PlotPrimaryDenseIntegerRows) {
  const auto r = run({"plot", "--spec", spec("primarydense"), "--depth", "8", "--bound", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  const auto rows = lines(r.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], "element,elasticity,marker");
  std::vector<std::string> integer_rows;
  for (const auto& row : rows) {
    if (row.ends_with(",integer-element")) integer_rows.push_back(row);
  }
  EXPECT_EQ(integer_rows,
            (std::vector<std::string>{"2,4/3,integer-element", "3,6/5,integer-element",
                                      "4,4/3,integer-element", "5,11/8,integer-element"}));
}

TEST(Cli, PlotSingleGeneratorIsEmpty) {
  const auto path = std::filesystem::temp_directory_path() / "puiseux_cli_half.json";
  std::ofstream(path) << R"({"schema": 1, "families": [{"generators": ["1/2"]}]})";
  const auto r = run({"plot", "--spec", path.string(), "--depth", "3", "--bound", "7"});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "element,elasticity,marker\n");
}

TEST(Cli, PlotBfplotMaximum) {
  const auto r = run({"plot", "--spec", spec("bfplot"), "--depth", "10", "--bound", "13"});
  ASSERT_EQ(r.code, 0) << r.err;
  PosRational best;
  std::vector<std::string> at;
  for (const auto& row : lines(r.out)) {
    if (row.starts_with("element")) continue;
    const auto c1 = row.find(',');
    const auto c2 = row.find(',', c1 + 1);
    const auto rho = PosRational::parse(row.substr(c1 + 1, c2 - c1 - 1));
    if (best < rho) {
      best = rho;
      at.clear();
    }
    if (rho == best) at.push_back(row.substr(0, c1));
  }
  EXPECT_EQ(best, PosRational::parse("8/3"));
  EXPECT_EQ(at, (std::vector<std::string>{"4", "8", "12"}));
}

TEST(Cli, PlotValuesMatchLibrary) {
  const auto tm = truncate(catalog("infiniteunstable"), 5);
  const auto data = cli::plot_data(tm, PosRational(4), true);
  ASSERT_FALSE(data.truncated_by);
  EXPECT_EQ(data.records.size() + 1, elements_up_to(tm, PosRational(4)).size());
  for (const auto& rec : data.records) {
    EXPECT_EQ(rec.elasticity, element_elasticity(tm, rec.element)) << rec.element.str();
    EXPECT_GE(rec.elasticity, PosRational(1));
    EXPECT_EQ(rec.marker == cli::Marker::integer_element, rec.element.is_integer());
  }
}

TEST(Cli, PlotMarksShiftedElements) {
  const auto tm = truncate(catalog("primarydense"), 5);
  EXPECT_EQ(cli::classify_marker(tm, PosRational::parse("3/2")), cli::Marker::shifted_element);
  EXPECT_EQ(cli::classify_marker(tm, PosRational::parse("2")), cli::Marker::integer_element);
  EXPECT_EQ(cli::classify_marker(tm, PosRational::parse("1/2")), cli::Marker::other);
}

TEST(Cli, PlotCapOverflowIsPartial) {
  const auto r = run({"plot", "--spec", spec("half_third"), "--bound", "6", "--grid-limit", "4",
                      "--cap", "3", "--all"});
  EXPECT_EQ(r.code, 1);
  const auto rows = lines(r.out);
  ASSERT_GE(rows.size(), 3u);
  EXPECT_EQ(rows.front(), "element,elasticity,marker");
  EXPECT_TRUE(rows.back().starts_with("# resource limit reached")) << rows.back();
}

TEST(Cli, PlotDecimalColumns) {
  const auto r = run({"plot", "--spec", spec("half_third"), "--bound", "1", "--decimal"});
  EXPECT_EQ(r.out, "element,elasticity,marker,element_approx,elasticity_approx\n"
                   "1,3/2,integer-element,1,1.5\n");
}

TEST(Cli, CapFromEnvironmentAndFlag) {
  const std::vector<std::string> args = {"factorize", "--spec", spec("half_third"), "--element", "3"};
  {
    ScopedEnv env("PUISEUX_CAP", "2");
    const auto r = run(args);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--cap", "100"});
    EXPECT_EQ(run(with_flag).code, 0);
  }
  EXPECT_EQ(run(args).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"atoms"}).code, 2);
  EXPECT_EQ(run({"atoms", "--spec", spec("half_third"), "--bogus"}).code, 2);
  EXPECT_EQ(run({"lengths", "--spec", spec("half_third"), "--element", "x/y"}).code, 2);
  EXPECT_EQ(run({"atoms", "--spec", spec("half_third"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"elasticity", "--spec", spec("half_third"), "--mode", "fuzzy"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("plot"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"factorize", "--spec", spec("half_third"), "--element", "1/6"}).code, 1);
  EXPECT_EQ(run({"atoms", "--spec", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"elasticity", "--spec", spec("half_third"), "--mode", "symbolic"}).code, 1);
  EXPECT_EQ(run({"catalog", "--name", "nosuch"}).code, 1);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run({"atoms", "--spec", spec("bfplot"), "--depth", "2"}).out, "1/2\n6/5\n4/3\n");
  EXPECT_EQ(run({"contains", "--spec", spec("half_third"), "--element", "7/6"}).out, "true\n");
  EXPECT_EQ(run({"factorize", "--spec", spec("half_third"), "--element", "1"}).out,
            "2 x 1/2\n3 x 1/3\n");
  EXPECT_EQ(run({"elasticity", "--spec", spec("bfplot"), "--depth", "10", "--element", "4"}).out,
            "8/3\n");
  EXPECT_EQ(run({"rset", "--spec", spec("half_third"), "--bound", "2"}).out, "{1, 5/4, 4/3, 3/2}\n");
  EXPECT_EQ(run({"witnesses", "--spec", spec("bfplot"), "--depth", "10", "--bound", "13"}).out,
            "{4, 8, 12}\n");
  EXPECT_EQ(run({"status", "--spec", spec("primarydense")}).out.substr(0, 3), "FF\n");
  EXPECT_EQ(run({"status", "--spec", spec("bfnotff"), "--depth", "3", "--witness", "1"})
                .out.substr(0, 10),
            "BF-not-FF\n");
  EXPECT_EQ(run({"decompose", "--spec", spec("primarystable"), "--depth", "14", "--element",
                 "101/82"})
                .out,
            "stable 30/41\nunstable 1/2\nunique true\n");
  const auto shift = run({"shift-check", "--spec", spec("primarydense"), "--depth", "5",
                          "--element", "1", "--atom", "3/5"});
  EXPECT_EQ(shift.code, 0);
  EXPECT_EQ(shift.out, "pass\nL(1) = {2}\nL(8/5) = {3}\n");
  const auto density = run({"density", "--a", "2*n-1", "--b", "n", "--target", "3/2", "--format", "json"});
  EXPECT_EQ(density.code, 0) << density.err;
  EXPECT_TRUE(nlohmann::json::parse(density.out).at("found").get<bool>());
  const auto classify = run({"classify", "--spec", spec("primarystable"), "--depth", "13", "--format", "csv"});
  EXPECT_NE(classify.out.find("30/41,stable,41\n"), std::string::npos) << classify.out;
  EXPECT_NE(classify.out.find("12/37,unstable,37\n"), std::string::npos);
  const auto names = lines(run({"catalog"}).out);
  EXPECT_EQ(names.size(), 7u);
  const auto printed = run({"catalog", "--name", "bfplot"}).out;
  EXPECT_EQ(spec_to_json(parse_spec(printed)), printed);
}

TEST(Cli, JsonReports) {
  const auto sym = run({"elasticity", "--spec", spec("primarydense"), "--mode", "symbolic", "--format", "json"});
  const auto j = nlohmann::json::parse(sym.out);
  EXPECT_EQ(j.at("value"), "inf");
  EXPECT_EQ(j.at("mode"), "symbolic");
  const auto atoms = nlohmann::json::parse(
      run({"atoms", "--spec", spec("half_third"), "--format", "json"}).out);
  EXPECT_EQ(atoms.at("denom_lcm"), "6");
  EXPECT_EQ(atoms.at("scaled_gens"), (std::vector<std::string>{"2", "3"}));
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"plot", "--spec", spec("infiniteunstable"), "--depth", "5",
                                         "--bound", "6", "--all"};
  EXPECT_EQ(run(args).out, run(args).out);
}
