#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "test_util.hpp"
#include "waring/cli.hpp"

using namespace waring;
using namespace testutil;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("waring_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, DeborderPipelineVerifies) {
  TempDir dir;
  for (int d = 5; d <= 6; ++d) {
    Result fx = run({"fixtures", "eq1-fd", "--d", std::to_string(d)});
    ASSERT_EQ(fx.code, 0) << fx.err;
    Result deb = run({"deborder"}, fx.out);
    ASSERT_EQ(deb.code, 0) << deb.err;
    WaringDecomposition w = parse_waring(deb.out);
    EXPECT_LE(w.size(), static_cast<std::size_t>(3 * d));
    EXPECT_NE(deb.out.find("# fp_bound " + std::to_string(4096 * d)), std::string::npos);
    const std::string poly = dir.write("f.poly", format_poly(eq1(d)));
    const std::string wfile = dir.write("w.waring", deb.out);
    Result v = run({"verify-waring", poly, wfile});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.out, "verified\n");
  }
}

TEST(Cli, TamperedWaringFails) {
  TempDir dir;
  Result deb = run({"deborder"}, run({"fixtures", "intro-tangent", "--d", "4"}).out);
  ASSERT_EQ(deb.code, 0);
  std::string tampered = deb.out;
  tampered.replace(tampered.find("weight=1/16"), 11, "weight=1/17");
  const std::string poly = dir.write("f.poly", "poly n=2 d=4 N=1\n1 ; 3 1\n");
  Result v = run({"verify-waring", poly, dir.write("w.waring", tampered)});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.err.find("not verified"), std::string::npos);
  EXPECT_EQ(run({"verify-waring", poly, dir.write("ok.waring", deb.out)}).code, 0);
}

TEST(Cli, WildCubicGadFails) {
  Result g = run({"gad"}, run({"fixtures", "eq2-wild"}).out);
  EXPECT_EQ(g.code, 3);
  EXPECT_NE(g.err.find("error: DegreeTooLow"), std::string::npos) << g.err;
  Result deb = run({"deborder"}, run({"fixtures", "eq2-wild"}).out);
  EXPECT_EQ(deb.code, 0);
  EXPECT_NE(deb.out.find("# method essential-variables"), std::string::npos);
  EXPECT_EQ(parse_waring(deb.out).polynomial(), eq1(3));
}

TEST(Cli, GadOutputPassesVerifyGad) {
  TempDir dir;
  Result g = run({"gad"}, run({"fixtures", "eq1-fd", "--d", "5"}).out);
  ASSERT_EQ(g.code, 0) << g.err;
  const std::string poly = dir.write("f.poly", format_poly(eq1(5)));
  EXPECT_EQ(run({"verify-gad", poly, dir.write("g.gad", g.out)}).code, 0);
  const std::string other = dir.write("h.poly", format_poly(eq1(5) + eq1(5)));
  EXPECT_EQ(run({"verify-gad", other, dir.write("g2.gad", g.out)}).code, 1);
}

TEST(Cli, VerifyBorder) {
  TempDir dir;
  const std::string border = dir.write("b.border", run({"fixtures", "intro-tangent", "--d", "3"}).out);
  EXPECT_EQ(run({"verify-border", dir.write("f.poly", "poly n=2 d=3 N=1\n1 ; 2 1\n"), border}).code, 0);
  EXPECT_EQ(run({"verify-border", dir.write("g.poly", "poly n=2 d=3 N=1\n2 ; 2 1\n"), border}).code, 1);
  const std::string divergent = dir.write("c.border", "border n=2 d=3 N=1 r=1\nweight=1/e ; 1 0\n");
  Result r = run({"verify-border", dir.write("h.poly", "poly n=2 d=3 N=1\n"), divergent});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("LimitDoesNotExist"), std::string::npos);
}

TEST(Cli, DeborderOfDivergentInputIsAComputationError) {
  Result r = run({"deborder"}, "border n=2 d=3 N=1 r=1\nweight=1/e ; 1 0\n");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("error: LimitDoesNotExist"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"deborder", "--unknown-flag"}).code, 2);
  EXPECT_EQ(run({"fixtures", "eq1-fd"}).code, 2);
  EXPECT_EQ(run({"fixtures", "nope", "--d", "3"}).code, 2);
  EXPECT_EQ(run({"verify-waring", "/nonexistent/f.poly", "/nonexistent/w"}).code, 2);
  Result p = run({"hilbert"}, "poly n=2 d=3 N=1\n1 ; 2 1 1\n");
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find("error: ParseError: line 2"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MaxConductor) {
  const std::string border = run({"fixtures", "eq1-fd", "--d", "5"}).out;
  Result r = run({"--max-conductor", "4", "deborder"}, border);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("ConductorTooLarge"), std::string::npos);
  EXPECT_EQ(run({"deborder", "--max-conductor", "5"}, border).code, 0);
}

TEST(Cli, RankBoundsAndHilbert) {
  Result b = run({"rank-bounds", "--r", "6", "--d", "5", "--n", "5"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("binom_bound 252\n"), std::string::npos);
  EXPECT_NE(b.out.find("fp_bound 20480\n"), std::string::npos);
  Result h = run({"hilbert"}, "poly n=2 d=4 N=1\n1 ; 3 1\n");
  EXPECT_EQ(h.out, "1 2 2 2 1\n");
  Result hj = run({"--json", "hilbert"}, "poly n=2 d=4 N=1\n1 ; 3 1\n");
  EXPECT_EQ(nlohmann::json::parse(hj.out), nlohmann::json::parse("[1,2,2,2,1]"));
}

TEST(Cli, ClassifyNormalForms) {
  for (const char* tag : {"POWER", "SUM2", "TANGENT", "SUM3", "SUM1_TANGENT", "BWR3_LOCAL"}) {
    Result f = run({"fixtures", "normal-form", "--tag", tag, "--d", "5", "--seed", "2"});
    ASSERT_EQ(f.code, 0) << f.err;
    Result c = run({"classify"}, f.out);
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out.rfind(std::string("tag ") + tag + "\n", 0), 0u) << c.out;
    Result j = run({"classify", "--json"}, f.out);
    EXPECT_EQ(nlohmann::json::parse(j.out)["tag"], tag);
  }
}

TEST(Cli, JsonDeborder) {
  Result r = run({"--json", "deborder"}, run({"fixtures", "intro-tangent", "--d", "5"}).out);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["method"], "gad");
  EXPECT_EQ(j["waring"]["r"], 5);
  EXPECT_EQ(j["bounds"]["fp_bound"], "80");
}

TEST(Cli, OutputIsDeterministic) {
  const std::string border = run({"fixtures", "eq1-fd", "--d", "6"}).out;
  EXPECT_EQ(run({"deborder"}, border).out, run({"deborder"}, border).out);
  EXPECT_EQ(run({"fixtures", "normal-form", "--tag", "SUM3", "--d", "4", "--seed", "7"}).out,
            run({"fixtures", "normal-form", "--tag", "SUM3", "--d", "4", "--seed", "7"}).out);
}
