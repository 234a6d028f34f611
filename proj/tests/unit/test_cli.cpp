#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/generators.hpp"
#include "../support/literals.hpp"
#include "veronese/errors.hpp"
#include "veronese/reduction.hpp"
#include "veronese_cli/commands.hpp"
#include "veronese_cli/germ_file.hpp"
#include "veronese_cli/poly_parser.hpp"
#include "veronese_cli/trace_file.hpp"

using namespace veronese;
using namespace veronese::cli;
using testing_support::J;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "veronese");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = std::filesystem::temp_directory_path() / (std::string("veronese_cli_") + info->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

GermFile parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_germ_file(in);
}

}  // namespace

TEST(PolyParser, Literals) {
  EXPECT_EQ(parse_polynomial("s1^5 - 3/2*s1*s2^2", 2, 7),
            MJet::monomial(2, 7, MultiIndex{5, 0}) - MJet::monomial(2, 7, MultiIndex{1, 2}, Rational(3, 2)));
  EXPECT_EQ(parse_polynomial("(s1+s2)^2", 2, 3), parse_polynomial("s1^2 + 2*s1*s2 + s2^2", 2, 3));
  EXPECT_EQ(parse_polynomial("-s1 + 1", 1, 2), MJet::constant(1, 2, 1) - MJet::variable(1, 2, 0));
  EXPECT_EQ(parse_polynomial("s1^4", 1, 3), MJet(1, 3));
  EXPECT_EQ(parse_polynomial("0", 2, 3), MJet(2, 3));
}

TEST(PolyParser, ErrorsNameTheColumn) {
  for (const char* bad : {"s3", "s1 +", "(s1", "1/0", "s1^", "2 s1", "s0", "x"}) {
    EXPECT_THROW(parse_polynomial(bad, 2, 5), parse_error) << bad;
  }
  try {
    parse_polynomial("s1 + s3", 2, 5);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
  }
}

TEST(GermFileFormat, RoundTrip) {
  const auto d = disguise(veronese::veronese(2, 2, 7), 4, 2);
  const auto f = GermFile::from(d.germ);
  const auto back = parse_text(print_germ_file(f));
  EXPECT_FALSE(back.raw);
  EXPECT_EQ(back.germ(), d.germ);
  EXPECT_EQ(print_germ_file(back), print_germ_file(f));

  const auto raw = project_drop(veronese::veronese(3, 2, 8), MultiIndex{1, 0, 1});
  const auto rf = parse_text(print_germ_file(GermFile::from(raw, 2)));
  EXPECT_TRUE(rf.raw);
  EXPECT_EQ(rf.raw_germ(), raw);
  EXPECT_THROW(rf.germ(), domain_error);
}

TEST(GermFileFormat, ErrorsCiteTheLine) {
  const std::string header = "format_version 1\nkind germ\nn 1\nq 1\ntrunc 4\ncomponents 1\n";
  const std::vector<std::pair<std::string, int>> cases{
      {"format_version 2\n", 1},
      {header + "component 1\nterm 1 0/1\nend\n", 8},
      {header + "component 1\nterm 1 1\nterm 1 2\nend\n", 9},
      {header + "component 1\nterm 5 1\nend\n", 8},
      {header + "component 1\nterm 0 1\nend\n", 8},
      {header + "component 1\nterm 1 2/4\nend\n", 8},
      {header + "component 1\nbogus\nend\n", 8},
  };
  for (const auto& [text, line] : cases) {
    try {
      parse_text(text);
      FAIL() << text;
    } catch (const parse_error& e) {
      EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos) << e.what();
    }
  }
  EXPECT_NO_THROW(parse_text("# comment\n" + header + "\ncomponent 1\nterm 1 1\nend\n"));
}

TEST(TraceFileFormat, WitnessReplaysFromJson) {
  const auto d = disguise(veronese::veronese(2, 3, 9), 8, 2);
  const auto dec = decide_veronese(d.germ.raw(), 3, 2);
  ASSERT_EQ(dec.verdict, Decision::Verdict::veronese);
  const auto doc = json::parse(trace_to_json(dec.trace, &dec).dump());
  EXPECT_EQ(doc.at("format"), "veronese-trace");
  EXPECT_EQ(doc.at("verdict"), "reduced");
  const auto w = witness_from_json(doc);
  EXPECT_EQ(w.homography, *dec.trace.witness_homography);
  EXPECT_TRUE(verify_replay(GermFile::from(d.germ), w));
  EXPECT_FALSE(verify_replay(GermFile::from(veronese::veronese(2, 3, 9)), w));
}

TEST(TraceFileFormat, RationalsAndCertificates) {
  EXPECT_EQ(rational_from_json(to_json(Rational(-7, 3))), Rational(-7, 3));
  EXPECT_THROW(rational_from_json(json("1/0")), parse_error);
  const auto trace = run_pipeline(testing_support::pivot_quotient_instance().raw(), 2);
  const auto doc = trace_to_json(trace);
  EXPECT_EQ(doc.at("verdict"), "not-property-P");
  EXPECT_EQ(doc.at("certificate").at("identity"), "pivot_quotient");
  EXPECT_EQ(doc.at("certificate").at("j"), 2);
  EXPECT_EQ(doc.at("certificate").at("violated"), true);
  // the partial witness reaches the germ on which the certificate was found
  EXPECT_EQ(witness_from_json(doc).verdict, "not-property-P");
  const auto flat = trace_to_json(run_pipeline(project_drop(veronese::veronese(2, 2, 7), MultiIndex{1, 1}), 2));
  EXPECT_THROW(witness_from_json(flat), parse_error);
}

TEST_F(TempDir, GenerateCheckDecideReplay) {
  const auto germ = path("g.germ");
  const auto trace = path("g.json");
  ASSERT_EQ(invoke({"generate", "disguise", "--n", "2", "--q", "2", "--trunc", "7", "--seed", "3", "-o", germ}).code,
            kSuccess);
  const auto first = slurp(germ);
  invoke({"generate", "disguise", "--n", "2", "--q", "2", "--trunc", "7", "--seed", "3", "-o", germ});
  EXPECT_EQ(slurp(germ), first);

  auto r = invoke({"check", germ, "--what", "regularity"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "REGULAR osculating dims 2,5\n");

  r = invoke({"decide", germ, "-t", trace});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.rfind("VERONESE", 0), 0u) << r.out;

  r = invoke({"check", germ, "--what", "replay", "--trace", trace});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "REPLAY_OK\n");

  const auto other = path("v.germ");
  invoke({"generate", "veronese", "--n", "2", "--q", "2", "--trunc", "7", "-o", other});
  r = invoke({"check", other, "--what", "replay", "--trace", trace});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "REPLAY_MISMATCH\n");
}

TEST_F(TempDir, NegativeVerdicts) {
  const auto base = path("v.germ");
  const auto proj = path("p.germ");
  const auto fam = path("f.germ");
  const auto bad = path("b.germ");
  invoke({"generate", "veronese", "--n", "2", "--q", "2", "--trunc", "7", "-o", base});
  ASSERT_EQ(invoke({"generate", "project", "--base", base, "--drop", "1,1", "-o", proj}).code, kSuccess);
  auto r = invoke({"check", proj, "--what", "regularity"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "NOT_REGULAR osculating dims 2,4\n");
  EXPECT_EQ(invoke({"decide", proj}).out, "NOT_Q_REGULAR\n");

  invoke({"generate", "family", "--n", "2", "--q", "2", "--trunc", "7", "--R2", "s1^5", "-o", fam});
  EXPECT_EQ(invoke({"check", fam, "--what", "pattern"}).out, "PATTERN\n");
  r = invoke({"check", fam, "--what", "rnc-lines"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out.rfind("NOT_RNC_LINES", 0), 0u);
  r = invoke({"decide", fam, "-t", path("f.json")});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out.rfind("PROPERTY_P_NOT_VERONESE", 0), 0u) << r.out;

  invoke({"generate", "perturb", "--base", base, "--add", "2,0:s2^3", "--add", "1,1:s2^3", "-o", bad});
  const auto cert = path("c.json");
  r = invoke({"decide", bad, "-t", cert});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out.rfind("NOT_PROPERTY_P", 0), 0u) << r.out;
  EXPECT_NE(r.err.find("pivot_quotient"), std::string::npos);
  const auto doc = read_json_file(cert);
  EXPECT_EQ(doc.at("certificate").at("violated"), true);

  r = invoke({"reduce", bad, "-t", path("r.json")});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out.rfind("not-property-P stage r=1", 0), 0u) << r.out;
}

TEST_F(TempDir, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"decide", path("missing.germ")}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "unknown"}).code, kUsage);
  EXPECT_EQ(invoke({"check", path("x"), "--what", "everything"}).code, kUsage);
  std::ofstream(path("broken.germ")) << "format_version 1\nkind germ\nn two\n";
  const auto r = invoke({"decide", path("broken.germ")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}
