#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace tlc;
using namespace tlc::session;

namespace {

const std::string kFixtures = TLC_FIXTURES;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int status = -1;
  std::string out, err;
};

/// Runs the command-line tool with `args`, feeding `input` on standard input.
Run run_cli(const std::string& args, const std::string& input = "") {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("tlc_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string stem = (dir / std::to_string(counter++)).string();
  std::ofstream(stem + ".in") << input;
  std::string cmd = std::string("'") + TLC_CLI_PATH + "' " + args + " < '" + stem + ".in' 2> '" + stem + ".err'";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = ::pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.err = read_file(stem + ".err");
  return r;
}

std::string execute_text(const std::string& text) {
  std::ostringstream os;
  ExecOptions opt;
  opt.timing = false;
  execute(parse_session(text), opt, os);
  return os.str();
}

SourcePos error_pos(const std::string& text) {
  try {
    parse_session(text);
  } catch (const SessionError& e) {
    return e.pos();
  }
  return {0, 0};
}

const char* kExampleOutput =
    "depth L = 0\ndim L = 1\nf L = 1\nf T = 1\ndim T = 2\nclass T = seq-CM\n";

}  // namespace

TEST(Parse, ThreeDeclarations) {
  auto s = parse_session("ring A = QQ[x1,x2]; ideal I = (x1^2, x1*x2); module L = A/I;");
  EXPECT_EQ(s.declaration_count(), 3u);
  EXPECT_EQ(s.command_count(), 0u);
}

TEST(Parse, ExampleSessionShape) {
  auto s = parse_session(read_file(kFixtures + "/example_3_7.session"));
  EXPECT_EQ(s.declaration_count(), 7u);
  EXPECT_EQ(s.command_count(), 6u);
}

TEST(Parse, UndeclaredNameReportedAtUse) {
  std::string text = "ring A = QQ[x1,x2];\nmodule L = A/I;\nideal I = (x1);\n";
  EXPECT_EQ(error_pos(text), (SourcePos{2, 14}));
  EXPECT_THROW(parse_session("ring A = QQ[x];\ntensor T = L (*) L;\n"), SessionError);
}

TEST(Parse, RedeclarationRejected) {
  EXPECT_EQ(error_pos("ring A = QQ[x];\nring A = QQ[y];\n"), (SourcePos{2, 6}));
  EXPECT_THROW(parse_session("ring A = QQ[x]; module A = A;"), SessionError);
}

TEST(Parse, KindMismatchRejected) {
  EXPECT_THROW(parse_session("ring A = QQ[x]; compute depth A;"), SessionError);
  EXPECT_THROW(parse_session("ring A = QQ[x]; ideal I = (x); module L = I/I;"), SessionError);
}

TEST(Parse, SyntaxDiagnosticsCarryPosition) {
  EXPECT_EQ(error_pos("ring A = QQ[x1,x2];\nideal I = (x1 x2);\n"), (SourcePos{2, 15}));
  EXPECT_EQ(error_pos("ring A = QQ[x];\nfrobnicate;\n"), (SourcePos{2, 1}));
  EXPECT_EQ(error_pos("ring A = FF 4[x];"), (SourcePos{1, 13}));
  EXPECT_EQ(error_pos("ring A = QQ[x]"), (SourcePos{1, 15}));
}

TEST(Parse, FieldLiterals) {
  auto s = parse_session("ring A = FF 32003[x, y]; ring B = QQ[z];");
  EXPECT_EQ(std::get<RingDecl>(s.statements[0].stmt).field.characteristic, 32003u);
  EXPECT_EQ(std::get<RingDecl>(s.statements[1].stmt).field.characteristic, 0u);
}

TEST(Parse, RoundTripIsIdentical) {
  std::vector<std::string> texts = {
      read_file(kFixtures + "/example_3_7.session"),
      read_file(kFixtures + "/golden_check.session"),
      "ring A = QQ[x1,x2];\nmodule C = coker(A, [0, 1], [[x1, -1], [x2^2, x2]]);\n"
      "ideal P = (x1 - 2/3*x2, 0) in C;\ncompute grade P C;\nsuite kunneth-small seed=3 count=2;\n",
  };
  harness::RandomModelParams p;
  p.ideals = harness::IdealModel::mixed;
  for (const auto& inst : harness::random_instances<Rational>(p, 20)) texts.push_back(inst.serialize());
  for (const auto& t : texts) {
    auto a = parse_session(t);
    auto b = parse_session(a.serialize());
    EXPECT_TRUE(a.same_statements(b));
    EXPECT_EQ(a.serialize(), b.serialize());
  }
}

TEST(Execute, ExampleValues) {
  EXPECT_EQ(execute_text(read_file(kFixtures + "/example_3_7.session")), kExampleOutput);
}

TEST(Execute, InfinitiesRendered) {
  auto out = execute_text("ring A = QQ[x1,x2]; module Z = A/(1); compute depth Z; compute dim Z;");
  EXPECT_EQ(out, "depth Z = +inf\ndim Z = -inf\n");
}

TEST(Execute, GradeAndCdFromCech) {
  // Every element of L is killed by x1^2, so both vanish; x2 is a nonzerodivisor on A.
  auto out = execute_text(
      "ring A = QQ[x1,x2]; ideal I = (x1) in A; module L = A/(x1^2, x1*x2); compute grade I L; compute cd I L;");
  EXPECT_EQ(out, "grade I L = 0\ncd I L = 0\n");
  out = execute_text("ring A = QQ[x1,x2]; ideal I = (x2) in A; module R = A/(0); compute grade I R; compute cd I R;");
  EXPECT_EQ(out, "grade I R = 1\ncd I R = 1\n");
}

TEST(Execute, InhomogeneousInputFailsWithLine) {
  try {
    execute_text("ring A = QQ[x1,x2];\nmodule L = A/(x1^2 + x2);\ncompute depth L;\n");
    FAIL() << "expected an error";
  } catch (const SessionError& e) {
    EXPECT_EQ(e.pos().line, 2);
  }
}

TEST(Execute, GoldenChecksPass) {
  std::ostringstream os;
  ExecOptions opt;
  auto r = execute(parse_session(read_file(kFixtures + "/golden_check.session")), opt, os);
  EXPECT_EQ(r.failed_checks, 0u);
  EXPECT_EQ(os.str().find("FAIL"), std::string::npos);
}

TEST(Execute, FieldFlag) {
  EXPECT_EQ(parse_field_flag("QQ").characteristic, 0u);
  EXPECT_EQ(parse_field_flag("FFp:7").characteristic, 7u);
  EXPECT_THROW(parse_field_flag("FFp:4"), std::invalid_argument);
  EXPECT_THROW(parse_field_flag("RR"), std::invalid_argument);
}

TEST(Binary, ExampleSessionExitsZero) {
  auto r = run_cli("'" + kFixtures + "/example_3_7.session'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, kExampleOutput);
}

TEST(Binary, ReadsStandardInput) {
  auto r = run_cli("-", read_file(kFixtures + "/example_3_7.session"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, kExampleOutput);
}

TEST(Binary, CheckOnGoldenInstancePasses) {
  auto r = run_cli("", "ring A = QQ[x1,x2]; ring B = QQ[y1,y2];\nmodule L = A/(x1^2, x1*x2);\nmodule N = B/(y1);\n"
                       "check thm2.6 L N;\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS thm2.6/grade"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Binary, SuiteCommandExitsZero) {
  auto r = run_cli("--no-timing --quiet", "suite oracle-agreement seed=7 count=50;\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("suite oracle-agreement: 350 passed, 0 failed"), std::string::npos);
}

TEST(Binary, MutatedCheckExitsOne) {
  auto r = run_cli("--mutate", "check example-3.7;\n");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Binary, ParseErrorExitsTwo) {
  auto r = run_cli("", "ring A = QQ[x1,x2];\nideal I = (x1 x2);\n");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2, column 15"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Binary, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("--suite no-such-suite").status, 2);
  EXPECT_EQ(run_cli("--field FFp:4 --suite example-3.7").status, 2);
  EXPECT_EQ(run_cli("--format xml -").status, 2);
  EXPECT_EQ(run_cli("/nonexistent/file.session").status, 2);
}

TEST(Binary, SuiteFlagAndRecords) {
  auto r = run_cli("--suite example-3.7 --format records --no-timing");
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    ++n;
    if (j.contains("suite")) {
      EXPECT_EQ(j["failed"], 0);
    } else {
      EXPECT_EQ(j["verdict"], "pass");
    }
  }
  EXPECT_EQ(n, 9u);
}

TEST(Binary, SuiteOutputReproducible) {
  auto a = run_cli("--suite thm-2.6-random-200 --count 8 --seed 5 --no-timing --format records");
  auto b = run_cli("--suite thm-2.6-random-200 --count 8 --seed 5 --no-timing --format records");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Binary, ListsSuitesAndParsesOnly) {
  auto list = run_cli("--list-suites");
  EXPECT_EQ(list.status, 0);
  for (const auto& s : harness::suite_catalog()) EXPECT_NE(list.out.find(s.id), std::string::npos);
  auto text = read_file(kFixtures + "/example_3_7.session");
  auto po = run_cli("--parse-only -", text);
  EXPECT_EQ(po.status, 0);
  EXPECT_EQ(po.out, parse_session(text).serialize());
}
