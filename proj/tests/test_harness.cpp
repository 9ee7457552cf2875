#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "support.hpp"

using namespace tlc;
using namespace tlc::harness;

namespace {

std::string run_to_string(const std::string& id, SuiteParams p, Summary* sum = nullptr,
                          SinkFormat format = SinkFormat::text) {
  std::ostringstream os;
  ReportSink sink(os, format);
  sink.set_timing(false);
  Summary s = run_suite(id, p, sink);
  if (sum) *sum = s;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string seed_one_dump() {
  RandomModelParams p;
  p.seed = 1;
  p.min_vars = 2;
  p.max_vars = 2;
  p.max_gens = 2;
  p.ideals = IdealModel::monomial;
  std::string out;
  for (const auto& i : random_instances<Rational>(p, 5)) out += "# " + i.label + " " + i.digest() + "\n" + i.serialize();
  return out;
}

}  // namespace

TEST(Generator, MatchesStoredSeedOneInstances) {
  EXPECT_EQ(seed_one_dump(), read_file(std::string(TLC_FIXTURES) + "/random_seed1.txt"));
}

TEST(Generator, SameSeedSameInstances) {
  RandomModelParams p;
  p.seed = 99;
  p.ideals = IdealModel::mixed;
  auto a = random_instances<Rational>(p, 20), b = random_instances<Rational>(p, 20);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].serialize(), b[k].serialize());
  p.seed = 100;
  auto c = random_instances<Rational>(p, 20);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) differs = differs || a[k].serialize() != c[k].serialize();
  EXPECT_TRUE(differs);
}

TEST(Generator, ZeroCountIsEmpty) { EXPECT_TRUE(random_instances<Rational>(RandomModelParams{}, 0).empty()); }

TEST(Generator, OutsideDeskScaleRejected) {
  RandomModelParams p;
  p.max_vars = 6;
  EXPECT_THROW(random_instances<Rational>(p, 1), std::invalid_argument);
}

TEST(Generator, InstancesAreProperAndReplayable) {
  RandomModelParams p;
  p.ideals = IdealModel::mixed;
  for (const auto& inst : random_instances<Rational>(p, 30)) {
    EXPECT_FALSE(inst.left_ideal->is_unit());
    EXPECT_FALSE(inst.right_ideal->is_unit());
    auto s = session::parse_session(inst.serialize());
    EXPECT_EQ(s.declaration_count(), 8u);
    EXPECT_EQ(session::parse_session(s.serialize()).serialize(), s.serialize());
  }
}

TEST(Digest, StableAndSensitive) {
  auto inst = example_instance<Rational>();
  EXPECT_EQ(inst.digest(), example_instance<Rational>().digest());
  EXPECT_EQ(inst.digest().size(), 16u);
  auto other = inst;
  other.i = MonomialIdeal::zero(2);
  EXPECT_NE(inst.digest(), other.digest());
}

TEST(Suites, UnknownIdThrows) {
  EXPECT_THROW(suite_info("no-such-suite"), std::invalid_argument);
  std::ostringstream os;
  ReportSink sink(os, SinkFormat::text);
  EXPECT_THROW(run_suite("no-such-suite", {}, sink), std::invalid_argument);
}

TEST(Suites, ExampleReproduced) {
  Summary s;
  run_to_string("example-3.7", {}, &s);
  EXPECT_EQ(s.passed, 8u);
  EXPECT_EQ(s.failed, 0u);
  auto reports = check_example<Rational>();
  std::map<std::string, std::string> lhs;
  for (const auto& r : reports) lhs[r.check] = render(r.lhs);
  EXPECT_EQ(lhs["L-depth"], "0");
  EXPECT_EQ(lhs["L-dim"], "1");
  EXPECT_EQ(lhs["L-f"], "1");
  EXPECT_EQ(lhs["T-dim"], "2");
}

TEST(Suites, ExampleOverPrimeField) {
  SuiteParams p;
  p.field = FieldSpec{32003};
  Summary s;
  run_to_string("example-3.7", p, &s);
  EXPECT_EQ(s.passed, 8u);
  EXPECT_EQ(s.failed, 0u);
}

TEST(Suites, GoldenHasNoFailures) {
  Summary s;
  run_to_string("golden", {}, &s);
  EXPECT_EQ(s.failed, 0u);
  EXPECT_GT(s.passed, 100u);
}

TEST(Suites, DegenerateInstancesCoverZeroAndUnitCases) {
  auto d = degenerate_instances<Rational>();
  EXPECT_GE(d.size(), 10u);
  bool unit_i = false, zero_l = false;
  for (const auto& inst : d) {
    unit_i = unit_i || inst.i.is_unit() || inst.j.is_unit();
    zero_l = zero_l || inst.l.is_zero() || inst.n.is_zero();
  }
  EXPECT_TRUE(unit_i);
  EXPECT_TRUE(zero_l);
}

TEST(Suites, DeterministicWithoutTiming) {
  SuiteParams p;
  p.seed = 4;
  p.count = 6;
  EXPECT_EQ(run_to_string("thm-2.6-random-200", p), run_to_string("thm-2.6-random-200", p));
  EXPECT_EQ(run_to_string("oracle-agreement", p, nullptr, SinkFormat::records),
            run_to_string("oracle-agreement", p, nullptr, SinkFormat::records));
}

TEST(Suites, SmallRandomRunsPass) {
  SuiteParams p;
  p.seed = 2;
  p.count = 5;
  for (const char* id : {"thm-2.6-random-200", "oracle-agreement", "cor-3.3-random", "prop-3.4-random",
                         "fact-4.4-random", "kunneth-small", "corner-random"}) {
    Summary s;
    run_to_string(id, p, &s);
    EXPECT_EQ(s.failed, 0u) << id;
    EXPECT_GT(s.passed, 0u) << id;
  }
}

TEST(Suites, CountOverridesDefault) {
  SuiteParams p;
  p.count = 3;
  std::vector<CheckReport> keep;
  std::ostringstream os;
  ReportSink sink(os, SinkFormat::text);
  run_suite("fact-4.4-random", p, sink, &keep);
  std::set<std::string> instances;
  for (const auto& r : keep) instances.insert(r.instance);
  EXPECT_EQ(instances.size(), 3u);
}

TEST(Mutation, FlipsEveryGoldenVerdict) {
  auto plain = golden_reports<Rational>(false);
  auto mutated = golden_reports<Rational>(true);
  ASSERT_EQ(plain.size(), mutated.size());
  std::size_t flipped = 0;
  for (std::size_t k = 0; k < plain.size(); ++k) {
    ASSERT_EQ(plain[k].id(), mutated[k].id());
    if (plain[k].verdict == Verdict::skip) {
      EXPECT_EQ(mutated[k].verdict, Verdict::skip);
      continue;
    }
    EXPECT_NE(plain[k].verdict, mutated[k].verdict) << plain[k].id() << " " << plain[k].instance;
    ++flipped;
  }
  EXPECT_GT(flipped, 100u);
}

TEST(Mutation, EverySideKindChanges) {
  std::vector<Side> sides = {ExtendedInt(3),
                             ExtendedInt::plus_infinity(),
                             ExtendedInt::minus_infinity(),
                             true,
                             std::vector<std::string>{},
                             std::vector<long>{},
                             std::vector<long>{0, 2},
                             std::string("CM")};
  for (const auto& s : sides) EXPECT_NE(mutate(s), s) << render(s);
}

TEST(Reports, RecordFieldOrder) {
  std::ostringstream os;
  ReportSink sink(os, SinkFormat::records);
  sink.set_timing(false);
  ReportBuilder b("thm", "inst", "0123", "ring A = QQ[x];\n", false);
  b.compare("c", ExtendedInt(1), "left", ExtendedInt(2), "right", "why");
  for (const auto& r : b.take()) sink.write(r);
  auto j = nlohmann::ordered_json::parse(os.str());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"theorem", "check", "instance", "digest", "lhs", "rhs", "lhs_source",
                                            "rhs_source", "verdict", "millis", "note", "instance_text"}));
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["millis"], 0.0);
  EXPECT_EQ(j["instance_text"], "ring A = QQ[x];\n");
}

TEST(Reports, TextLineAndQuietMode) {
  ReportBuilder b("thm", "inst", "0123", "", false);
  b.compare("same", ExtendedInt(1), "a", ExtendedInt(1), "b");
  b.skip("later", "not applicable");
  auto reports = b.take();
  std::ostringstream loud, quiet;
  ReportSink s1(loud, SinkFormat::text), s2(quiet, SinkFormat::text, true);
  s1.set_timing(false);
  for (const auto& r : reports) {
    s1.write(r);
    s2.write(r);
  }
  EXPECT_EQ(loud.str(), "PASS thm/same [inst 0123] 1 (a) vs 1 (b) 0.0ms\nSKIP thm/later [inst 0123] not applicable\n");
  EXPECT_EQ(quiet.str(), "SKIP thm/later [inst 0123] not applicable\n");
}

TEST(Reports, LongVectorsAreSummarized) {
  std::vector<long> v(30, 0);
  v[3] = 2;
  auto s = render(v);
  EXPECT_NE(s.find("30 entries, sum 2, nonzero 1"), std::string::npos);
  EXPECT_EQ(render(std::vector<long>{1, 2}), "[1 2]");
}

TEST(Checks, OracleAgreementOnExampleModule) {
  auto r = make_ring<Rational>({}, variable_names("x", 2));
  for (const auto& rep : check_oracle_agreement<Rational>(r, test::lp_ideal(), "lp", false))
    EXPECT_NE(rep.verdict, Verdict::fail) << rep.id();
}

TEST(Checks, SequentialTransferOnExample) {
  auto reports = run_checks<Rational>(example_instance<Rational>(), kThm46 | kFact44);
  std::size_t passes = 0;
  for (const auto& r : reports) {
    EXPECT_NE(r.verdict, Verdict::fail) << r.id();
    passes += r.verdict == Verdict::pass;
  }
  EXPECT_GT(passes, 4u);
}
