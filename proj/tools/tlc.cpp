// Batch front end: runs a session file (or standard input) or a named suite.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tlc/session.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run invariant queries and tensor-product checks over polynomial rings"};
  std::string input;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string suite;
  std::size_t count = 0;
  std::string field = "QQ";
  bool mutate = false, quiet = false, list = false, parse_only = false, no_timing = false;
  app.add_option("input", input, "Session file; '-' or omitted reads standard input");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--seed", seed, "Seed of random suites");
  app.add_option("--suite", suite, "Run one suite instead of a session");
  app.add_option("--count", count, "Instance count of --suite (0 = suite default)");
  app.add_option("--field", field, "QQ or FFp:<prime>");
  app.add_flag("--mutate", mutate, "Perturb one side of every comparison (harness self-test)");
  app.add_flag("--quiet", quiet, "Omit passing checks from text reports");
  app.add_flag("--no-timing", no_timing, "Report 0 ms for every check so reruns are identical");
  app.add_flag("--list-suites", list, "Print the suite catalog");
  app.add_flag("--parse-only", parse_only, "Print the canonical form of the session and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  tlc::session::ExecOptions opt;
  opt.format = format == "records" ? tlc::harness::SinkFormat::records : tlc::harness::SinkFormat::text;
  opt.seed = seed;
  opt.mutate = mutate;
  opt.quiet_passes = quiet;
  opt.timing = !no_timing;
  try {
    opt.field = tlc::session::parse_field_flag(field);
  } catch (const std::invalid_argument& e) {
    std::cerr << "tlc: " << e.what() << '\n';
    return kUsage;
  }

  if (list) {
    for (const auto& s : tlc::harness::suite_catalog())
      std::cout << s.id << " (" << s.default_count << "): " << s.description << '\n';
    return kOk;
  }

  if (!suite.empty()) {
    if (!input.empty()) {
      std::cerr << "tlc: --suite does not take a session file\n";
      return kUsage;
    }
    try {
      tlc::harness::SuiteParams p;
      p.seed = seed;
      p.count = count;
      p.field = opt.field;
      p.mutate = mutate;
      tlc::harness::ReportSink sink(std::cout, opt.format, quiet);
      sink.set_timing(opt.timing);
      auto s = tlc::harness::run_suite(suite, p, sink);
      return s.failed ? kCheckFailure : kOk;
    } catch (const std::invalid_argument& e) {
      std::cerr << "tlc: " << e.what() << '\n';
      return kUsage;
    }
  }

  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "tlc: cannot open " << input << '\n';
      return kUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  try {
    auto session = tlc::session::parse_session(text);
    if (parse_only) {
      std::cout << session.serialize();
      return kOk;
    }
    auto r = tlc::session::execute(session, opt, std::cout);
    return r.failed_checks ? kCheckFailure : kOk;
  } catch (const tlc::session::SessionError& e) {
    std::cout.flush();
    std::cerr << (input.empty() ? "<stdin>" : input) << ": " << e.what() << '\n';
    return kUsage;
  }
}
