#ifndef TLC_HARNESS_REPORT_HPP
#define TLC_HARNESS_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tlc/extended_int.hpp"

namespace tlc::harness {

/// One side of a checked identity.
using Side = std::variant<ExtendedInt, bool, std::vector<std::string>, std::vector<long>, std::string>;

inline std::string render(const Side& s) {
  struct {
    std::string operator()(const ExtendedInt& x) const { return x.to_string(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::vector<std::string>& v) const {
      std::string r = "{";
      for (std::size_t k = 0; k < v.size(); ++k) r += (k ? ", " : "") + v[k];
      return r + "}";
    }
    std::string operator()(const std::vector<long>& v) const {
      if (v.size() > 24) {
        // Long piece vectors: length, sum, support size and an FNV-1a digest.
        long sum = 0, nonzero = 0;
        std::uint64_t h = 14695981039346656037ull;
        for (long x : v) {
          sum += x;
          nonzero += x != 0;
          h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ull;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "[%zu entries, sum %ld, nonzero %ld, fnv %016llx]", v.size(), sum, nonzero,
                      static_cast<unsigned long long>(h));
        return buf;
      }
      std::string r = "[";
      for (std::size_t k = 0; k < v.size(); ++k) r += (k ? " " : "") + std::to_string(v[k]);
      return r + "]";
    }
    std::string operator()(const std::string& s) const { return s; }
  } v;
  return std::visit(v, s);
}

/// Perturbs a side so that it no longer equals its former value.
inline Side mutate(const Side& s) {
  struct {
    Side operator()(const ExtendedInt& x) const {
      if (x.is_finite()) return ExtendedInt(x.value() + 1);
      return x.is_plus_infinity() ? ExtendedInt::minus_infinity() : ExtendedInt::plus_infinity();
    }
    Side operator()(bool b) const { return !b; }
    Side operator()(std::vector<std::string> v) const {
      v.push_back("(mutant)");
      return v;
    }
    Side operator()(std::vector<long> v) const {
      if (v.empty()) v.push_back(1);
      else ++v.front();
      return v;
    }
    Side operator()(const std::string& s) const { return s + " +1"; }
  } v;
  return std::visit(v, s);
}

enum class Verdict { pass, fail, skip };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skip";
  }
}

struct CheckReport {
  std::string theorem;
  std::string check;
  std::string instance;
  std::string digest;
  Side lhs, rhs;
  std::string lhs_source, rhs_source;
  Verdict verdict = Verdict::skip;
  double millis = 0;
  std::string note;
  /// Replayable instance text, kept on failures.
  std::string serialization;

  std::string id() const { return theorem + "/" + check; }
};

/// Builds reports for one instance, timing each from the previous emission.
class ReportBuilder {
 public:
  ReportBuilder(std::string theorem, std::string instance, std::string digest, std::string serialization,
                bool mutate_lhs)
      : theorem_(std::move(theorem)), instance_(std::move(instance)), digest_(std::move(digest)),
        serialization_(std::move(serialization)), mutate_(mutate_lhs), start_(Clock::now()) {}

  /// Verdict pass iff the sides are equal (after mutation, when enabled).
  void compare(const std::string& check, Side lhs, std::string lhs_source, Side rhs, std::string rhs_source,
               std::string note = {}) {
    CheckReport r = base(check);
    r.lhs = mutate_ ? mutate(lhs) : std::move(lhs);
    r.rhs = std::move(rhs);
    r.lhs_source = std::move(lhs_source);
    r.rhs_source = std::move(rhs_source);
    r.verdict = r.lhs == r.rhs ? Verdict::pass : Verdict::fail;
    if (r.verdict == Verdict::fail) r.serialization = serialization_;
    r.note = std::move(note);
    out_.push_back(std::move(r));
  }

  void skip(const std::string& check, std::string reason) {
    CheckReport r = base(check);
    r.lhs = std::string("-");
    r.rhs = std::string("-");
    r.note = std::move(reason);
    out_.push_back(std::move(r));
  }

  std::vector<CheckReport> take() { return std::move(out_); }

 private:
  using Clock = std::chrono::steady_clock;

  CheckReport base(const std::string& check) {
    CheckReport r;
    r.theorem = theorem_;
    r.check = check;
    r.instance = instance_;
    r.digest = digest_;
    auto now = Clock::now();
    r.millis = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return r;
  }

  std::string theorem_, instance_, digest_, serialization_;
  bool mutate_;
  Clock::time_point start_;
  std::vector<CheckReport> out_;
};

struct Summary {
  std::size_t passed = 0, failed = 0, skipped = 0;

  void add(const CheckReport& r) {
    if (r.verdict == Verdict::pass) ++passed;
    else if (r.verdict == Verdict::fail) ++failed;
    else ++skipped;
  }
  std::size_t total() const { return passed + failed + skipped; }
};

enum class SinkFormat { text, records };

/// Writes reports as aligned text lines or as one JSON record per line.
class ReportSink {
 public:
  ReportSink(std::ostream& os, SinkFormat format, bool quiet_passes = false)
      : os_(os), format_(format), quiet_(quiet_passes) {}

  /// Without timing every millis field is 0, so reruns are byte-identical.
  void set_timing(bool on) { timing_ = on; }

  void write(const CheckReport& r) {
    if (format_ == SinkFormat::records) {
      nlohmann::ordered_json j;
      j["theorem"] = r.theorem;
      j["check"] = r.check;
      j["instance"] = r.instance;
      j["digest"] = r.digest;
      j["lhs"] = render(r.lhs);
      j["rhs"] = render(r.rhs);
      j["lhs_source"] = r.lhs_source;
      j["rhs_source"] = r.rhs_source;
      j["verdict"] = to_string(r.verdict);
      j["millis"] = timing_ ? static_cast<double>(static_cast<long>(r.millis * 1000)) / 1000 : 0.0;
      if (!r.note.empty()) j["note"] = r.note;
      if (!r.serialization.empty()) j["instance_text"] = r.serialization;
      os_ << j.dump() << '\n';
      return;
    }
    if (quiet_ && r.verdict == Verdict::pass) return;
    std::string verdict = r.verdict == Verdict::pass ? "PASS" : r.verdict == Verdict::fail ? "FAIL" : "SKIP";
    os_ << verdict << ' ' << r.id() << " [" << r.instance << ' ' << r.digest << "] ";
    if (r.verdict == Verdict::skip) {
      os_ << r.note << '\n';
      return;
    }
    os_ << render(r.lhs) << " (" << r.lhs_source << ") vs " << render(r.rhs) << " (" << r.rhs_source << ")";
    char ms[32];
    std::snprintf(ms, sizeof ms, " %.1fms", timing_ ? r.millis : 0.0);
    os_ << ms;
    if (!r.note.empty()) os_ << " ; " << r.note;
    os_ << '\n';
    if (r.verdict == Verdict::fail && !r.serialization.empty()) os_ << r.serialization;
  }

  void write_summary(const std::string& suite, const Summary& s) {
    if (format_ == SinkFormat::records) {
      nlohmann::ordered_json j;
      j["suite"] = suite;
      j["passed"] = s.passed;
      j["failed"] = s.failed;
      j["skipped"] = s.skipped;
      os_ << j.dump() << '\n';
      return;
    }
    os_ << "suite " << suite << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
        << " skipped\n";
  }

 private:
  std::ostream& os_;
  SinkFormat format_;
  bool quiet_;
  bool timing_ = true;
};

}  // namespace tlc::harness

#endif  // TLC_HARNESS_REPORT_HPP
