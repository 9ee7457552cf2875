#ifndef TLC_SESSION_HPP
#define TLC_SESSION_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlc/harness/suite.hpp"

namespace tlc::session {

struct SourcePos {
  int line = 1, col = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Parse or evaluation error tied to a source position.
class SessionError : public std::runtime_error {
 public:
  SessionError(SourcePos pos, const std::string& msg)
      : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.col) + ": " + msg),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

/// c * v1^e1 * v2^e2 ..., coefficient num/den in lowest terms with den > 0.
struct TermExpr {
  long num = 1, den = 1;
  std::vector<std::pair<std::string, int>> factors;
  friend bool operator==(const TermExpr&, const TermExpr&) = default;
};
using PolyExpr = std::vector<TermExpr>;

struct RingDecl {
  std::string name;
  FieldSpec field;
  std::vector<std::string> vars;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

/// `ideal I = (...) [in X];` or `ideal I = maxideal X;`. X names a ring or a
/// module (meaning its ring); empty means the last declared ring.
struct IdealDecl {
  std::string name;
  bool maximal = false;
  std::string ring;
  std::vector<PolyExpr> gens;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct ModuleDecl {
  enum class Kind { free, quotient_by_name, quotient_inline, coker };
  std::string name;
  Kind kind = Kind::free;
  std::string ring;
  std::string ideal;
  std::vector<PolyExpr> gens;
  std::vector<int> twists;
  std::vector<std::vector<PolyExpr>> columns;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct TensorDecl {
  std::string name, left, right;
  friend bool operator==(const TensorDecl&, const TensorDecl&) = default;
};

struct ComputeCmd {
  std::string what;
  std::vector<std::string> args;
  friend bool operator==(const ComputeCmd&, const ComputeCmd&) = default;
};

struct CheckCmd {
  std::string id;
  std::vector<std::string> args;
  friend bool operator==(const CheckCmd&, const CheckCmd&) = default;
};

struct SuiteCmd {
  std::string id;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  friend bool operator==(const SuiteCmd&, const SuiteCmd&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, ModuleDecl, TensorDecl, ComputeCmd, CheckCmd, SuiteCmd>;

struct Located {
  SourcePos pos;
  Statement stmt;
};

inline bool is_declaration(const Statement& s) { return s.index() <= 3; }

inline std::string field_text(FieldSpec f) {
  return f.characteristic == 0 ? "QQ" : "FF " + std::to_string(f.characteristic);
}

inline std::string term_text(const TermExpr& t) {
  std::string s;
  bool unit = t.den == 1 && (t.num == 1 || t.num == -1);
  if (t.factors.empty() || !unit) {
    s = std::to_string(t.num);
    if (t.den != 1) s += "/" + std::to_string(t.den);
  } else if (t.num == -1) {
    s = "-";
  }
  for (std::size_t k = 0; k < t.factors.size(); ++k) {
    if (k || (!s.empty() && s != "-")) s += "*";
    s += t.factors[k].first;
    if (t.factors[k].second != 1) s += "^" + std::to_string(t.factors[k].second);
  }
  return s;
}

inline std::string poly_text(const PolyExpr& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::string t = term_text(p[k]);
    if (k == 0) s = t;
    else if (t[0] == '-') s += " - " + t.substr(1);
    else s += " + " + t;
  }
  return s;
}

inline std::string gens_text(const std::vector<PolyExpr>& gens) {
  std::string s = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + poly_text(gens[k]);
  return s + ")";
}

inline std::string join_words(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& w : v) s += " " + w;
  return s;
}

/// Canonical text of one statement, terminated by ';'.
inline std::string statement_text(const Statement& st) {
  struct {
    std::string operator()(const RingDecl& d) const {
      std::string s = "ring " + d.name + " = " + field_text(d.field) + "[";
      for (std::size_t k = 0; k < d.vars.size(); ++k) s += (k ? "," : "") + d.vars[k];
      return s + "];";
    }
    std::string operator()(const IdealDecl& d) const {
      if (d.maximal) return "ideal " + d.name + " = maxideal " + d.ring + ";";
      return "ideal " + d.name + " = " + gens_text(d.gens) + (d.ring.empty() ? "" : " in " + d.ring) + ";";
    }
    std::string operator()(const ModuleDecl& d) const {
      std::string s = "module " + d.name + " = ";
      switch (d.kind) {
        case ModuleDecl::Kind::free: return s + d.ring + ";";
        case ModuleDecl::Kind::quotient_by_name: return s + d.ring + "/" + d.ideal + ";";
        case ModuleDecl::Kind::quotient_inline: return s + d.ring + "/" + gens_text(d.gens) + ";";
        case ModuleDecl::Kind::coker: break;
      }
      s += "coker(" + d.ring + ", [";
      for (std::size_t k = 0; k < d.twists.size(); ++k) s += (k ? ", " : "") + std::to_string(d.twists[k]);
      s += "], [";
      for (std::size_t c = 0; c < d.columns.size(); ++c) {
        s += c ? ", [" : "[";
        for (std::size_t r = 0; r < d.columns[c].size(); ++r) s += (r ? ", " : "") + poly_text(d.columns[c][r]);
        s += "]";
      }
      return s + "]);";
    }
    std::string operator()(const TensorDecl& d) const {
      return "tensor " + d.name + " = " + d.left + " (*) " + d.right + ";";
    }
    std::string operator()(const ComputeCmd& c) const { return "compute " + c.what + join_words(c.args) + ";"; }
    std::string operator()(const CheckCmd& c) const { return "check " + c.id + join_words(c.args) + ";"; }
    std::string operator()(const SuiteCmd& c) const {
      std::string s = "suite " + c.id;
      if (c.seed) s += " seed=" + std::to_string(*c.seed);
      if (c.count) s += " count=" + std::to_string(*c.count);
      return s + ";";
    }
  } v;
  return std::visit(v, st);
}

struct Session {
  std::vector<Located> statements;

  std::size_t declaration_count() const {
    std::size_t n = 0;
    for (const auto& s : statements) n += is_declaration(s.stmt) ? 1 : 0;
    return n;
  }
  std::size_t command_count() const { return statements.size() - declaration_count(); }

  /// One statement per line; parses back to the same statements.
  std::string serialize() const {
    std::string s;
    for (const auto& st : statements) s += statement_text(st.stmt) + "\n";
    return s;
  }

  bool same_statements(const Session& o) const {
    if (statements.size() != o.statements.size()) return false;
    for (std::size_t k = 0; k < statements.size(); ++k)
      if (!(statements[k].stmt == o.statements[k].stmt)) return false;
    return true;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : t_(text) {}

  Session parse() {
    Session s;
    for (;;) {
      skip();
      if (at_end()) return s;
      SourcePos pos = here();
      s.statements.push_back({pos, statement()});
      declare_pending();
    }
  }

 private:
  Statement statement() {
    SourcePos pos = here();
    std::string kw = ident("a statement keyword");
    Statement st;
    if (kw == "ring") st = ring_decl();
    else if (kw == "ideal") st = ideal_decl();
    else if (kw == "module") st = module_decl();
    else if (kw == "tensor") st = tensor_decl();
    else if (kw == "compute") st = compute_cmd();
    else if (kw == "check") st = check_cmd();
    else if (kw == "suite") st = suite_cmd();
    else throw SessionError(pos, "unknown statement '" + kw + "'");
    expect(';');
    return st;
  }

  RingDecl ring_decl() {
    RingDecl d;
    d.name = new_name(kRing, "a ring name");
    expect('=');
    d.field = field();
    expect('[');
    skip();
    if (peek() != ']') {
      d.vars.push_back(ident("a variable name"));
      while (accept(',')) d.vars.push_back(ident("a variable name"));
    }
    expect(']');
    return d;
  }

  FieldSpec field() {
    SourcePos pos = here();
    std::string f = ident("QQ or FF");
    if (f == "QQ") return {};
    if (f != "FF") throw SessionError(pos, "unknown field '" + f + "'");
    skip();
    SourcePos npos = here();
    long p = number();
    if (p < 2 || !is_prime(static_cast<std::uint32_t>(p)) || p > 2147483647L)
      throw SessionError(npos, "field characteristic must be a prime below 2^31");
    return {static_cast<std::uint32_t>(p)};
  }

  IdealDecl ideal_decl() {
    IdealDecl d;
    d.name = new_name(kIdeal, "an ideal name");
    expect('=');
    skip();
    if (peek() == '(') {
      d.gens = generator_list();
      if (accept_word("in")) d.ring = use(kRing | kModule, "a ring or module name");
    } else {
      SourcePos pos = here();
      std::string kw = ident("'(' or maxideal");
      if (kw != "maxideal") throw SessionError(pos, "expected '(' or maxideal");
      d.maximal = true;
      d.ring = use(kRing, "a ring name");
    }
    return d;
  }

  ModuleDecl module_decl() {
    ModuleDecl d;
    d.name = new_name(kModule, "a module name");
    expect('=');
    skip();
    SourcePos pos = here();
    std::string head = ident("a ring name or coker");
    skip();
    if (head == "coker" && peek() == '(') {
      d.kind = ModuleDecl::Kind::coker;
      expect('(');
      d.ring = use(kRing, "a ring name");
      expect(',');
      expect('[');
      skip();
      if (peek() != ']') {
        d.twists.push_back(signed_number());
        while (accept(',')) d.twists.push_back(signed_number());
      }
      expect(']');
      expect(',');
      expect('[');
      skip();
      if (peek() != ']') {
        d.columns.push_back(column());
        while (accept(',')) d.columns.push_back(column());
      }
      expect(']');
      expect(')');
      for (const auto& c : d.columns)
        if (c.size() != d.twists.size())
          throw SessionError(pos, "coker column has " + std::to_string(c.size()) + " entries for " +
                                      std::to_string(d.twists.size()) + " generators");
      return d;
    }
    check_declared(head, kRing, pos, "ring");
    d.ring = head;
    if (!accept('/')) return d;
    skip();
    if (peek() == '(') {
      d.kind = ModuleDecl::Kind::quotient_inline;
      d.gens = generator_list();
    } else {
      d.kind = ModuleDecl::Kind::quotient_by_name;
      d.ideal = use(kIdeal, "an ideal name");
    }
    return d;
  }

  std::vector<PolyExpr> column() {
    expect('[');
    std::vector<PolyExpr> c;
    skip();
    if (peek() != ']') {
      c.push_back(poly());
      while (accept(',')) c.push_back(poly());
    }
    expect(']');
    return c;
  }

  TensorDecl tensor_decl() {
    TensorDecl d;
    d.name = new_name(kModule, "a module name");
    expect('=');
    d.left = use(kModule, "a module name");
    skip();
    SourcePos pos = here();
    if (t_.substr(i_, 3) != "(*)") throw SessionError(pos, "expected '(*)'");
    advance(3);
    d.right = use(kModule, "a module name");
    return d;
  }

  ComputeCmd compute_cmd() {
    ComputeCmd c;
    c.what = ident("an invariant name");
    while (!peek_is(';')) c.args.push_back(use(kIdeal | kModule, "a module or ideal name"));
    return c;
  }

  CheckCmd check_cmd() {
    CheckCmd c;
    c.id = word("a check id");
    while (!peek_is(';')) c.args.push_back(use(kIdeal | kModule, "a module or ideal name"));
    return c;
  }

  SuiteCmd suite_cmd() {
    SuiteCmd c;
    c.id = word("a suite id");
    while (!peek_is(';')) {
      SourcePos pos = here();
      std::string key = ident("seed= or count=");
      expect('=');
      long v = number();
      if (key == "seed") c.seed = static_cast<std::uint64_t>(v);
      else if (key == "count") c.count = static_cast<std::size_t>(v);
      else throw SessionError(pos, "unknown suite option '" + key + "'");
    }
    return c;
  }

  std::vector<PolyExpr> generator_list() {
    expect('(');
    std::vector<PolyExpr> g;
    skip();
    if (peek() != ')') {
      g.push_back(poly());
      while (accept(',')) g.push_back(poly());
    }
    expect(')');
    return g;
  }

  PolyExpr poly() {
    PolyExpr p;
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    p.push_back(term(neg));
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') return p;
      neg = get() == '-';
      p.push_back(term(neg));
    }
  }

  TermExpr term(bool negative) {
    TermExpr t;
    t.num = negative ? -1 : 1;
    do {
      skip();
      SourcePos pos = here();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        long n = number(), d = 1;
        if (accept('/')) {
          d = number();
          if (d == 0) throw SessionError(pos, "zero denominator");
        }
        t.num *= n;
        t.den *= d;
        long g = std::gcd(t.num, t.den);
        if (g > 1) {
          t.num /= g;
          t.den /= g;
        }
      } else {
        std::string v = ident("a variable or coefficient");
        int e = 1;
        if (accept('^')) e = static_cast<int>(number());
        t.factors.emplace_back(v, e);
      }
    } while (accept('*'));
    if (t.num == 0) t.factors.clear();
    return t;
  }

  // Symbol table: names are declared once, before use. A declaration takes
  // effect after its statement, so it cannot refer to itself.
  enum Kind : unsigned { kRing = 1, kIdeal = 2, kModule = 4 };

  static const char* kind_name(unsigned k) {
    return k == kRing ? "ring" : k == kIdeal ? "ideal" : "module";
  }

  std::string new_name(Kind k, const char* what) {
    skip();
    SourcePos pos = here();
    std::string n = ident(what);
    auto it = symbols_.find(n);
    if (it != symbols_.end())
      throw SessionError(pos, "'" + n + "' is already declared as a " + kind_name(it->second.first) + " at line " +
                                  std::to_string(it->second.second.line));
    pending_ = {n, {k, pos}};
    return n;
  }
  void declare_pending() {
    if (!pending_.first.empty()) symbols_.insert(pending_);
    pending_ = {};
  }
  void check_declared(const std::string& n, unsigned kinds, SourcePos pos, const char* what) {
    auto it = symbols_.find(n);
    if (it == symbols_.end()) throw SessionError(pos, "undeclared name '" + n + "'");
    if (!(it->second.first & kinds))
      throw SessionError(pos, "'" + n + "' is a " + kind_name(it->second.first) + ", expected " + what);
  }
  std::string use(unsigned kinds, const char* what) {
    skip();
    SourcePos pos = here();
    std::string n = ident(what);
    check_declared(n, kinds, pos, what);
    return n;
  }

  // Lexical layer.
  bool at_end() const { return i_ >= t_.size(); }
  char peek() const { return at_end() ? '\0' : t_[i_]; }
  char get() {
    char c = t_[i_];
    advance(1);
    return c;
  }
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < t_.size(); ++k, ++i_) {
      if (t_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }
  SourcePos here() const { return {line_, col_}; }
  void skip() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) advance(1);
      else if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance(1);
      } else {
        return;
      }
    }
  }
  bool peek_is(char c) {
    skip();
    if (at_end()) throw SessionError(here(), "unexpected end of input, expected ';'");
    return peek() == c;
  }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    advance(1);
    return true;
  }
  void expect(char c) {
    skip();
    if (peek() != c)
      throw SessionError(here(), std::string("expected '") + c + "'" +
                                     (at_end() ? " before end of input" : std::string(", found '") + peek() + "'"));
    advance(1);
  }
  bool accept_word(const std::string& w) {
    skip();
    std::size_t j = i_;
    while (j < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[j])) || t_[j] == '_')) ++j;
    if (t_.substr(i_, j - i_) != w) return false;
    advance(j - i_);
    return true;
  }
  std::string ident(const char* what) {
    skip();
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw SessionError(here(), std::string("expected ") + what);
    std::string s;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) s += get();
    return s;
  }
  std::string word(const char* what) {
    skip();
    std::string s;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' ||
                         peek() == '.'))
      s += get();
    if (s.empty()) throw SessionError(here(), std::string("expected ") + what);
    return s;
  }
  long number() {
    skip();
    SourcePos pos = here();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SessionError(pos, "expected a number");
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    if (s.size() > 18) throw SessionError(pos, "number too large");
    return std::stol(s);
  }
  int signed_number() {
    skip();
    bool neg = accept('-');
    long v = number();
    return static_cast<int>(neg ? -v : v);
  }

  std::string_view t_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  std::map<std::string, std::pair<unsigned, SourcePos>> symbols_;
  std::pair<std::string, std::pair<unsigned, SourcePos>> pending_;
};

}  // namespace detail

inline Session parse_session(std::string_view text) { return detail::Parser(text).parse(); }

struct ExecOptions {
  harness::SinkFormat format = harness::SinkFormat::text;
  std::uint64_t seed = 1;
  /// Field of suites and of sessions that declare no ring.
  FieldSpec field{};
  bool quiet_passes = false;
  bool mutate = false;
  bool timing = true;
};

struct ExecResult {
  std::size_t failed_checks = 0;
};

namespace detail {

template <FieldScalar F>
class Executor {
 public:
  Executor(const ExecOptions& opt, std::ostream& out)
      : opt_(opt), out_(out), sink_(out, opt.format, opt.quiet_passes) {
    sink_.set_timing(opt.timing);
  }

  ExecResult run(const Session& s) {
    for (const auto& st : s.statements) {
      pos_ = st.pos;
      try {
        std::visit([this](const auto& x) { exec(x); }, st.stmt);
      } catch (const SessionError&) {
        throw;
      } catch (const std::exception& e) {
        throw SessionError(pos_, e.what());
      }
    }
    return result_;
  }

 private:
  struct IdealVal {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> gens;
    std::optional<MonomialIdeal> mono;
  };
  struct ModuleVal {
    RingPtr<F> ring;
    ModulePresentation<F> pres;
    /// Set for R/J with J monomial.
    std::optional<MonomialIdeal> cyclic;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw SessionError(pos_, msg); }

  void claim(const std::string& name) {
    if (rings_.count(name) || ideals_.count(name) || modules_.count(name)) fail("'" + name + "' is already defined");
  }

  RingPtr<F> ring_of(const std::string& name) const {
    if (auto it = rings_.find(name); it != rings_.end()) return it->second;
    if (auto it = modules_.find(name); it != modules_.end()) return it->second.ring;
    fail("unknown ring '" + name + "'");
  }
  const ModuleVal& module(const std::string& name) const {
    auto it = modules_.find(name);
    if (it == modules_.end()) fail("unknown module '" + name + "'");
    return it->second;
  }
  const IdealVal& ideal(const std::string& name) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) fail("unknown ideal '" + name + "'");
    return it->second;
  }

  Polynomial<F> build(const PolyExpr& p, const RingPtr<F>& r) const {
    Polynomial<F> out(r);
    for (const auto& t : p) {
      F c = r->scalar(t.num);
      F d = r->scalar(t.den);
      if (d.is_zero()) fail("denominator vanishes in the field");
      c = c / d;
      Monomial m;
      for (const auto& [v, e] : t.factors) {
        auto idx = r->index_of(v);
        if (!idx) fail("unknown variable '" + v + "' in " + r->to_string());
        m.set(*idx, m[*idx] + e);
      }
      out = out + Polynomial<F>::monomial(r, m, c);
    }
    return out;
  }

  IdealVal build_ideal(const std::vector<PolyExpr>& gens, const RingPtr<F>& r) const {
    IdealVal v{r, {}, std::nullopt};
    std::vector<Monomial> ms;
    bool mono = true, unit = false;
    for (const auto& g : gens) {
      auto p = build(g, r);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) fail("inhomogeneous generator " + p.to_string());
      v.gens.push_back(p);
      if (p.terms().size() != 1) mono = false;
      else if (p.terms().front().first.is_one()) unit = true;
      else ms.push_back(p.terms().front().first);
    }
    if (mono) v.mono = unit ? MonomialIdeal::unit(r->nvars()) : MonomialIdeal(r->nvars(), ms);
    return v;
  }

  void exec(const RingDecl& d) {
    claim(d.name);
    if (field_ && !(*field_ == d.field)) fail("all rings of a session must share one field");
    field_ = d.field;
    rings_[d.name] = make_ring<F>(d.field, d.vars);
    last_ring_ = d.name;
  }

  void exec(const IdealDecl& d) {
    claim(d.name);
    std::string rn = d.ring.empty() ? last_ring_ : d.ring;
    if (rn.empty()) fail("no ring declared");
    auto r = ring_of(rn);
    if (d.maximal) {
      IdealVal v{r, {}, MonomialIdeal::maximal(r->nvars())};
      for (std::size_t k = 0; k < r->nvars(); ++k) v.gens.push_back(Polynomial<F>::variable(r, k));
      ideals_[d.name] = v;
    } else {
      ideals_[d.name] = build_ideal(d.gens, r);
    }
  }

  void exec(const ModuleDecl& d) {
    claim(d.name);
    auto r = ring_of(d.ring);
    switch (d.kind) {
      case ModuleDecl::Kind::free:
        modules_[d.name] = {r, ModulePresentation<F>::free(r, {0}), MonomialIdeal::zero(r->nvars())};
        return;
      case ModuleDecl::Kind::quotient_by_name:
      case ModuleDecl::Kind::quotient_inline: {
        IdealVal iv = d.kind == ModuleDecl::Kind::quotient_inline ? build_ideal(d.gens, r) : ideal(d.ideal);
        if (!same_ring(iv.ring, r)) fail("ideal '" + d.ideal + "' lives over another ring");
        modules_[d.name] = {r, ModulePresentation<F>::cyclic(r, iv.gens), iv.mono};
        return;
      }
      case ModuleDecl::Kind::coker: {
        std::vector<FreeModuleElement<F>> cols;
        for (const auto& c : d.columns) {
          std::vector<Polynomial<F>> entries;
          for (const auto& e : c) entries.push_back(build(e, r));
          cols.push_back(FreeModuleElement<F>::from_polynomials(entries));
        }
        modules_[d.name] = {r, ModulePresentation<F>(Matrix<F>::from_columns(FreeModule<F>(r, d.twists), cols)),
                            std::nullopt};
        return;
      }
    }
  }

  void exec(const TensorDecl& d) {
    claim(d.name);
    const auto& l = module(d.left);
    const auto& n = module(d.right);
    auto join = join_rings(l.ring, n.ring);
    ModuleVal t{join.joined, tensor_modules(l.pres, n.pres, join).module, std::nullopt};
    if (l.cyclic && n.cyclic) t.cyclic = join.embed_left(*l.cyclic) + join.embed_right(*n.cyclic);
    modules_[d.name] = t;
  }

  void exec(const ComputeCmd& c) {
    auto need = [&](std::size_t k) {
      if (c.args.size() != k)
        fail("compute " + c.what + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    };
    std::string head = "compute " + c.what;
    if (c.what == "grade" || c.what == "cd") {
      need(2);
      const auto& iv = ideal(c.args[0]);
      const auto& m = module(c.args[1]);
      if (!same_ring(iv.ring, m.ring)) fail("ideal and module over different rings");
      ExtendedInt v;
      if (iv.mono && m.cyclic) {
        auto gc = grade_cd_monomial<F>(*iv.mono, *m.cyclic, m.ring->field());
        v = c.what == "grade" ? gc.first : gc.second;
      } else if (c.what == "grade") {
        v = grade_via_ext(iv.gens, m.pres);
      } else {
        fail("cd needs a monomial ideal and a cyclic monomial module");
      }
      out_ << c.what << ' ' << c.args[0] << ' ' << c.args[1] << " = " << v.to_string() << '\n';
      return;
    }
    need(1);
    const auto& m = module(c.args[0]);
    std::string value;
    if (c.what == "depth") value = depth_m(m.pres).to_string();
    else if (c.what == "dim") value = krull_dim(m.pres).to_string();
    else if (c.what == "f") value = finiteness_dim_m(m.pres).to_string();
    else if (c.what == "class") value = cm_class_m(m.pres).label();
    else if (c.what == "pd") {
      value = minimal_free_resolution(m.pres).projective_dimension().to_string();
    } else if (c.what == "hilbert") {
      auto hs = hilbert_series(m.pres);
      value = hs.is_zero() ? "0" : hs.to_string();
    } else if (c.what == "betti") {
      value = minimal_free_resolution(m.pres).betti_string();
    } else if (c.what == "ass") {
      if (!m.cyclic) fail("ass needs a cyclic monomial module");
      value = "{";
      auto ps = harness::prime_strings(associated_primes(*m.cyclic), m.ring->names());
      for (std::size_t k = 0; k < ps.size(); ++k) value += (k ? ", " : "") + ps[k];
      value += "}";
    } else {
      fail("unknown invariant '" + c.what + "'");
    }
    out_ << c.what << ' ' << c.args[0] << " = " << value << '\n';
  }

  void emit(std::vector<harness::CheckReport> reports) {
    for (const auto& r : reports) {
      sink_.write(r);
      if (r.verdict == harness::Verdict::fail) ++result_.failed_checks;
    }
  }

  MonomialIdeal monomial_ideal_arg(const std::string& name, const RingPtr<F>& r) const {
    const auto& iv = ideal(name);
    if (!same_ring(iv.ring, r)) fail("ideal '" + name + "' lives over another ring");
    if (!iv.mono) fail("ideal '" + name + "' is not monomial");
    return *iv.mono;
  }

  void exec(const CheckCmd& c) {
    if (c.id == "example-3.7") {
      if (!c.args.empty()) fail("check example-3.7 takes no arguments");
      emit(harness::check_example<F>(opt_.mutate, field_.value_or(opt_.field)));
      return;
    }
    if (c.id == "oracle") {
      if (c.args.size() != 1) fail("check oracle takes one module");
      const auto& m = module(c.args[0]);
      if (!m.cyclic) fail("check oracle needs a cyclic monomial module");
      emit(harness::check_oracle_agreement<F>(m.ring, *m.cyclic, c.args[0], opt_.mutate));
      return;
    }
    if (c.args.size() != 2 && c.args.size() != 4) fail("check " + c.id + " takes L N [I J]");
    const auto& l = module(c.args[0]);
    const auto& n = module(c.args[1]);
    harness::Instance<F> inst;
    inst.label = c.args[0] + "," + c.args[1];
    inst.a = l.ring;
    inst.b = n.ring;
    inst.l = l.pres;
    inst.n = n.pres;
    inst.left_ideal = l.cyclic;
    inst.right_ideal = n.cyclic;
    inst.i = c.args.size() == 4 ? monomial_ideal_arg(c.args[2], l.ring) : MonomialIdeal::maximal(l.ring->nvars());
    inst.j = c.args.size() == 4 ? monomial_ideal_arg(c.args[3], n.ring) : MonomialIdeal::maximal(n.ring->nvars());
    harness::Workspace<F> ws(std::move(inst));
    const bool mu = opt_.mutate;
    if (c.id == "thm2.6") emit(harness::check_grade_cd_additivity(ws, mu));
    else if (c.id == "prop2.5") emit(harness::check_corner_isomorphisms(ws, mu));
    else if (c.id == "kunneth") emit(harness::check_kunneth(ws, mu));
    else if (c.id == "cor3.3") emit(harness::check_finiteness_formula(ws, mu));
    else if (c.id == "prop3.4") emit(harness::check_cm_equivalences(ws, mu));
    else if (c.id == "thm4.6") emit(harness::check_seqCM_equivalence(ws, mu));
    else if (c.id == "fact4.4") emit(harness::check_associated_primes(ws, mu));
    else fail("unknown check '" + c.id + "'");
  }

  void exec(const SuiteCmd& c) {
    harness::SuiteParams p;
    p.seed = c.seed.value_or(opt_.seed);
    p.count = c.count.value_or(0);
    p.field = field_.value_or(opt_.field);
    p.mutate = opt_.mutate;
    harness::suite_info(c.id);
    auto s = harness::run_suite_in<F>(c.id, p, sink_);
    result_.failed_checks += s.failed;
  }

  const ExecOptions& opt_;
  std::ostream& out_;
  harness::ReportSink sink_;
  SourcePos pos_;
  ExecResult result_;
  std::optional<FieldSpec> field_;
  std::string last_ring_;
  std::map<std::string, RingPtr<F>> rings_;
  std::map<std::string, IdealVal> ideals_;
  std::map<std::string, ModuleVal> modules_;
};

}  // namespace detail

/// Runs every statement in order. The coefficient field is that of the
/// declared rings, or `opt.field` when there are none.
inline ExecResult execute(const Session& s, const ExecOptions& opt, std::ostream& out) {
  FieldSpec f = opt.field;
  for (const auto& st : s.statements)
    if (const auto* r = std::get_if<RingDecl>(&st.stmt)) {
      f = r->field;
      break;
    }
  if (f.characteristic == 0) return detail::Executor<Rational>(opt, out).run(s);
  return detail::Executor<PrimeField>(opt, out).run(s);
}

/// "QQ" or "FFp:<p>".
inline FieldSpec parse_field_flag(const std::string& s) {
  if (s == "QQ") return {};
  if (s.rfind("FFp:", 0) == 0) {
    std::size_t used = 0;
    long p = -1;
    try {
      p = std::stol(s.substr(4), &used);
    } catch (const std::exception&) {
    }
    if (p >= 2 && used == s.size() - 4 && p < 2147483647L && is_prime(static_cast<std::uint32_t>(p)))
      return {static_cast<std::uint32_t>(p)};
  }
  throw std::invalid_argument("field must be QQ or FFp:<prime>, got '" + s + "'");
}

}  // namespace tlc::session

#endif  // TLC_SESSION_HPP
