#include "homkernel/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

#include "homkernel/error.hpp"
#include "homkernel/polynomial.hpp"

namespace homkernel {

std::string to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Ring: return "ring";
    case ValueKind::Ideal: return "ideal";
    case ValueKind::Module: return "module";
    case ValueKind::Resolution: return "resolution";
    case ValueKind::Integer: return "integer";
    case ValueKind::Length: return "length";
    case ValueKind::IntList: return "integer list";
    case ValueKind::LengthList: return "length list";
    case ValueKind::Bool: return "boolean";
  }
  return "?";
}

namespace {

struct Signature {
  std::string args;  ///< M module, I ideal, R ring, X resolution, i integer, p polynomial, P polynomial list
  ValueKind result;
};

const std::map<std::string, std::vector<Signature>>& builtins() {
  using K = ValueKind;
  static const std::map<std::string, std::vector<Signature>> table = {
      {"tor", {{"iMM", K::Module}}},
      {"ext", {{"iMM", K::Module}}},
      {"hom", {{"MM", K::Module}}},
      {"tensor", {{"MM", K::Module}}},
      {"syzygy", {{"Mi", K::Module}}},
      {"transpose", {{"M", K::Module}}},
      {"socle", {{"M", K::Module}}},
      {"colon", {{"Mp", K::Module}, {"II", K::Ideal}}},
      {"sum", {{"MM", K::Module}, {"II", K::Ideal}}},
      {"twist", {{"Mi", K::Module}}},
      {"cyclic", {{"I", K::Module}}},
      {"residue", {{"R", K::Module}}},
      {"quo", {{"MI", K::Module}}},
      {"koszulh", {{"Mi", K::Module}}},
      {"maximal", {{"R", K::Ideal}}},
      {"ann", {{"M", K::Ideal}}},
      {"product", {{"II", K::Ideal}}},
      {"intersect", {{"II", K::Ideal}}},
      {"power", {{"Ii", K::Ideal}}},
      {"resolve", {{"Mi", K::Resolution}, {"M", K::Resolution}}},
      {"betti", {{"X", K::IntList}}},
      {"length", {{"M", K::Length}}},
      {"kdepth", {{"M", K::Integer}}},
      {"beta0", {{"M", K::Integer}}},
      {"beta1", {{"M", K::Integer}}},
      {"pd", {{"Mi", K::Length}, {"M", K::Length}}},
      {"hilbert", {{"Mi", K::IntList}}},
      {"torlengths", {{"MMi", K::LengthList}}},
      {"zero", {{"M", K::Bool}}},
      {"nonzero", {{"M", K::Bool}}},
      {"free", {{"M", K::Bool}}},
      {"equal", {{"II", K::Bool}}},
      {"burch", {{"I", K::Bool}}},
      {"depthzero", {{"M", K::Bool}}},
      {"abformula", {{"Mi", K::Bool}, {"M", K::Bool}}},
      {"member", {{"Ip", K::Bool}}},
  };
  return table;
}

bool accepts(char slot, ValueKind k) {
  switch (slot) {
    case 'M': return k == ValueKind::Module || k == ValueKind::Ring;
    case 'I': return k == ValueKind::Ideal;
    case 'R': return k == ValueKind::Ring;
    case 'X': return k == ValueKind::Resolution;
    case 'i': return k == ValueKind::Integer;
    default: return false;
  }
}

struct Symbol {
  ValueKind kind;
  std::string ring;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Script run() {
    Script script;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) break;
      script.statements.push_back(statement());
    }
    return script;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::map<std::string, Symbol> symbols_;
  std::map<std::string, PolyRingPtr> rings_;

  // ---- positions and errors

  Span span_at(std::size_t offset) const {
    Span s;
    s.offset = s.end = offset;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  [[noreturn]] void fail(ErrorKind kind, std::size_t offset, const std::string& msg) const {
    Span s = span_at(offset);
    throw Error(kind, std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + msg);
  }

  std::string found() const {
    if (pos_ >= src_.size()) return "end of input";
    if (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_') {
      std::size_t e = pos_;
      while (e < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[e])) || src_[e] == '_')) ++e;
      return "'" + std::string(src_.substr(pos_, e - pos_)) + "'";
    }
    return "'" + std::string(1, src_[pos_]) + "'";
  }

  [[noreturn]] void expected(const std::string& what) {
    skip_space();
    fail(ErrorKind::ParseError, pos_, "expected " + what + ", found " + found());
  }

  // ---- lexing

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool peek_two(const char* two) {
    skip_space();
    return pos_ + 1 < src_.size() && src_[pos_] == two[0] && src_[pos_ + 1] == two[1];
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) expected(std::string("'") + c + "'");
  }

  std::optional<std::string> peek_ident() {
    skip_space();
    if (pos_ >= src_.size()) return std::nullopt;
    char c = src_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
    std::size_t e = pos_;
    while (e < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[e])) || src_[e] == '_')) ++e;
    return std::string(src_.substr(pos_, e - pos_));
  }

  std::string ident(const std::string& what = "identifier") {
    auto id = peek_ident();
    if (!id) expected(what);
    pos_ += id->size();
    return *id;
  }

  bool accept_keyword(const std::string& kw) {
    auto id = peek_ident();
    if (!id || *id != kw) return false;
    pos_ += id->size();
    return true;
  }

  void expect_keyword(const std::string& kw) {
    if (!accept_keyword(kw)) expected("'" + kw + "'");
  }

  bool peek_int() {
    skip_space();
    std::size_t p = pos_;
    if (p < src_.size() && src_[p] == '-') ++p;
    return p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]));
  }

  std::int64_t integer() {
    if (!peek_int()) expected("integer");
    std::size_t start = pos_;
    bool neg = src_[pos_] == '-';
    if (neg) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ - digits > 12) fail(ErrorKind::ParseError, start, "integer too large");
    std::int64_t v = std::stoll(std::string(src_.substr(digits, pos_ - digits)));
    return neg ? -v : v;
  }

  std::vector<std::int64_t> int_list() {
    expect('(');
    std::vector<std::int64_t> out;
    if (accept(')')) return out;
    do out.push_back(integer());
    while (accept(','));
    expect(')');
    return out;
  }

  PolyText raw_poly() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::string_view(",)];#\n").find(src_[pos_]) == std::string_view::npos) ++pos_;
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(src_[end - 1]))) --end;
    if (end == start) expected("polynomial");
    PolyText p{std::string(src_.substr(start, end - start)), span_at(start)};
    p.span.end = end;
    return p;
  }

  /// '(' poly, ... ')' with the empty list allowed.
  std::vector<PolyText> poly_list() {
    expect('(');
    std::vector<PolyText> out;
    if (accept(')')) return out;
    do out.push_back(raw_poly());
    while (accept(','));
    expect(')');
    return out;
  }

  void check_polys(const std::vector<PolyText>& polys, const std::string& ring) {
    auto it = rings_.find(ring);
    if (it == rings_.end()) return;
    for (const auto& p : polys) {
      try {
        parse_polynomial(it->second, p.text);
      } catch (const Error& e) {
        std::string msg = e.what();
        std::size_t at = msg.find('@');
        std::size_t colon = msg.find(':', at == std::string::npos ? 0 : at);
        std::size_t off = 0;
        if (at != std::string::npos && colon != std::string::npos) {
          off = std::stoul(msg.substr(at + 1, colon - at - 1));
          msg = msg.substr(colon + 2);
        }
        fail(ErrorKind::ParseError, p.span.offset + off, "in polynomial '" + p.text + "': " + msg);
      }
    }
  }

  // ---- symbols

  const Symbol& lookup(const std::string& id, std::size_t offset) {
    auto it = symbols_.find(id);
    if (it == symbols_.end()) fail(ErrorKind::UndeclaredIdentifier, offset, "'" + id + "' is not declared");
    return it->second;
  }

  void declare(const std::string& id, Symbol sym, std::size_t offset) {
    if (builtins().count(id) || id == "inf" || id == "true" || id == "false")
      fail(ErrorKind::ParseError, offset, "'" + id + "' is a reserved name");
    symbols_[id] = std::move(sym);
  }

  std::string require_ring(const std::string& id, std::size_t offset) {
    const Symbol& s = lookup(id, offset);
    if (s.kind != ValueKind::Ring) fail(ErrorKind::TypeMismatch, offset, "'" + id + "' is a " + to_string(s.kind) + ", not a ring");
    return id;
  }

  // ---- expressions

  Expr expression() {
    skip_space();
    const std::size_t start = pos_;
    Expr e;
    e.span = span_at(start);
    if (peek_int()) {
      e.op = "int";
      e.number = integer();
      e.kind = ValueKind::Integer;
    } else if (peek('(')) {
      e.op = "list";
      expect('(');
      if (!accept(')')) {
        do {
          if (accept_keyword("inf")) e.list.push_back(std::nullopt);
          else e.list.push_back(integer());
        } while (accept(','));
        expect(')');
      }
      bool any_inf = std::any_of(e.list.begin(), e.list.end(), [](const auto& v) { return !v; });
      e.kind = any_inf ? ValueKind::LengthList : ValueKind::IntList;
    } else {
      auto id = peek_ident();
      if (!id) expected("expression");
      pos_ += id->size();
      if (*id == "inf") {
        e.op = "inf";
        e.kind = ValueKind::Length;
      } else if (*id == "true" || *id == "false") {
        e.op = "bool";
        e.number = *id == "true";
        e.kind = ValueKind::Bool;
      } else if (peek('(') && builtins().count(*id)) {
        call(e, *id, start);
      } else {
        const Symbol& s = lookup(*id, start);
        e.op = "var";
        e.name = *id;
        e.kind = s.kind;
        e.ring = s.ring;
      }
    }
    e.span.end = pos_;
    e.text = std::string(src_.substr(start, pos_ - start));
    return e;
  }

  void call(Expr& e, const std::string& name, std::size_t start) {
    e.op = name;
    std::vector<Signature> alive = builtins().at(name);
    expect('(');
    std::string ring;
    for (std::size_t slot = 0;; ++slot) {
      std::erase_if(alive, [&](const Signature& s) { return s.args.size() <= slot; });
      if (alive.empty()) expected("')'");
      if (slot > 0) expect(',');
      char want = alive.front().args[slot];
      bool same = std::all_of(alive.begin(), alive.end(), [&](const Signature& s) { return s.args[slot] == want; });
      skip_space();
      const std::size_t arg_at = pos_;
      if (same && want == 'p') {
        e.polys.push_back(raw_poly());
      } else if (same && want == 'P') {
        auto ps = poly_list();
        e.polys.insert(e.polys.end(), ps.begin(), ps.end());
      } else {
        Expr a = expression();
        std::erase_if(alive, [&](const Signature& s) { return !accepts(s.args[slot], a.kind); });
        if (alive.empty())
          fail(ErrorKind::TypeMismatch, arg_at,
               "argument " + std::to_string(slot + 1) + " of " + name + " cannot be a " + to_string(a.kind));
        if (!a.ring.empty()) {
          if (!ring.empty() && ring != a.ring)
            fail(ErrorKind::TypeMismatch, arg_at, "operands over different rings '" + ring + "' and '" + a.ring + "'");
          ring = a.ring;
        }
        e.args.push_back(std::move(a));
      }
      bool complete = std::any_of(alive.begin(), alive.end(), [&](const Signature& s) { return s.args.size() == slot + 1; });
      if (complete && peek(')')) {
        std::erase_if(alive, [&](const Signature& s) { return s.args.size() != slot + 1; });
        break;
      }
    }
    expect(')');
    if (e.polys.size() && !ring.empty()) check_polys(e.polys, ring);
    e.kind = alive.front().result;
    bool plain = e.kind == ValueKind::Integer || e.kind == ValueKind::Length || e.kind == ValueKind::IntList ||
                 e.kind == ValueKind::LengthList || e.kind == ValueKind::Bool;
    e.ring = plain ? "" : ring;
    (void)start;
  }

  Expr typed_expression(std::initializer_list<ValueKind> kinds, const std::string& what) {
    skip_space();
    std::size_t at = pos_;
    Expr e = expression();
    bool ok = std::find(kinds.begin(), kinds.end(), e.kind) != kinds.end();
    if (!ok) fail(ErrorKind::TypeMismatch, at, "expected " + what + ", got a " + to_string(e.kind));
    if (e.kind == ValueKind::Ring && e.op == "var") e.ring = e.name;
    return e;
  }

  Expr module_expression() { return typed_expression({ValueKind::Module, ValueKind::Ring}, "a module"); }
  Expr ideal_expression() { return typed_expression({ValueKind::Ideal}, "an ideal"); }

  Family family(const std::string& ring) {
    expect_keyword("family");
    Family f;
    if (accept_keyword("cyclic")) {
      expect_keyword("deg");
      f.degree = integer();
      if (accept_keyword("gens")) f.gens = integer();
      if (f.degree < 1 || f.gens < 1) fail(ErrorKind::ParseError, pos_, "family bounds must be positive");
    } else if (accept_keyword("explicit")) {
      f.cyclic = false;
      expect('(');
      if (!accept(')')) {
        do {
          skip_space();
          std::size_t at = pos_;
          Expr m = module_expression();
          if (!ring.empty() && m.ring != ring) fail(ErrorKind::TypeMismatch, at, "family member over another ring");
          f.members.push_back(std::move(m));
        } while (accept(','));
        expect(')');
      }
    } else {
      expected("'cyclic' or 'explicit'");
    }
    return f;
  }

  // ---- statements

  Statement statement() {
    skip_space();
    const std::size_t start = pos_;
    Statement st;
    auto kw = peek_ident();
    if (!kw) expected("statement keyword");
    pos_ += kw->size();
    if (*kw == "ring") ring_decl(st);
    else if (*kw == "ideal") ideal_decl(st);
    else if (*kw == "module") module_decl(st);
    else if (*kw == "let") let_stmt(st);
    else if (*kw == "print") {
      st.type = Statement::Type::Print;
      st.expr = expression();
    } else if (*kw == "check") check_stmt(st);
    else if (*kw == "search") search_stmt(st);
    else if (*kw == "assert") assert_stmt(st);
    else fail(ErrorKind::ParseError, start,
              "expected one of ring, ideal, module, let, print, check, search, assert; found '" + *kw + "'");
    expect(';');
    st.span = span_at(start);
    st.span.end = pos_;
    st.text = std::string(src_.substr(start, pos_ - start));
    return st;
  }

  void ring_decl(Statement& st) {
    st.type = Statement::Type::Ring;
    skip_space();
    std::size_t id_at = pos_;
    st.id = ident("ring name");
    expect('=');
    skip_space();
    std::size_t field_at = pos_;
    std::string field = ident("'GF' or 'QQ'");
    if (field == "GF") {
      expect('(');
      st.prime = integer();
      expect(')');
      if (!is_prime(st.prime) || st.prime >= (std::int64_t{1} << 31))
        fail(ErrorKind::ParseError, field_at, "GF(" + std::to_string(st.prime) + ") needs a prime below 2^31");
    } else if (field == "QQ") {
      st.rationals = true;
    } else {
      fail(ErrorKind::ParseError, field_at, "expected 'GF' or 'QQ', found '" + field + "'");
    }
    expect('[');
    if (!peek(']')) {
      do {
        skip_space();
        std::size_t at = pos_;
        std::string v = ident("variable name");
        if (std::find(st.vars.begin(), st.vars.end(), v) != st.vars.end())
          fail(ErrorKind::ParseError, at, "variable '" + v + "' repeated");
        st.vars.push_back(v);
      } while (accept(','));
    }
    expect(']');
    if (accept_keyword("weights")) {
      skip_space();
      std::size_t at = pos_;
      for (auto w : int_list()) {
        if (w < 1 || w > 1000000) fail(ErrorKind::ParseError, at, "weights must be positive");
        st.weights.push_back(static_cast<std::int32_t>(w));
      }
      if (st.weights.size() != st.vars.size())
        fail(ErrorKind::ParseError, at, "one weight per variable is required");
    } else {
      st.weights.assign(st.vars.size(), 1);
    }
    rings_[st.id] = std::make_shared<const PolyRing>(Field::rationals(), st.vars, st.weights);
    if (accept('/')) {
      st.polys = poly_list();
      check_polys(st.polys, st.id);
    }
    declare(st.id, {ValueKind::Ring, st.id}, id_at);
  }

  void ideal_decl(Statement& st) {
    st.type = Statement::Type::Ideal;
    skip_space();
    std::size_t id_at = pos_;
    st.id = ident("ideal name");
    expect('=');
    st.polys = poly_list();
    expect_keyword("in");
    skip_space();
    std::size_t at = pos_;
    st.ring = require_ring(ident("ring name"), at);
    check_polys(st.polys, st.ring);
    declare(st.id, {ValueKind::Ideal, st.ring}, id_at);
  }

  void module_decl(Statement& st) {
    st.type = Statement::Type::Module;
    skip_space();
    std::size_t id_at = pos_;
    st.id = ident("module name");
    expect('=');
    expect_keyword("coker");
    skip_space();
    std::size_t at = pos_;
    st.ring = require_ring(ident("ring name"), at);
    bool has_twists = false;
    skip_space();
    std::size_t twists_at = pos_;
    if (accept_keyword("twists")) {
      st.twists = int_list();
      has_twists = true;
    }
    expect('[');
    if (!peek(']')) {
      do {
        expect('[');
        std::vector<PolyText> col;
        if (!peek(']')) {
          do col.push_back(raw_poly());
          while (accept(','));
        }
        expect(']');
        check_polys(col, st.ring);
        st.columns.push_back(std::move(col));
      } while (accept(';'));
    }
    expect(']');
    if (!has_twists) {
      if (st.columns.empty()) fail(ErrorKind::ParseError, twists_at, "twists are required when no columns are given");
      st.twists.assign(st.columns.front().size(), 0);
    }
    declare(st.id, {ValueKind::Module, st.ring}, id_at);
  }

  void let_stmt(Statement& st) {
    st.type = Statement::Type::Let;
    skip_space();
    std::size_t id_at = pos_;
    st.id = ident("name");
    expect('=');
    st.expr = expression();
    declare(st.id, {st.expr->kind, st.expr->ring}, id_at);
  }

  void check_stmt(Statement& st) {
    st.type = Statement::Type::Check;
    skip_space();
    std::size_t at = pos_;
    st.command = ident("check name");
    expect('(');
    if (st.command == "burch") {
      st.args.push_back(ideal_expression());
    } else if (st.command == "cor55") {
      st.args.push_back(module_expression());
      expect(',');
      st.args.push_back(module_expression());
      same_ring(st.args, at);
    } else if (st.command == "artinrees" || st.command == "regular") {
      st.args.push_back(module_expression());
      expect(',');
      st.polys = poly_list();
      check_polys(st.polys, st.args[0].ring);
      if (st.command == "artinrees") {
        expect(',');
        st.ints.push_back(integer());
      }
    } else if (st.command == "burchsharp") {
      st.args.push_back(ideal_expression());
      expect(',');
      st.family = family(st.args[0].ring);
      expect(',');
      st.ints.push_back(integer());
      expect(',');
      st.ints.push_back(integer());
    } else {
      fail(ErrorKind::ParseError, at,
           "expected one of burch, cor55, artinrees, regular, burchsharp; found '" + st.command + "'");
    }
    expect(')');
  }

  void search_stmt(Statement& st) {
    st.type = Statement::Type::Search;
    skip_space();
    std::size_t at = pos_;
    st.command = ident("search name");
    if (st.command != "lichtenbaum" && st.command != "quasilichtenbaum" && st.command != "torrigid")
      fail(ErrorKind::ParseError, at,
           "expected one of lichtenbaum, quasilichtenbaum, torrigid; found '" + st.command + "'");
    expect('(');
    st.args.push_back(module_expression());
    expect(',');
    st.family = family(st.args[0].ring);
    if (st.command == "torrigid") {
      expect(',');
      expect_keyword("imax");
      st.imax = integer();
      if (*st.imax < 1) fail(ErrorKind::ParseError, pos_, "imax must be at least 1");
    }
    expect(')');
    if (accept_keyword("expect")) {
      Expectation ex;
      if (accept_keyword("exhausted")) {
        ex.exhausted = true;
      } else if (accept_keyword("witness")) {
        ex.exhausted = false;
        if (peek('(')) {
          ex.ideal = poly_list();
          check_polys(ex.ideal, st.args[0].ring);
        } else {
          ex.module = module_expression();
        }
        if (accept_keyword("i")) ex.index = integer();
      } else {
        expected("'exhausted' or 'witness'");
      }
      st.expect = std::move(ex);
    }
  }

  void assert_stmt(Statement& st) {
    st.type = Statement::Type::Assert;
    skip_space();
    std::size_t at = pos_;
    st.expr = expression();
    if (peek_two("==")) {
      pos_ += 2;
      skip_space();
      std::size_t rhs_at = pos_;
      st.rhs = expression();
      auto comparable = [](ValueKind a, ValueKind b) {
        auto norm = [](ValueKind k) {
          if (k == ValueKind::Integer) return ValueKind::Length;
          if (k == ValueKind::IntList) return ValueKind::LengthList;
          return k;
        };
        bool plain = a == ValueKind::Integer || a == ValueKind::Length || a == ValueKind::IntList ||
                     a == ValueKind::LengthList || a == ValueKind::Bool;
        return plain && norm(a) == norm(b);
      };
      if (!comparable(st.expr->kind, st.rhs->kind))
        fail(ErrorKind::TypeMismatch, rhs_at,
             "cannot compare a " + to_string(st.expr->kind) + " with a " + to_string(st.rhs->kind));
    } else if (st.expr->kind != ValueKind::Bool) {
      fail(ErrorKind::TypeMismatch, at, "assert needs a boolean or a comparison, got a " + to_string(st.expr->kind));
    }
  }

  void same_ring(const std::vector<Expr>& args, std::size_t at) {
    for (const auto& a : args)
      if (a.ring != args.front().ring) fail(ErrorKind::TypeMismatch, at, "operands over different rings");
  }
};

}  // namespace

Script parse_script(std::string_view text) { return Parser(text).run(); }

}  // namespace homkernel
