#include "homkernel/interpreter.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <set>

#include "homkernel/error.hpp"
#include "homkernel/predicates.hpp"

namespace homkernel {

using nlohmann::json;

namespace {

struct Value {
  ValueKind kind = ValueKind::Integer;
  RingPtr ring;
  std::optional<Ideal> ideal;
  std::optional<PresentedModule> module;
  std::shared_ptr<const Resolution> resolution;
  std::int64_t integer = 0;
  Length length;
  std::vector<Length> lengths;
  bool boolean = false;
};

std::string lengths_text(const std::vector<Length>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_length(v[i]);
  return out + ")";
}

std::vector<Length> as_lengths(const Value& v) {
  if (v.kind == ValueKind::Integer) return {Length(v.integer)};
  if (v.kind == ValueKind::Length) return {v.length};
  return v.lengths;
}

class Interpreter {
 public:
  explicit Interpreter(const RunOptions& options) : options_(options) {}

  StatementReport execute(const Statement& st) {
    StatementReport r;
    r.line = st.span.line;
    r.column = st.span.column;
    r.source = st.text;
    static const char* names[] = {"ring", "ideal", "module", "let", "print", "check", "search", "assert"};
    r.type = names[static_cast<int>(st.type)];
    try {
      switch (st.type) {
        case Statement::Type::Ring: ring_decl(st, r); break;
        case Statement::Type::Ideal: ideal_decl(st, r); break;
        case Statement::Type::Module: module_decl(st, r); break;
        case Statement::Type::Let: {
          Value v = eval(*st.expr);
          describe_value(v, r);
          env_[st.id] = std::move(v);
          break;
        }
        case Statement::Type::Print: describe_value(eval(*st.expr), r); break;
        case Statement::Type::Check: check(st, r); break;
        case Statement::Type::Search: search(st, r); break;
        case Statement::Type::Assert: assertion(st, r); break;
      }
    } catch (const Error& e) {
      r.error = e.what();
      r.pass.reset();
      if (st.type == Statement::Type::Let || st.type == Statement::Type::Ring || st.type == Statement::Type::Ideal ||
          st.type == Statement::Type::Module)
        failed_decls_.insert(st.id);
    } catch (const std::exception& e) {
      r.error = std::string("InternalError: ") + e.what();
      r.pass.reset();
    }
    return r;
  }

 private:
  const RunOptions& options_;
  std::map<std::string, Value> env_;
  std::set<std::string> failed_decls_;

  const Value& lookup(const std::string& id) {
    auto it = env_.find(id);
    if (it == env_.end()) {
      if (failed_decls_.count(id)) throw Error(ErrorKind::UndeclaredIdentifier, "'" + id + "' failed to evaluate");
      throw Error(ErrorKind::UndeclaredIdentifier, "'" + id + "' is not declared");
    }
    return it->second;
  }

  const RingPtr& ring_of(const std::string& id) { return lookup(id).ring; }

  Polynomial poly(const RingPtr& ring, const PolyText& p) { return parse_polynomial(ring->ambient(), p.text); }

  std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<PolyText>& ps) {
    std::vector<Polynomial> out;
    for (const auto& p : ps) out.push_back(poly(ring, p));
    return out;
  }

  // ---- declarations

  void ring_decl(const Statement& st, StatementReport& r) {
    Field field = st.rationals ? Field::rationals() : Field::prime(st.prime);
    if (options_.field) field = *options_.field;
    auto ambient = std::make_shared<const PolyRing>(field, st.vars, st.weights);
    std::vector<Polynomial> gens;
    for (const auto& p : st.polys) gens.push_back(parse_polynomial(ambient, p.text));
    Value v;
    v.kind = ValueKind::Ring;
    v.ring = make_ring(ambient, std::move(gens));
    r.payload["ring"] = v.ring->to_string();
    json gb = json::array();
    for (const auto& g : v.ring->quotient_gb()) gb.push_back(g.to_string());
    r.payload["quotient_gb"] = gb;
    r.text.push_back(v.ring->to_string());
    env_[st.id] = std::move(v);
  }

  void ideal_decl(const Statement& st, StatementReport& r) {
    const RingPtr& ring = ring_of(st.ring);
    Value v;
    v.kind = ValueKind::Ideal;
    v.ring = ring;
    v.ideal = Ideal(ring, polys(ring, st.polys));
    describe_value(v, r);
    env_[st.id] = std::move(v);
  }

  void module_decl(const Statement& st, StatementReport& r) {
    const RingPtr& ring = ring_of(st.ring);
    std::vector<VectorPoly> cols;
    for (const auto& c : st.columns) cols.emplace_back(polys(ring, c));
    Value v;
    v.kind = ValueKind::Module;
    v.ring = ring;
    v.module = make_coker(ring, st.twists, std::move(cols));
    describe_value(v, r);
    env_[st.id] = std::move(v);
  }

  // ---- evaluation

  PresentedModule as_module(const Value& v) {
    if (v.kind == ValueKind::Ring) return free_module(v.ring, {0});
    return *v.module;
  }

  std::size_t as_index(const Expr& e, const Value& v) {
    if (v.integer < 0) throw Error(ErrorKind::IndexOutOfRange, "negative index in " + e.text);
    return static_cast<std::size_t>(v.integer);
  }

  Value module_value(const RingPtr& ring, PresentedModule m) {
    Value v;
    v.kind = ValueKind::Module;
    v.ring = ring;
    v.module = std::move(m);
    return v;
  }

  Value ideal_value(const RingPtr& ring, Ideal i) {
    Value v;
    v.kind = ValueKind::Ideal;
    v.ring = ring;
    v.ideal = std::move(i);
    return v;
  }

  Value bool_value(bool b) {
    Value v;
    v.kind = ValueKind::Bool;
    v.boolean = b;
    return v;
  }

  Value int_value(std::int64_t n) {
    Value v;
    v.kind = ValueKind::Integer;
    v.integer = n;
    return v;
  }

  Value length_value(Length l) {
    Value v;
    v.kind = ValueKind::Length;
    v.length = l;
    return v;
  }

  std::shared_ptr<const Resolution> resolution(const PresentedModule& m, std::size_t l) {
    return std::make_shared<const Resolution>(resolve(m, l));
  }

  Value eval(const Expr& e) {
    if (e.op == "int") return int_value(e.number);
    if (e.op == "inf") return length_value(std::nullopt);
    if (e.op == "bool") return bool_value(e.number != 0);
    if (e.op == "list") {
      Value v;
      v.kind = e.kind;
      v.lengths = e.list;
      return v;
    }
    if (e.op == "var") return lookup(e.name);

    std::vector<Value> a;
    for (const auto& arg : e.args) a.push_back(eval(arg));
    RingPtr ring;
    for (const auto& v : a)
      if (v.ring) ring = v.ring;
    auto M = [&](std::size_t i) { return as_module(a[i]); };
    auto I = [&](std::size_t i) { return *a[i].ideal; };
    auto N = [&](std::size_t i) { return as_index(e, a[i]); };
    auto bound = [&](std::size_t i) { return a.size() > i ? N(i) : options_.res_bound; };
    const std::string& op = e.op;

    if (op == "tor") return module_value(ring, tor(N(0), M(1), M(2)));
    if (op == "ext") return module_value(ring, ext(N(0), M(1), M(2)));
    if (op == "hom") return module_value(ring, hom_module(M(0), M(1)));
    if (op == "tensor") return module_value(ring, tensor(M(0), M(1)));
    if (op == "syzygy") return module_value(ring, syzygy(M(0), N(1)));
    if (op == "transpose") return module_value(ring, transpose(M(0)));
    if (op == "socle") return module_value(ring, socle(M(0)));
    if (op == "colon") {
      if (a[0].kind == ValueKind::Ideal) return ideal_value(ring, ideal_colon(I(0), I(1)));
      return module_value(ring, colon_in_module(M(0), poly(ring, e.polys[0])));
    }
    if (op == "sum") {
      if (a[0].kind == ValueKind::Ideal) return ideal_value(ring, ideal_sum(I(0), I(1)));
      return module_value(ring, direct_sum(M(0), M(1)));
    }
    if (op == "twist") return module_value(ring, twist(M(0), a[1].integer));
    if (op == "cyclic") return module_value(ring, cyclic_module(I(0)));
    if (op == "residue") return module_value(ring, residue_field(ring));
    if (op == "quo") return module_value(ring, quotient_by_ideal(M(0), I(1).gens_mod_quotient()));
    if (op == "koszulh")
      return module_value(ring, tensor_homology(koszul_complex(ring, ring->maximal_ideal_gens()), M(0), N(1)));
    if (op == "maximal") return ideal_value(ring, maximal_ideal(ring));
    if (op == "ann") return ideal_value(ring, annihilator(M(0)));
    if (op == "product") return ideal_value(ring, ideal_product(I(0), I(1)));
    if (op == "intersect") return ideal_value(ring, ideal_intersect(I(0), I(1)));
    if (op == "power") return ideal_value(ring, ideal_power(I(0), static_cast<int>(N(1))));
    if (op == "resolve") {
      Value v;
      v.kind = ValueKind::Resolution;
      v.ring = ring;
      v.resolution = resolution(M(0), bound(1));
      return v;
    }
    if (op == "betti") {
      Value v;
      v.kind = ValueKind::IntList;
      v.resolution = a[0].resolution;
      for (auto t : v.resolution->betti.totals()) v.lengths.push_back(static_cast<std::int64_t>(t));
      return v;
    }
    if (op == "length") return length_value(length(M(0)));
    if (op == "kdepth") return int_value(static_cast<std::int64_t>(kdepth(M(0))));
    if (op == "beta0") return int_value(static_cast<std::int64_t>(M(0).beta0()));
    if (op == "beta1") return int_value(static_cast<std::int64_t>(M(0).beta1()));
    if (op == "pd") {
      auto res = resolve(M(0), bound(1));
      return length_value(res.pd ? Length(static_cast<std::int64_t>(*res.pd)) : std::nullopt);
    }
    if (op == "hilbert") {
      Value v;
      v.kind = ValueKind::IntList;
      for (auto h : hilbert_function(M(0), a[1].integer)) v.lengths.push_back(h);
      return v;
    }
    if (op == "torlengths") {
      Value v;
      v.kind = ValueKind::LengthList;
      std::size_t n = N(2);
      auto res = resolve(M(0), n + 1);
      for (std::size_t i = 1; i <= n; ++i) v.lengths.push_back(length(tor(i, res, M(1))));
      return v;
    }
    if (op == "zero") return bool_value(M(0).is_zero());
    if (op == "nonzero") return bool_value(!M(0).is_zero());
    if (op == "free") return bool_value(is_free(M(0)).free);
    if (op == "equal") return bool_value(ideal_equal(I(0), I(1)));
    if (op == "burch") return bool_value(burch_test(I(0)).burch);
    if (op == "depthzero") return bool_value(depth_zero_test(M(0)));
    if (op == "member") return bool_value(I(0).contains(poly(ring, e.polys[0])));
    if (op == "abformula") {
      auto m = M(0);
      auto res = resolve(m, bound(1));
      if (!res.pd) throw Error(ErrorKind::IndexOutOfRange, "projective dimension exceeds the bound");
      auto base = free_module(ring, {0});
      return bool_value(static_cast<std::int64_t>(*res.pd + kdepth(m)) == static_cast<std::int64_t>(kdepth(base)));
    }
    throw Error(ErrorKind::TypeMismatch, "unknown builtin " + op);
  }

  // ---- rendering

  void describe_value(const Value& v, StatementReport& r) {
    switch (v.kind) {
      case ValueKind::Ring:
        r.payload["ring"] = v.ring->to_string();
        r.text.push_back(v.ring->to_string());
        break;
      case ValueKind::Ideal:
        r.payload["ideal"] = v.ideal->gb_strings();
        r.text.push_back("ideal " + v.ideal->to_string());
        break;
      case ValueKind::Module:
        r.payload["module"] = module_summary(*v.module);
        r.text.push_back("module " + module_summary_text(*v.module));
        break;
      case ValueKind::Resolution:
        r.payload["betti"] = betti_json(*v.resolution);
        resolution_text(*v.resolution, r);
        break;
      case ValueKind::Integer:
        r.payload["value"] = v.integer;
        r.text.push_back(std::to_string(v.integer));
        break;
      case ValueKind::Length:
        r.payload["length"] = length_json(v.length);
        r.text.push_back(format_length(v.length));
        break;
      case ValueKind::IntList:
      case ValueKind::LengthList: {
        if (v.resolution) {
          r.payload["betti"] = betti_json(*v.resolution);
          resolution_text(*v.resolution, r);
          break;
        }
        json arr = json::array();
        for (const auto& l : v.lengths) arr.push_back(length_json(l));
        r.payload["values"] = arr;
        r.text.push_back(lengths_text(v.lengths));
        break;
      }
      case ValueKind::Bool:
        r.payload["value"] = v.boolean;
        r.text.push_back(v.boolean ? "true" : "false");
        break;
    }
  }

  void resolution_text(const Resolution& res, StatementReport& r) {
    std::string table = res.betti.to_text();
    std::size_t start = 0;
    while (start < table.size()) {
      std::size_t nl = table.find('\n', start);
      r.text.push_back(table.substr(start, nl - start));
      start = nl + 1;
    }
    r.text.push_back(res.pd ? "pd = " + std::to_string(*res.pd)
                            : "pd > " + std::to_string(res.betti.max_index()) + " (unknown)");
    r.text.push_back(std::string("exactness certified: ") + (res.certified ? "yes" : "no"));
  }

  // ---- commands

  CandidateFamily make_family(const Family& f, const RingPtr& ring) {
    if (f.cyclic) return CandidateFamily::cyclic(ring, f.degree, static_cast<std::size_t>(f.gens));
    std::vector<PresentedModule> mods;
    std::vector<std::string> labels;
    for (const auto& m : f.members) {
      mods.push_back(as_module(eval(m)));
      labels.push_back(m.text);
    }
    return CandidateFamily::explicit_list(std::move(mods), std::move(labels));
  }

  void check(const Statement& st, StatementReport& r) {
    std::vector<Value> a;
    for (const auto& e : st.args) a.push_back(eval(e));
    const RingPtr& ring = a[0].ring;
    if (st.command == "burch") {
      auto b = burch_test(*a[0].ideal);
      r.pass = b.burch;
      r.payload = {{"burch", b.burch}, {"colon", b.colon.gb_strings()}, {"m_colon", b.lhs.gb_strings()},
                   {"i_m", b.rhs.gb_strings()}};
      r.text.push_back("(I:m) = " + b.colon.to_string());
      r.text.push_back("m(I:m) = " + b.lhs.to_string());
      r.text.push_back("Im = " + b.rhs.to_string());
      r.text.push_back(b.burch ? "Burch" : "not Burch");
    } else if (st.command == "cor55") {
      auto c = check_cor55_at_m(as_module(a[0]), as_module(a[1]));
      r.pass = c.holds();
      r.payload = {{"socle_tor1", c.socle_tor}, {"socle_n", c.socle_n}, {"m_free", c.m_free}, {"holds", c.holds()}};
      r.text.push_back(std::string("socle(Tor_1(M,N)) != 0: ") + (c.socle_tor ? "true" : "false"));
      r.text.push_back(std::string("socle(N) != 0: ") + (c.socle_n ? "true" : "false"));
      r.text.push_back(std::string("M free: ") + (c.m_free ? "true" : "false"));
    } else if (st.command == "artinrees") {
      auto rep = check_artin_rees_qs(as_module(a[0]), polys(ring, st.polys), static_cast<int>(st.ints[0]));
      r.pass = rep.pass();
      json rows = json::array();
      for (auto [n, ok] : rep.rows) {
        rows.push_back({{"n", n}, {"tor1_zero", ok}});
        r.text.push_back("n=" + std::to_string(n) + ": Tor_1(M, R/I^n) " + (ok ? "= 0" : "!= 0"));
      }
      r.payload = {{"regular", true}, {"rows", rows}};
    } else if (st.command == "regular") {
      try {
        check_artin_rees_qs(as_module(a[0]), polys(ring, st.polys), 0);
        r.pass = true;
        r.payload = {{"regular", true}};
        r.text.push_back("regular sequence");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRegularSequence) throw;
        r.pass = false;
        r.payload = {{"regular", false}, {"reason", e.what()}};
        r.text.push_back(e.what());
      }
    } else if (st.command == "burchsharp") {
      auto fam = make_family(*st.family, ring);
      auto rep = check_burch_sharp(*a[0].ideal, fam, static_cast<std::size_t>(st.ints[0]),
                                   static_cast<std::size_t>(st.ints[1]));
      r.pass = rep.pass();
      json rows = json::array();
      for (const auto& row : rep.rows) {
        rows.push_back({{"module", row.label},
                        {"hypothesis", row.hypothesis},
                        {"pd", row.pd ? json(*row.pd) : json(nullptr)},
                        {"pass", row.pass}});
        std::string line = row.label + ": ";
        if (!row.hypothesis) line += "hypothesis not met";
        else line += "pd " + (row.pd ? std::to_string(*row.pd) : std::string("unknown")) + (row.pass ? " ok" : " too large");
        r.text.push_back(line);
      }
      r.payload = {{"family", fam.bounds()}, {"rows", rows}};
    }
  }

  void search(const Statement& st, StatementReport& r) {
    Value target = eval(st.args[0]);
    const RingPtr& ring = target.ring;
    auto fam = make_family(*st.family, ring);
    PresentedModule l = as_module(target);
    Witness w = st.command == "lichtenbaum"        ? falsify_lichtenbaum(l, fam)
                : st.command == "quasilichtenbaum" ? falsify_quasi_lichtenbaum(l, fam)
                                                   : falsify_torrigid(l, fam, static_cast<std::size_t>(*st.imax));
    json cert = json::array();
    for (const auto& c : w.certificate)
      cert.push_back({{"tor_index", c.index}, {"beta0", c.beta0}, {"beta1", c.beta1}, {"length", length_json(c.length)},
                      {"zero", c.zero}});
    r.payload = {{"kind", to_string(w.kind)}, {"bounds", w.bounds}, {"certificate", cert}};
    if (w.member) {
      r.payload["witness"] = w.label;
      r.payload["member"] = *w.member;
      r.payload["replayed"] = w.replayed;
    }
    if (w.index) r.payload["index"] = *w.index;
    if (w.kind == WitnessKind::Exhausted) {
      r.text.push_back("no counterexample in family (" + w.bounds + ")");
    } else {
      std::string line = to_string(w.kind) + ": " + w.label;
      if (w.index) line += " at i=" + std::to_string(*w.index);
      r.text.push_back(line);
      for (const auto& c : w.certificate)
        r.text.push_back("Tor_" + std::to_string(c.index) + ": beta0=" + std::to_string(c.beta0) +
                         " length=" + format_length(c.length));
      r.text.push_back(std::string("certificate replay: ") + (w.replayed ? "confirmed" : "FAILED"));
    }
    if (!st.expect) return;
    const Expectation& ex = *st.expect;
    bool ok;
    if (ex.exhausted) {
      ok = w.kind == WitnessKind::Exhausted;
    } else {
      ok = w.kind != WitnessKind::Exhausted && w.replayed;
      if (ok && !ex.ideal.empty()) {
        const auto& member = fam.members()[*w.member];
        ok = member.ideal && ideal_equal(*member.ideal, Ideal(ring, polys(ring, ex.ideal)));
      }
      if (ok && ex.module) {
        PresentedModule want = as_module(eval(*ex.module));
        const auto& got = fam.members()[*w.member].module;
        ok = got.twists() == want.twists() && got.relations() == want.relations();
      }
      if (ok && ex.index) ok = w.index && static_cast<std::int64_t>(*w.index) == *ex.index;
    }
    r.pass = ok;
  }

  void assertion(const Statement& st, StatementReport& r) {
    Value lhs = eval(*st.expr);
    if (!st.rhs) {
      r.pass = lhs.boolean;
      r.payload["value"] = lhs.boolean;
      return;
    }
    Value rhs = eval(*st.rhs);
    if (lhs.kind == ValueKind::Bool) {
      r.pass = lhs.boolean == rhs.boolean;
      r.payload = {{"lhs", lhs.boolean}, {"rhs", rhs.boolean}};
      if (!*r.pass) r.text.push_back(std::string("got ") + (lhs.boolean ? "true" : "false"));
      return;
    }
    auto l = as_lengths(lhs), rr = as_lengths(rhs);
    r.pass = l == rr;
    auto to_json_list = [](const std::vector<Length>& v, bool scalar) {
      if (scalar) return length_json(v.front());
      json arr = json::array();
      for (const auto& x : v) arr.push_back(length_json(x));
      return arr;
    };
    bool scalar = lhs.kind == ValueKind::Integer || lhs.kind == ValueKind::Length;
    r.payload = {{"lhs", to_json_list(l, scalar)}, {"rhs", to_json_list(rr, scalar)}};
    if (!*r.pass) r.text.push_back("got " + (scalar ? format_length(l.front()) : lengths_text(l)) + ", expected " +
                                   (scalar ? format_length(rr.front()) : lengths_text(rr)));
  }
};

}  // namespace

ReportDocument run_script(const Script& script, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  Interpreter interp(options);
  for (const auto& st : script.statements) doc.statements.push_back(interp.execute(st));
  if (options.timing)
    doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

}  // namespace homkernel
