#include "homkernel/reproduce.hpp"

#include <future>

#include "homkernel/error.hpp"
#include "homkernel/interpreter.hpp"

namespace homkernel {

namespace {

const char* kR0 = "ring R = GF(32003)[x,y] weights (1,1) / (x^2, x*y);\n";
const char* kToric =
    "ring R = GF(32003)[a,b,c,d] / (c*d - a*b, c^3 - a^2*d, d^3 - b^2*c, b*c^2 - a*d^2);\n"
    "module B = coker R twists (0,1) [[c^2, -a]; [d^2, -b]; [a*d, -c]; [b*c, -d]];\n";

std::vector<ReproduceEntry> build() {
  std::vector<ReproduceEntry> v;
  v.push_back({"burch-y2", "is Burch, recall that",
               std::string(kR0) +
                    "ideal I = (y^2) in R;\n"
                    "ideal J = (y) in R;\n"
                    "ideal Y2 = (y^2) in R;\n"
                    "let m = maximal(R);\n"
                    "check burch(I);\n"
                    "assert equal(colon(I, m), m);\n"
                    "assert equal(product(m, colon(I, m)), Y2);\n"
                    "assert equal(product(m, m), Y2);\n"
                    "assert burch(J) == false;\n"
                    "search quasilichtenbaum(cyclic(I), family cyclic deg 3) expect exhausted;\n"
                    "check burchsharp(I, family cyclic deg 2, 2, 4);\n"});
  v.push_back({"lichtenbaum-R0-yR", "Tor^R_1(R/yR,R/xR)=0",
               std::string(kR0) +
                   "ideal X = (x) in R;\n"
                   "ideal Y = (y) in R;\n"
                   "let Mx = cyclic(X);\n"
                   "let My = cyclic(Y);\n"
                   "assert zero(tor(1, My, Mx));\n"
                   "assert free(Mx) == false;\n"
                   "search lichtenbaum(My, family cyclic deg 3) expect witness (x);\n"
                   "search lichtenbaum(residue(R), family cyclic deg 4) expect exhausted;\n"});
  v.push_back({"syz2-length", "is of length one",
               std::string(kR0) +
                   "ideal Y = (y) in R;\n"
                   "ideal Y2 = (y^2) in R;\n"
                   "let M = cyclic(Y);\n"
                   "print betti(resolve(M, 3));\n"
                   "assert betti(resolve(M, 3)) == (1,1,1,2);\n"
                   "assert length(syzygy(M, 2)) == 1;\n"
                   "assert length(syzygy(cyclic(Y2), 2)) == 1;\n"});
  v.push_back({"syz-infinite-length", "for all $i > 0$",
               std::string(kR0) +
                   "let k = residue(R);\n"
                   "assert length(syzygy(k, 1)) == inf;\n"
                   "assert length(syzygy(k, 2)) == inf;\n"
                   "assert length(syzygy(k, 3)) == inf;\n"});
  v.push_back({"prop20-witness", "In sum, we proved that",
               std::string(kR0) +
                   "ideal X = (x) in R;\n"
                   "ideal Z = (0) in R;\n"
                   "let m = maximal(R);\n"
                   "assert equal(intersect(X, power(m, 2)), Z);\n"
                   "assert equal(intersect(X, power(m, 3)), Z);\n"
                   "assert zero(tor(1, cyclic(power(m, 2)), cyclic(X)));\n"
                   "search lichtenbaum(cyclic(power(m, 2)), family cyclic deg 3) expect witness (x);\n"});
  v.push_back({"kx-x4-torrigid", "is not tor-rigid. Indeed",
               "ring R = GF(32003)[x] / (x^4);\n"
               "module M = coker R twists (0) [[x^3]];\n"
               "print torlengths(M, M, 6);\n"
               "assert torlengths(M, M, 6) == (2,0,2,0,2,0);\n"
               "search torrigid(M, family explicit (M), imax 6) expect witness M i 2;\n"});
  v.push_back({"kx-x2-rigid", "is tor-rigid for all",
               "ring R = GF(32003)[x] / (x^2);\n"
               "let k = residue(R);\n"
               "search torrigid(k, family explicit (k), imax 6) expect exhausted;\n"
               "search torrigid(k, family cyclic deg 2, imax 4) expect exhausted;\n"});
  v.push_back({"toric-e1", "taking the length, we obtain",
               std::string(kToric) +
                   "ideal I = (a, b) in R;\n"
                   "ideal E = (a) in R;\n"
                   "let Q = cyclic(I);\n"
                   "assert length(Q) == 5;\n"
                   "assert length(tensor(B, Q)) == 4;\n"
                   "assert length(quo(B, I)) == 4;\n"
                   "assert zero(tor(1, Q, B));\n"
                   "check regular(B, (a, b));\n"
                   "module C = coker R twists (0,1) [[c^2, -a]; [d^2, -b]; [a*d, -c]; [b*c, -d]; [1, 0]];\n"
                   "assert length(C) == 1;\n"
                   "assert equal(ann(C), maximal(R));\n"
                   "assert hilbert(B, 4) == (1,5,9,13,17);\n"
                   "assert hilbert(R, 4) == (1,4,9,13,17);\n"});
  v.push_back({"qs-artinrees", "an ideal generated by an",
               std::string(kToric) +
                    "check artinrees(B, (a, b), 2);\n"
                    "ring S = GF(32003)[x,y] / (x^2, x*y);\n"
                    "ideal X = (x) in S;\n"
                    "check artinrees(cyclic(X), (y), 3);\n"
                    "ring A = GF(32003)[x,y];\n"
                    "check artinrees(A, (x, y), 3);\n"});
  v.push_back({"cor26-ann", "Cohen-Macaulay prime ideal of",
               "ring A = GF(32003)[x,y,z];\n"
               "ideal p = (x, y) in A;\n"
               "let P = cyclic(p);\n"
               "let T = tor(2, P, P);\n"
               "assert equal(ann(T), p);\n"
               "assert hilbert(T, 6) == hilbert(twist(P, 2), 6);\n"
               "assert hilbert(T, 6) == (0,0,1,1,1,1,1);\n"
               "assert length(T) == inf;\n"});
  v.push_back({"fact11-koszul", "generated by an $R$-regular sequence of length",
               "ring A = GF(32003)[x,y];\n"
               "let k = residue(A);\n"
               "print betti(resolve(k, 2));\n"
               "assert betti(resolve(k, 2)) == (1,2,1);\n"
               "assert hilbert(tor(1, k, k), 4) == hilbert(sum(twist(k, 1), twist(k, 1)), 4);\n"
               "assert hilbert(tor(2, k, k), 4) == hilbert(twist(k, 2), 4);\n"
               "assert length(tor(1, k, k)) == 2;\n"
               "assert length(tor(2, k, k)) == 1;\n"
               "assert zero(tor(3, k, k));\n"});
  v.push_back({"kdepth-table", "Koszul depth of",
               std::string(kR0) +
                   "ring A = GF(32003)[x,y];\n"
                   "ring T = GF(32003)[a,b,c,d] / (c*d - a*b, c^3 - a^2*d, d^3 - b^2*c, b*c^2 - a*d^2);\n"
                   "assert kdepth(R) == 0;\n"
                   "assert kdepth(A) == 2;\n"
                   "assert kdepth(T) == 1;\n"
                   "assert depthzero(R);\n"
                   "assert depthzero(A) == false;\n"
                   "assert zero(socle(A));\n"
                   "assert abformula(residue(A));\n"
                   "ideal X = (x) in A;\n"
                   "assert abformula(cyclic(X));\n"
                   "assert pd(residue(A)) == 2;\n"});
  v.push_back({"ext-erigid", "is not e-rigid",
               std::string(kR0) +
                   "let k = residue(R);\n"
                   "assert length(ext(1, k, k)) == 2;\n"
                   "ring S = GF(32003)[x];\n"
                   "let l = residue(S);\n"
                   "assert length(ext(1, l, l)) == 1;\n"
                   "assert zero(ext(2, l, l));\n"});
  v.push_back({"nonCM-toric-depth", "which is not Cohen-Macaulay (for example",
               std::string(kToric) +
                   "assert kdepth(R) == 1;\n"
                   "assert nonzero(koszulh(R, 3));\n"
                   "assert zero(koszulh(R, 4));\n"
                   "assert depthzero(R) == false;\n"
                   "assert nonzero(socle(cyclic(maximal(R))));\n"
                   "assert kdepth(B) == 2;\n"});
  return v;
}

}  // namespace

const std::vector<ReproduceEntry>& reproduce_registry() {
  static const std::vector<ReproduceEntry> reg = build();
  return reg;
}

const ReproduceEntry& reproduce_entry(const std::string& id) {
  for (const auto& e : reproduce_registry())
    if (e.id == id) return e;
  throw Error(ErrorKind::UnknownExampleId, "unknown example id '" + id + "'");
}

bool ReproduceResult::pass() const {
  return identical && prime_field.exit_code() == 0 && rationals.exit_code() == 0;
}

ReproduceResult reproduce(const std::string& id) {
  const auto& entry = reproduce_entry(id);
  Script script = parse_script(entry.script);
  ReproduceResult r;
  r.id = id;
  RunOptions gf, qq;
  gf.field = Field::prime(32003);
  qq.field = Field::rationals();
  r.prime_field = run_script(script, gf);
  r.rationals = run_script(script, qq);
  const auto& a = r.prime_field.statements;
  const auto& b = r.rationals.statements;
  r.identical = a.size() == b.size();
  for (std::size_t i = 0; r.identical && i < a.size(); ++i) {
    if (a[i].pass != b[i].pass || a[i].error != b[i].error) r.identical = false;
    else if (a[i].type != "ring" && a[i].text != b[i].text) r.identical = false;
  }
  return r;
}

std::vector<ReproduceResult> reproduce_all() {
  std::vector<std::future<ReproduceResult>> jobs;
  for (const auto& e : reproduce_registry())
    jobs.push_back(std::async(std::launch::async, [id = e.id] { return reproduce(id); }));
  std::vector<ReproduceResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string reproduce_text(const ReproduceResult& r) {
  std::string out = "== " + r.id + ": " + (r.pass() ? "PASS" : "FAIL") + "\n";
  auto add = [&](const char* name, const ReportDocument& d) {
    for (const auto& s : d.statements) {
      if (s.pass || s.error) {
        out += std::string("  [") + name + "] " + std::to_string(s.line) + ": " +
               (s.error ? "ERROR " + *s.error : (*s.pass ? "ok" : "FAILED")) + "  " + s.source + "\n";
        if (s.pass && !*s.pass)
          for (const auto& t : s.text) out += "      " + t + "\n";
      }
    }
  };
  add("GF(32003)", r.prime_field);
  add("QQ", r.rationals);
  if (!r.identical) out += "  outputs differ between GF(32003) and QQ\n";
  return out;
}

}  // namespace homkernel
