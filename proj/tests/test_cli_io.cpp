#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <regex>
#include <sys/wait.h>

#include "homkernel/error.hpp"
#include "homkernel/interpreter.hpp"
#include "homkernel/reproduce.hpp"
#include "support.hpp"

using namespace hk_test;
using nlohmann::json;

namespace {

ReportDocument run_text(const std::string& text, RunOptions opts = {}) { return run_script(parse_script(text), opts); }

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::ParseError;
}

const char* kBurch =
    "ring R = GF(32003)[x,y] weights (1,1) / (x^2, x*y);\n"
    "ideal I = (y^2) in R;\n"
    "check burch(I);\n";

}  // namespace

TEST(Parser, RingDeclaration) {
  auto s = parse_script("ring R = GF(32003)[x,y] weights (1,1) / (x^2, x*y);");
  ASSERT_EQ(s.statements.size(), 1u);
  const auto& st = s.statements[0];
  EXPECT_EQ(st.type, Statement::Type::Ring);
  EXPECT_EQ(st.vars, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(st.prime, 32003);
  auto doc = run_script(s);
  EXPECT_EQ(doc.statements[0].payload["quotient_gb"], json({"x^2", "x*y"}));
}

TEST(Parser, EmptyAndComments) {
  EXPECT_TRUE(parse_script("").statements.empty());
  EXPECT_TRUE(parse_script("  # nothing here\n\n# more\n").statements.empty());
}

TEST(Parser, ModuleDefaultsTwists) {
  auto s = parse_script("ring R = QQ[x,y]; module M = coker R [[y]];");
  EXPECT_EQ(s.statements[1].twists, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(parse_kind("ring R = QQ[x]; module M = coker R;"), ErrorKind::ParseError);
}

TEST(Parser, Errors) {
  try {
    parse_script("ring R = GF(7)[x];\nideal I = (x in R;");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_TRUE(std::regex_search(std::string(e.what()), std::regex("2:[0-9]+: "))) << e.what();
  }
  EXPECT_EQ(parse_kind("print length(M);"), ErrorKind::UndeclaredIdentifier);
  EXPECT_EQ(parse_kind("ring R = GF(7)[x]; ideal I = (x) in R; print length(I);"), ErrorKind::TypeMismatch);
  EXPECT_EQ(parse_kind("ring R = GF(7)[x]; ideal I = (z) in R;"), ErrorKind::ParseError);
  auto inh = run_text("ring R = GF(7)[x] / (x + x^2);");
  ASSERT_TRUE(inh.statements[0].error.has_value());
  EXPECT_EQ(inh.statements[0].error->rfind("InhomogeneousInput", 0), 0u);
  EXPECT_EQ(parse_kind("ring R = GF(7)[x]"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind("frobnicate;"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind("ring R = GF(7)[x]; ring S = GF(7)[y]; ideal I = (x) in R; ideal K = (y) in S; "
                       "assert equal(I, K);"),
            ErrorKind::TypeMismatch);
}

TEST(Parser, FuzzTotality) {
  std::mt19937 rng(1234);
  const std::string alphabet = "ring ideal module coker let print check search assert GF QQ()[]{},;:=/^*+-#01239xyz\n\t ";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 80);
  const std::string seeds[] = {kBurch,
                               "ring R = QQ[x,y]; module M = coker R twists (0,1) [[x, 1]; [y^2, y]]; "
                               "print betti(resolve(M, 2)); assert length(M) == inf;",
                               "ring R = GF(5)[a]; search torrigid(residue(R), family cyclic deg 2, imax 3) expect exhausted;"};
  auto accept = [](const std::string& text) {
    try {
      parse_script(text);
    } catch (const Error& e) {
      auto k = e.kind();
      EXPECT_TRUE(k == ErrorKind::ParseError || k == ErrorKind::UndeclaredIdentifier || k == ErrorKind::TypeMismatch)
          << e.what();
      EXPECT_TRUE(std::regex_search(std::string(e.what()), std::regex("[0-9]+:[0-9]+: "))) << e.what();
    }
  };
  for (int t = 0; t < 3000; ++t) {
    std::string s;
    for (std::size_t i = len(rng); i > 0; --i) s += alphabet[pick(rng)];
    accept(s);
    std::string raw;
    for (std::size_t i = len(rng); i > 0; --i) raw += static_cast<char>(rng() & 0xff);
    accept(raw);
    std::string mut = seeds[t % 3];
    std::uniform_int_distribution<std::size_t> at(0, mut.size() - 1);
    for (int k = 0; k < 3; ++k) {
      std::size_t p = at(rng);
      switch (rng() % 3) {
        case 0: mut.erase(p, 1); break;
        case 1: mut.insert(p, 1, alphabet[pick(rng)]); break;
        default: mut[p] = static_cast<char>(rng() & 0xff);
      }
      at = std::uniform_int_distribution<std::size_t>(0, mut.size() - 1);
    }
    accept(mut);
  }
}

TEST(Run, BurchScript) {
  auto doc = run_text(kBurch);
  ASSERT_EQ(doc.statements.size(), 3u);
  const auto& c = doc.statements[2];
  EXPECT_EQ(c.pass, true);
  EXPECT_EQ(c.payload["m_colon"], json({"y^2"}));
  EXPECT_EQ(c.payload["i_m"], json({"y^3"}));
  EXPECT_EQ(doc.exit_code(), 0);
}

TEST(Run, ToricAssertions) {
  auto doc = run_text(
      "ring R = GF(32003)[a,b,c,d] / (c*d - a*b, c^3 - a^2*d, d^3 - b^2*c, b*c^2 - a*d^2);\n"
      "module B = coker R twists (0,1) [[c^2, -a]; [d^2, -b]; [a*d, -c]; [b*c, -d]];\n"
      "ideal I = (a, b) in R;\n"
      "let M = cyclic(I);\n"
      "assert zero(tor(1, M, B));\n"
      "assert length(M) == 5;\n");
  for (std::size_t i = 4; i < 6; ++i) EXPECT_EQ(doc.statements[i].pass, true) << doc.statements[i].source;
}

TEST(Run, FailuresContinue) {
  auto doc = run_text(
      "ring R = GF(7)[x,y];\n"
      "let k = residue(R);\n"
      "assert length(k) == 2;\n"
      "module Z = coker R [[1]];\n"
      "print kdepth(Z);\n"
      "assert length(k) == 1;\n");
  ASSERT_EQ(doc.statements.size(), 6u);
  EXPECT_EQ(doc.statements[2].pass, false);
  EXPECT_TRUE(doc.statements[4].error.has_value());
  EXPECT_EQ(doc.statements[5].pass, true);
  EXPECT_EQ(doc.exit_code(), 3);
  auto only_fail = run_text("ring R = GF(7)[x]; assert kdepth(R) == 0;");
  EXPECT_EQ(only_fail.exit_code(), 1);
}

TEST(Run, FieldOverride) {
  RunOptions q;
  q.field = Field::rationals();
  auto doc = run_text("ring R = GF(7)[x,y]; let a = length(residue(R));", q);
  EXPECT_EQ(doc.statements[0].payload["ring"], "QQ[x,y]");
  auto plain = run_text("ring R = GF(7)[x,y];");
  EXPECT_EQ(plain.statements[0].payload["ring"], "GF(7)[x,y]");
}

TEST(Emit, ZeroModuleFragment) {
  auto doc = run_text("ring R = GF(7)[x]; module Z = coker R [[1]];");
  EXPECT_EQ(doc.statements[1].payload, json::parse(R"({"module": {"beta0": 0, "beta1": 0, "length": 0}})"));
}

TEST(Emit, BettiText) {
  auto doc = run_text("ring A = GF(32003)[x,y]; print betti(resolve(residue(A), 2));");
  std::string text = emit(doc, Format::Text);
  EXPECT_NE(text.find("total: 1 2 1"), std::string::npos) << text;
  EXPECT_NE(text.find("0: 1 2 1"), std::string::npos) << text;
}

TEST(Emit, JsonRoundTrip) {
  auto doc = run_text(std::string(kBurch) +
                      "module M = coker R [[y]];\n"
                      "print betti(resolve(M, 3));\n"
                      "print hilbert(M, 4);\n"
                      "search lichtenbaum(M, family cyclic deg 3);\n"
                      "print length(residue(R));\n"
                      "print syzygy(residue(R), 1);\n"
                      "print length(R);\n"
                      "assert length(M) == 3;\n");
  doc.command = "run test";
  json j = to_json(doc);
  EXPECT_EQ(j["schema"], "homkernel/1");
  EXPECT_EQ(from_json(j), doc);
  EXPECT_EQ(from_json(json::parse(emit(doc, Format::Json))), doc);
  EXPECT_EQ(to_json(from_json(j)).dump(), j.dump());
}

TEST(Run, Deterministic) {
  std::string script = std::string(kBurch) +
                       "module M = coker R [[y]];\n"
                       "print betti(resolve(M, 4));\n"
                       "search lichtenbaum(M, family cyclic deg 3);\n";
  auto a = emit(run_text(script), Format::Json), b = emit(run_text(script), Format::Json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(emit(run_text(script), Format::Text), emit(run_text(script), Format::Text));
}

TEST(Reproduce, Registry) {
  const auto& reg = reproduce_registry();
  EXPECT_EQ(reg.size(), 14u);
  std::set<std::string> ids;
  for (const auto& e : reg) {
    EXPECT_TRUE(ids.insert(e.id).second);
    EXPECT_NO_THROW(parse_script(e.script)) << e.id;
    EXPECT_FALSE(e.anchor.empty());
  }
  try {
    reproduce("no-such-example");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownExampleId);
  }
}

TEST(Reproduce, DualField) {
  auto r = reproduce("burch-y2");
  EXPECT_TRUE(r.identical);
  EXPECT_TRUE(r.pass());
  EXPECT_NE(r.rationals.statements[0].text[0].find("QQ"), std::string::npos);
}

namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(HOMKERNEL_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string buf;
  char chunk[4096];
  while (std::size_t n = fread(chunk, 1, sizeof chunk, p)) buf.append(chunk, n);
  int status = pclose(p);
  if (out) *out = buf;
  return WEXITSTATUS(status);
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli("run " + write_temp("ok.hk", kBurch), &out), 0) << out;
  EXPECT_NE(out.find("Burch"), std::string::npos);
  EXPECT_EQ(run_cli("run " + write_temp("fail.hk", "ring R = GF(7)[x]; assert kdepth(R) == 0;")), 1);
  EXPECT_EQ(run_cli("run " + write_temp("parse.hk", "ring R = GF(7)[x")), 2);
  EXPECT_EQ(run_cli("run " + write_temp("undecl.hk", "print length(M);")), 2);
  EXPECT_EQ(run_cli("run " + write_temp("rt.hk", "ring R = GF(7)[x]; module Z = coker R [[1]]; print kdepth(Z);")), 3);
  EXPECT_EQ(run_cli("run --json " + write_temp("js.hk", kBurch), &out), 0);
  EXPECT_EQ(json::parse(out)["schema"], "homkernel/1");
  EXPECT_EQ(run_cli("run --field qq " + write_temp("qq.hk", kBurch), &out), 0);
  EXPECT_NE(out.find("QQ[x,y]"), std::string::npos);
  EXPECT_EQ(run_cli("run --bogus x"), 2);
  EXPECT_EQ(run_cli("reproduce no-such-example", &out), 3);
  EXPECT_EQ(run_cli("reproduce syz2-length", &out), 0) << out;
}

TEST(Cli, ResBound) {
  std::string out;
  auto path = write_temp("rb.hk", "ring R = GF(7)[x,y] / (x^2, x*y); print pd(residue(R));");
  EXPECT_EQ(run_cli("run --res-bound 2 " + path, &out), 0);
  EXPECT_NE(out.find("inf"), std::string::npos) << out;
}
