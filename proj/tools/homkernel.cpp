#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homkernel/error.hpp"
#include "homkernel/interpreter.hpp"
#include "homkernel/reproduce.hpp"

using namespace homkernel;

namespace {

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UndeclaredIdentifier:
    case ErrorKind::TypeMismatch:
      return 2;
    default:
      return 3;
  }
}

int run(const std::string& path, bool json, const std::string& field, std::size_t bound, bool timing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 3;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Script script;
  try {
    script = parse_script(buf.str());
  } catch (const Error& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return exit_for(e.kind());
  }
  RunOptions opts;
  if (field == "gf32003") opts.field = Field::prime(32003);
  else if (field == "qq") opts.field = Field::rationals();
  opts.res_bound = bound;
  opts.timing = timing;
  ReportDocument doc = run_script(script, opts);
  doc.command = "run " + path;
  std::cout << emit(doc, json ? Format::Json : Format::Text);
  return doc.exit_code();
}

int reproduce_cmd(const std::string& id) {
  std::vector<ReproduceResult> results;
  try {
    if (id == "all") results = reproduce_all();
    else results.push_back(reproduce(id));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e.kind());
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << reproduce_text(r);
    ok = ok && r.pass();
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass();
  std::cout << passed << "/" << results.size() << " examples reproduced over GF(32003) and QQ\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homkernel: graded commutative algebra kernel"};
  app.require_subcommand(1);

  auto* run_sc = app.add_subcommand("run", "execute a script");
  std::string path, field = "gf32003";
  bool json = false, timing = false;
  std::size_t bound = 6;
  run_sc->add_option("file", path, "script file")->required();
  run_sc->add_flag("--json", json, "emit JSON");
  run_sc->add_option("--field", field, "coefficient field override")
      ->check(CLI::IsMember({"gf32003", "qq"}));
  run_sc->add_option("--res-bound", bound, "default resolution length")->check(CLI::PositiveNumber);
  run_sc->add_flag("--timing", timing, "record wall-clock seconds");

  auto* rep_sc = app.add_subcommand("reproduce", "replay a registered worked example");
  std::string id;
  rep_sc->add_option("id", id, "example id or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (*run_sc) return run(path, json, run_sc->count("--field") ? field : "", bound, timing);
    return reproduce_cmd(id);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
