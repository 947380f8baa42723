#include "homkernel/report.hpp"

#include <algorithm>
#include <sstream>

namespace homkernel {

using nlohmann::json;

bool ReportDocument::failed() const {
  return std::any_of(statements.begin(), statements.end(), [](const auto& s) { return s.pass && !*s.pass; });
}

bool ReportDocument::errored() const {
  return std::any_of(statements.begin(), statements.end(), [](const auto& s) { return s.error.has_value(); });
}

int ReportDocument::exit_code() const {
  if (errored()) return 3;
  return failed() ? 1 : 0;
}

json length_json(const Length& l) { return l ? json(*l) : json("inf"); }

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::int64_t hilbert_start(const PresentedModule& m) {
  const auto& t = m.minimal().twists();
  return t.empty() ? 0 : *std::min_element(t.begin(), t.end());
}

}  // namespace

json module_summary(const PresentedModule& m) {
  const auto& mm = m.minimal();
  json j;
  j["beta0"] = mm.rank();
  j["beta1"] = mm.relations().size();
  j["length"] = length_json(length(mm));
  if (mm.rank() == 0) return j;
  j["twists"] = mm.twists();
  j["relation_degrees"] = mm.relation_degrees();
  std::int64_t lo = hilbert_start(mm);
  j["hilbert_from"] = lo;
  j["hilbert"] = hilbert_function(mm, lo, lo + 5);
  j["annihilator"] = annihilator(mm).gb_strings();
  json rels = json::array();
  for (const auto& c : mm.relations()) {
    json col = json::array();
    for (const auto& e : c.components()) col.push_back(e.to_string());
    rels.push_back(col);
  }
  j["relations"] = rels;
  return j;
}

std::string module_summary_text(const PresentedModule& m) {
  const auto& mm = m.minimal();
  std::ostringstream out;
  out << "beta0=" << mm.rank() << " beta1=" << mm.relations().size() << " length=" << format_length(length(mm));
  if (mm.rank() == 0) return out.str();
  std::int64_t lo = hilbert_start(mm);
  out << " twists=" << join(mm.twists()) << " hilbert[" << lo << ".." << lo + 5
      << "]=" << join(hilbert_function(mm, lo, lo + 5)) << " ann=" << annihilator(mm).to_string();
  return out.str();
}

json betti_json(const Resolution& r) {
  json j;
  j["totals"] = r.betti.totals();
  json entries = json::array();
  for (const auto& [key, count] : r.betti.entries()) entries.push_back({key.first, key.second, count});
  j["entries"] = entries;
  j["bound"] = r.betti.max_index();
  j["pd"] = r.pd ? json(*r.pd) : json(nullptr);
  j["certified"] = r.certified;
  return j;
}

json to_json(const ReportDocument& doc) {
  json j;
  j["schema"] = "homkernel/1";
  j["command"] = doc.command;
  json stmts = json::array();
  for (const auto& s : doc.statements) {
    json e;
    e["line"] = s.line;
    e["column"] = s.column;
    e["source"] = s.source;
    e["type"] = s.type;
    e["pass"] = s.pass ? json(*s.pass) : json(nullptr);
    e["payload"] = s.payload;
    e["text"] = s.text;
    e["error"] = s.error ? json(*s.error) : json(nullptr);
    stmts.push_back(std::move(e));
  }
  j["statements"] = stmts;
  std::size_t failed = 0, errors = 0;
  for (const auto& s : doc.statements) {
    failed += s.pass && !*s.pass;
    errors += s.error.has_value();
  }
  j["summary"] = {{"statements", doc.statements.size()}, {"failed", failed}, {"errors", errors},
                  {"exit_code", doc.exit_code()}};
  if (doc.seconds) j["seconds"] = *doc.seconds;
  return j;
}

ReportDocument from_json(const json& j) {
  ReportDocument doc;
  doc.command = j.at("command").get<std::string>();
  for (const auto& e : j.at("statements")) {
    StatementReport s;
    s.line = e.at("line").get<std::size_t>();
    s.column = e.at("column").get<std::size_t>();
    s.source = e.at("source").get<std::string>();
    s.type = e.at("type").get<std::string>();
    if (!e.at("pass").is_null()) s.pass = e.at("pass").get<bool>();
    s.payload = e.at("payload");
    s.text = e.at("text").get<std::vector<std::string>>();
    if (!e.at("error").is_null()) s.error = e.at("error").get<std::string>();
    doc.statements.push_back(std::move(s));
  }
  if (j.contains("seconds")) doc.seconds = j.at("seconds").get<double>();
  return doc;
}

std::string emit(const ReportDocument& doc, Format format) {
  if (format == Format::Json) return to_json(doc).dump(2) + "\n";
  std::ostringstream out;
  std::size_t failed = 0, errors = 0;
  for (const auto& s : doc.statements) {
    out << "[" << s.line << "] " << s.source << "\n";
    for (const auto& t : s.text) out << "    " << t << "\n";
    if (s.error) {
      out << "  => error: " << *s.error << "\n";
      ++errors;
    } else if (s.pass) {
      out << "  => " << (*s.pass ? "pass" : "FAIL") << "\n";
      failed += !*s.pass;
    }
  }
  out << "summary: " << doc.statements.size() << " statements, " << failed << " failed, " << errors << " errors\n";
  if (doc.seconds) out << "time: " << *doc.seconds << " s\n";
  return out.str();
}

}  // namespace homkernel
