#ifndef HOMKERNEL_SCRIPT_HPP
#define HOMKERNEL_SCRIPT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homkernel {

struct Span {
  std::size_t offset = 0, end = 0;
  std::size_t line = 1, column = 1;
};

/// Raw polynomial text, checked against its ring's variables while parsing
/// and re-read against the actual ring when the script runs.
struct PolyText {
  std::string text;
  Span span;
};

enum class ValueKind { Ring, Ideal, Module, Resolution, Integer, Length, IntList, LengthList, Bool };
std::string to_string(ValueKind k);

struct Expr {
  /// "var", "int", "inf", "bool", "list", or a builtin name.
  std::string op;
  std::string name;
  std::int64_t number = 0;
  std::vector<std::optional<std::int64_t>> list;  ///< nullopt entries are "inf"
  std::vector<Expr> args;
  std::vector<PolyText> polys;
  ValueKind kind = ValueKind::Integer;
  std::string ring;  ///< ring identifier the value lives over, empty for plain values
  Span span;
  std::string text;
};

struct Family {
  bool cyclic = true;
  std::int64_t degree = 0;
  std::int64_t gens = 2;
  std::vector<Expr> members;
};

struct Expectation {
  bool exhausted = true;
  std::vector<PolyText> ideal;    ///< witness R/(ideal) for cyclic families
  std::optional<Expr> module;     ///< witness module for explicit families
  std::optional<std::int64_t> index;
};

struct Statement {
  enum class Type { Ring, Ideal, Module, Let, Print, Check, Search, Assert };
  Type type;
  Span span;
  std::string text;
  std::string id;

  // ring
  bool rationals = false;
  std::int64_t prime = 0;
  std::vector<std::string> vars;
  std::vector<std::int32_t> weights;
  // ring quotient, ideal generators, check/search polynomial lists
  std::vector<PolyText> polys;
  // ideal/module ring
  std::string ring;
  // module
  std::vector<std::int64_t> twists;
  std::vector<std::vector<PolyText>> columns;

  // let / print / assert lhs
  std::optional<Expr> expr;
  std::optional<Expr> rhs;
  // check / search
  std::string command;
  std::vector<Expr> args;
  std::vector<std::int64_t> ints;
  std::optional<Family> family;
  std::optional<std::int64_t> imax;
  std::optional<Expectation> expect;
};

struct Script {
  std::vector<Statement> statements;
};

/// Throws Error with kind ParseError, UndeclaredIdentifier or TypeMismatch;
/// messages start with "line:column:".
Script parse_script(std::string_view text);

}  // namespace homkernel

#endif
