#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2t/lie_algebra.hpp"

namespace g2t {

/// Syntax or semantic error in a model file, carrying the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Parsed .g2t model: named algebras, forms, fibers and an ordered task
/// list. Grammar (one declaration per line, '#' starts a comment):
///   algebra NAME dim N
///     d e<k> = <form literal>          (covector differentials)  -- or --
///     bracket [i,j] = <vector literal> (structure constants, i < j)
///   form NAME on ALGEBRA = <form literal>     ("0" for the zero form)
///   fiber NAME on ALGEBRA = span(e<i>, ...)
///   task COMMAND ARGS...
/// An algebra block uses either d-lines or bracket-lines, never both.
struct ModelFile {
  enum class AlgebraStyle { kDifferentials, kBrackets };

  struct AlgebraDecl {
    std::string name;
    LieAlgebra algebra;
    AlgebraStyle style = AlgebraStyle::kDifferentials;
  };
  struct FormDecl {
    std::string name;
    std::string algebra;
    Form value;

    FormDecl() : value(Form::zero(1)) {}
  };
  struct FiberDecl {
    std::string name;
    std::string algebra;
    SpanIdeal fiber;
  };
  struct Task {
    int line = 0;
    std::string command;
    std::vector<std::string> args;
  };

  std::vector<AlgebraDecl> algebras;
  std::vector<FormDecl> forms;
  std::vector<FiberDecl> fibers;
  std::vector<Task> tasks;

  [[nodiscard]] const AlgebraDecl* find_algebra(const std::string& n) const;
  [[nodiscard]] const FormDecl* find_form(const std::string& n) const;
  [[nodiscard]] const FiberDecl* find_fiber(const std::string& n) const;
};

ModelFile parse_model(const std::string& text);

/// Canonical text for a model; parse(print(parse(x))) == parse(x), and
/// printing is a fixed point (print . parse . print = print).
std::string print_model(const ModelFile& m);

}  // namespace g2t
