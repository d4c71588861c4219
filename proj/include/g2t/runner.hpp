#pragma once

#include <iosfwd>
#include <string>

#include "g2t/model.hpp"

namespace g2t {

struct RunOptions {
  bool json = false;
  bool verbose = false;
  std::string task_filter;  // run only tasks with this command; empty = all
};

/// Executes the model's tasks in order. Reports go to out (human text, or
/// one JSON document with --json), diagnostics to err.
/// Returns the process exit status: 0 when every executed verdict passed,
/// 1 when some verdict failed, 2 on a usage/semantic error in a task line
/// (unknown name, wrong argument count, missing context).
int run_model(const ModelFile& model, const RunOptions& opt,
              std::ostream& out, std::ostream& err);

}  // namespace g2t
