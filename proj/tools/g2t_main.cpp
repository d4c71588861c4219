// Batch driver: parse a .g2t model file and execute its task list.
// Exit status: 0 all verdicts pass, 1 some verdict failed, 2 parse or
// usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "g2t/model.hpp"
#include "g2t/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact workbench for differential forms on Lie algebras: "
      "Chevalley-Eilenberg calculus, G2 spinor pairs, twisted "
      "integrability, and abelian T-duality of admissible triples"};

  std::string model_path;
  g2t::RunOptions opt;
  app.add_option("model,--model", model_path, "Model file (.g2t)");
  app.add_flag("--json", opt.json, "Emit one JSON report document");
  app.add_option("--task", opt.task_filter,
                 "Run only tasks with this command name");
  app.add_flag("--verbose", opt.verbose, "Print solution bases in full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; bad flags are usage errors
  }

  if (model_path.empty()) {
    std::cerr << "error: no model file given (try --help)\n";
    return 2;
  }
  std::ifstream in(model_path);
  if (!in) {
    std::cerr << "error: cannot open '" << model_path << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    g2t::ModelFile model = g2t::parse_model(buf.str());
    return g2t::run_model(model, opt, std::cout, std::cerr);
  } catch (const g2t::ParseError& e) {
    std::cerr << "error: " << model_path << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
