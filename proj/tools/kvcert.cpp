#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kv/errors.hpp"
#include "kv/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "kvcert - exact certification of Koszul-Vinberg, Nijenhuis, KVN, KVB,\n"
      "complementary, pseudo-Hessian and HN structures on left-symmetric\n"
      "algebroids over flat coordinate charts"};

  std::string command, file;
  std::vector<std::string> names;
  unsigned depth = 3;
  bool machine = false, verbose = false;

  app.add_option("command", command,
                 "one of: axioms kv compatible nijenhuis kvn kvb hn hn2 "
                 "complementary hessian hierarchy dual invert derive-n")
      ->required();
  app.add_option("file", file, "structure-definition file (JSON)")->required();
  app.add_option("tensors", names, "tensor names from the file");
  app.add_option("--depth", depth, "hierarchy depth (default 3)");
  app.add_flag("--machine", machine, "machine-readable JSON report");
  app.add_flag("--verbose", verbose, "include derived tensors in the human report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    kv::InputDocument doc = kv::load(file);
    kv::RunOptions opts{depth, machine, verbose};
    kv::Report report = kv::run_command(doc, command, names, opts, file);
    std::cout << (machine ? report.machine() : report.human(verbose));
    return report.exit_code();
  } catch (const kv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
