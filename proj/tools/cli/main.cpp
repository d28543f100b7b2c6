#include <fstream>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  posat::cli::Command parsed;
  posat::cli::Report report;
  try {
    parsed = posat::cli::parse_command(args);
    report = posat::cli::execute(parsed);
  } catch (const posat::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for the list of verbs.\n";
    return posat::cli::kUsage;
  }

  if (!report.machine.empty()) {
    if (parsed.out.empty()) {
      std::cout << report.machine;
    } else {
      std::ofstream out(parsed.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << parsed.out << "'\n";
        return posat::cli::kUsage;
      }
      out << report.machine;
    }
  }
  if (!parsed.quiet || report.exit_code != posat::cli::kSuccess) std::cerr << report.human;
  return report.exit_code;
}
