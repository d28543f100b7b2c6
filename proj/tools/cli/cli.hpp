#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace posat::cli {

enum Exit { kSuccess = 0, kPropertyFails = 1, kUsage = 2, kTooLarge = 3 };

struct Command {
  std::string verb;

  std::string name;    // poset --name / construct --name
  std::string file;    // poset --file
  std::string poset;   // catalog key or path to poset JSON
  std::string family;  // path to family JSON
  std::string graph;   // path to graph JSON
  std::string target;  // construct --target (weaksat)
  std::string assert_property;
  std::string format = "json";
  std::string out;

  bool induced = false;
  bool dot = false;
  bool symmetry = true;
  bool theorem_pruning = true;
  bool verify = true;
  bool all_minimum = false;
  bool avoid_extremes = false;
  bool quiet = false;

  int n = 0;
  std::optional<int> k;
  std::optional<int> ell;
  int max_size = -1;
  int max_n = 5;
  int threads = 1;
  double time_limit = 0.0;
  int n_lo = 0;
  int n_hi = 0;
  int compute_up_to = 0;
};

/// Machine section (JSON, DOT or a table), human section, exit status.
struct Report {
  int exit_code = kSuccess;
  std::string machine;
  std::string human;
};

/// Raised for malformed command lines; the message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `args` excludes the program name. Help requests yield a Command with
/// verb "help" and the text in `name`.
Command parse_command(const std::vector<std::string>& args);

Report execute(const Command& c);

/// parse_command + execute, with usage errors folded into exit code 2.
Report run(const std::vector<std::string>& args);

}  // namespace posat::cli
