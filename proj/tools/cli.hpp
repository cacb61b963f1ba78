#pragma once

// Command line surface of the taumut tool. parse_args and run are kept
// separate from main so the test-suite can drive them.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taumut::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIncomplete = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;  // explore semibricks smc gvectors count verify quotient restrict
  std::optional<std::string> preset;
  std::optional<std::string> algebra_file;
  std::optional<std::size_t> max_depth;
  std::optional<std::string> field;  // "q" or "fp:<p>"
  std::optional<std::string> dot_path;
  std::optional<std::string> out_path;
  std::string format = "text";  // text, dot, records
  // count
  std::string kind = "linear";
  std::size_t n = 7;
  std::size_t l = 7;
  bool check = false;
  // quotient
  std::vector<std::string> generators;
  // restrict: summands of U by dimension vector
  std::vector<std::string> rigid;
  bool help = false;
  std::string help_text;
};

// args excludes the program name. Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

// Field from the environment (TAUMUT_FIELD) unless the command sets one.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_args + run with usage errors mapped to exit code 2.
int main_with(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taumut::cli
