#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace lsplacto {

enum class OutputFormat { Json, Dot, Text };

struct CommandRequest {
  std::string subcommand;
  std::string type_label;
  int rank = 0;
  std::optional<std::string> shape; // comma-separated naturals
  std::optional<std::string> word;  // generator ids, or box digits in type A
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output; // file path; stdout when absent
  std::size_t threads = 1;
  int max_sum = 3;          // verify-dims
  std::size_t max_len = 4;  // oracle-compare
};

/// Exit codes: 0 success, 1 audit failure or mismatch, 2 usage/domain error.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int run_command(const CommandRequest &req, std::ostream &out,
                std::ostream &err);

/// Parses argv (subcommand first) and dispatches to run_command.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace lsplacto
