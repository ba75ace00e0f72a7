#ifndef CORANK2_COMMANDS_HPP
#define CORANK2_COMMANDS_HPP

// Command implementations behind the corank2 executable. Each returns a
// report and an exit status instead of printing, so they can be tested
// directly.

#include <optional>
#include <string>

#include "corank2/document.hpp"
#include "corank2/grid.hpp"
#include "corank2/report.hpp"

namespace corank2 {

enum class ArithmeticMode { Auto, Exact, Float };
enum class OutputFormat { Text, Machine };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;     // unreadable or malformed input
inline constexpr int kExitPrecondition = 3;   // input valid but outside the command's domain

struct CommandOptions {
  std::optional<int> order;  // overrides the document's order
  ArithmeticMode mode = ArithmeticMode::Auto;
  double tolerance = 1e-9;
  GridSpec grid;
  int workers = 1;
  /// plot: output path prefix (".svg" and ".txt" are appended); batch: directory for per-document reports.
  std::string output;
};

struct CommandResult {
  int status = kExitOk;
  Json report;
};

CommandResult cmd_classify(const GermInputDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_normal_form(const GermInputDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_plot_singular_image(const GermInputDocument& doc, const CommandOptions& opts = {});
CommandResult cmd_batch(const std::string& directory, const CommandOptions& opts = {});

std::string render(const CommandResult& result, OutputFormat format);

}  // namespace corank2

#endif  // CORANK2_COMMANDS_HPP
