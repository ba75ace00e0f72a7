#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "corank2/commands.hpp"

using namespace corank2;

namespace {

struct Flags {
  int order = 0;
  std::string mode = "auto";
  double tolerance = 1e-9;
  double window = 0.5;
  int resolution = 400;
  int workers = 1;
  std::string format = "text";
  std::string output;
  std::string input;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--order", f.order, "truncation order (overrides the document)")->check(CLI::Range(1, 12));
  sub->add_option("--mode", f.mode, "arithmetic: auto, exact or float")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  sub->add_option("--tolerance", f.tolerance, "zero tolerance on the floating path")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", f.format, "report format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
}

CommandOptions to_options(const Flags& f) {
  CommandOptions o;
  if (f.order > 0) o.order = f.order;
  o.mode = f.mode == "exact" ? ArithmeticMode::Exact : f.mode == "float" ? ArithmeticMode::Float : ArithmeticMode::Auto;
  o.tolerance = f.tolerance;
  o.grid.window = f.window;
  o.grid.resolution = f.resolution;
  o.workers = f.workers;
  o.output = f.output;
  return o;
}

int emit(const CommandResult& r, const Flags& f) {
  const OutputFormat fmt = f.format == "machine" ? OutputFormat::Machine : OutputFormat::Text;
  if (r.status != kExitOk && fmt == OutputFormat::Text) {
    std::cerr << "error: " << r.report.value("error", "unknown error") << '\n';
  } else {
    std::cout << render(r, fmt);
  }
  return r.status;
}

template <class Cmd>
int run_on_file(Cmd cmd, const Flags& f) {
  GermInputDocument doc;
  try {
    doc = read_document_file(f.input);
  } catch (const DocumentError& e) {
    return emit({kExitInputError, Json{{"schema", kReportSchema}, {"error", e.what()}}}, f);
  }
  return emit(cmd(doc, to_options(f)), f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize sharksfin and deltoid singularities of plane-to-plane map germs"};
  app.require_subcommand(1);
  Flags f;

  auto* classify = app.add_subcommand("classify", "classify a germ, umbrella projection or motion trajectory");
  classify->add_option("input", f.input, "input document")->required();
  add_common(classify, f);

  auto* nf = app.add_subcommand("normal-form", "SO(2) normal form and cusp invariants");
  nf->add_option("input", f.input, "input document")->required();
  add_common(nf, f);

  auto* plot = app.add_subcommand("plot", "draw the image of the singular set");
  plot->add_option("input", f.input, "input document")->required();
  add_common(plot, f);
  plot->add_option("--window", f.window, "half-width of the source window");
  plot->add_option("--resolution", f.resolution, "grid nodes per side");
  plot->add_option("--workers", f.workers, "threads for the grid kernels")->check(CLI::Range(1, 1024));
  plot->add_option("--output", f.output, "output prefix; writes PREFIX.svg and PREFIX.txt")->required();

  auto* batch = app.add_subcommand("batch", "classify every document in a directory");
  batch->add_option("directory", f.input, "directory of documents")->required();
  add_common(batch, f);
  batch->add_option("--workers", f.workers, "concurrent documents")->check(CLI::Range(1, 1024));
  batch->add_option("--output", f.output, "directory for per-document reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*classify) return run_on_file(cmd_classify, f);
  if (*nf) return run_on_file(cmd_normal_form, f);
  if (*plot) return run_on_file(cmd_plot_singular_image, f);
  return emit(cmd_batch(f.input, to_options(f)), f);
}
