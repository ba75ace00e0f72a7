#include "corank2/commands.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "corank2/applications.hpp"
#include "corank2/normalform.hpp"

namespace corank2 {

namespace {

namespace fs = std::filesystem;

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool use_exact(const GermInputDocument& doc, const CommandOptions& opts) {
  switch (opts.mode) {
    case ArithmeticMode::Exact:
      if (doc.floating()) throw PreconditionError("exact mode needs rational inputs; the document has decimals");
      return true;
    case ArithmeticMode::Float: return false;
    case ArithmeticMode::Auto: return !doc.floating();
  }
  return true;
}

int effective_order(const GermInputDocument& doc, const CommandOptions& opts) {
  const int n = opts.order.value_or(doc.order);
  if (n < 1 || n > 12) throw PreconditionError("order must be between 1 and 12");
  return n;
}

Json header(const char* command, const GermInputDocument& doc, bool exact, int order, double tol) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["input"] = {{"mode", to_string(doc.mode)}, {"order", order}, {"arithmetic", exact ? "exact" : "floating"}};
  if (!exact) j["input"]["tolerance"] = tol;
  return j;
}

MapJet2<QuadScalar> document_jet(const GermInputDocument& doc, int order) {
  switch (doc.mode) {
    case DocumentMode::Germ: return germ_jet(doc, order);
    case DocumentMode::Umbrella: return whitney_direct_jet(umbrella_form(doc), order);
    case DocumentMode::Motion: return motion_trajectory_jet(motion_spec(doc), order);
  }
  throw PreconditionError("unknown document mode");
}

Json jet_terms(const MapJet2<double>& f, double tol) {
  Json terms = Json::array();
  for (int c = 0; c < 2; ++c) {
    const Jet2<double>& g = f[c];
    for (int d = 0; d <= g.order(); ++d)
      for (int j = 0; j <= d; ++j) {
        const double x = g.coeff(d - j, j);
        if (std::abs(x) <= 1e-15) continue;
        terms.push_back({{"component", c + 1}, {"i", d - j}, {"j", j}, {"value", floating_number(x, tol)}});
      }
  }
  return terms;
}

// Per-branch cusp data and labeled invariants for index-1 classifications.
template <class S>
void add_cusps(Json& report, const MapJet2<S>& f, const HessianData<S>& h, const QuadricRoots<S>& roots,
               double tol) {
  if (h.index != HessianIndex::IndexOne || f.order() < 4) return;
  try {
    const BranchPair<S> branches = branch_curves(jacobian_identifier(f), roots);
    const auto [c1, c2] = branch_image_cusps(f, branches);
    Json cusps;
    cusps["branches"] = Json::array({cusp_json(c1, tol), cusp_json(c2, tol)});
    if (c1.is_cusp && c2.is_cusp) {
      ClassifyOptions copts;
      copts.tolerance = tol;
      cusps["invariants"] = invariants_json(direct_cusp_invariants(f, copts).canonical(), tol);
    }
    report["cusps"] = cusps;
  } catch (const std::exception& e) {
    report["cusps"] = {{"error", e.what()}};
  }
}

Json mixed_json(const MixedValue& v, bool exact, double tol) {
  if (exact && v.exact) return exact_number(*v.exact);
  return floating_number(v.approx, tol);
}

Json germ_classify(const GermInputDocument& doc, bool exact, int order, double tol) {
  Json r = header("classify", doc, exact, order, tol);
  const MapJet2<QuadScalar> f = germ_jet(doc, order);
  if (exact) {
    const auto c = classify_germ(f);
    r.update(classification_json(c, tol));
    if (c.hessian && c.roots) add_cusps(r, f, *c.hessian, *c.roots, tol);
  } else {
    ClassifyOptions copts;
    copts.tolerance = tol;
    const auto c = classify_germ(to_complex(f), copts);
    r.update(classification_json(c, tol));
    if (c.hessian && c.hessian->index == HessianIndex::IndexOne) {
      const MapJet2<double> fd = to_double(f);
      try {
        const auto h = hessian_at_origin(jacobian_identifier(fd), copts);
        add_cusps(r, fd, h, hesse_quadric_roots(h, copts), tol);
      } catch (const std::exception& e) {
        r["cusps"] = {{"error", e.what()}};
      }
    }
  }
  return r;
}

Json umbrella_classify(const GermInputDocument& doc, bool exact, int order, double tol) {
  Json r = header("classify", doc, exact, order, tol);
  const UmbrellaForm w = umbrella_form(doc);
  UmbrellaVerdict v;
  try {
    v = whitney_project_classify(w);
  } catch (const std::exception& e) {
    throw PreconditionError(e.what());
  }
  const MapJet2<QuadScalar> jet = whitney_direct_jet(w, order);
  Json witnesses;
  if (v.type == UmbrellaType::Elliptic) {
    witnesses["delta_plus"] = mixed_json(v.first, exact, tol);
    witnesses["delta_minus"] = mixed_json(v.second, exact, tol);
    witnesses["product"] = exact ? exact_number(*v.product) : floating_number(v.product->get_d(), tol);
  } else {
    witnesses["first"] = mixed_json(v.first, exact, tol);
    witnesses["second"] = mixed_json(v.second, exact, tol);
  }
  Json direct;
  Verdict direct_verdict;
  if (exact) {
    const auto c = classify_germ(jet);
    direct = classification_json(c, tol);
    direct_verdict = c.verdict;
  } else {
    ClassifyOptions copts;
    copts.tolerance = tol;
    const auto c = classify_germ(to_complex(jet), copts);
    direct = classification_json(c, tol);
    direct_verdict = c.verdict;
  }
  const Verdict verdict = exact ? v.verdict : direct_verdict;
  r["verdict"] = to_string(verdict);
  r["umbrella"] = {{"type", to_string(v.type)}, {"witnesses", witnesses}};
  r["direct_jet"] = direct;
  r["cross_check"] = {{"closed_form", to_string(v.verdict)}, {"direct", to_string(direct_verdict)},
                      {"agrees", v.verdict == direct_verdict}};
  return r;
}

Json motion_classify_report(const GermInputDocument& doc, bool exact, int order, double tol) {
  Json r = header("classify", doc, exact, order, tol);
  const MotionSpec m = motion_spec(doc);
  const MotionVerdict mv = motion_classify(m);
  const MapJet2<QuadScalar> jet = motion_trajectory_jet(m, order);
  auto num = [&](const Rational& q) { return exact ? exact_number(q) : floating_number(q.get_d(), tol); };
  Json direct;
  Verdict direct_verdict;
  if (exact) {
    const auto c = classify_germ(jet);
    direct = classification_json(c, tol);
    direct_verdict = c.verdict;
  } else {
    ClassifyOptions copts;
    copts.tolerance = tol;
    const auto c = classify_germ(to_complex(jet), copts);
    direct = classification_json(c, tol);
    direct_verdict = c.verdict;
  }
  r["verdict"] = to_string(exact ? mv.verdict : direct_verdict);
  r["motion"] = {{"determinants", Json::array({num(mv.det_pq), num(mv.det_p), num(mv.det_q)})},
                 {"translation_cusp_determinant", num(motion_translation_cusp_determinant(m))}};
  r["direct_jet"] = direct;
  r["cross_check"] = {{"closed_form", to_string(mv.verdict)}, {"direct", to_string(direct_verdict)},
                      {"agrees", mv.verdict == direct_verdict}};
  return r;
}

template <class F>
CommandResult guarded(F&& body) {
  CommandResult out;
  try {
    out.report = body();
  } catch (const PreconditionError& e) {
    out.status = kExitPrecondition;
    out.report = {{"schema", kReportSchema}, {"error", e.what()}};
  } catch (const NotRankZeroError& e) {
    out.status = kExitPrecondition;
    out.report = {{"schema", kReportSchema}, {"error", e.what()}};
  } catch (const DegenerateHessianError& e) {
    out.status = kExitPrecondition;
    out.report = {{"schema", kReportSchema}, {"error", e.what()}};
  } catch (const DocumentError& e) {
    out.status = kExitInputError;
    out.report = {{"schema", kReportSchema}, {"error", e.what()}};
  } catch (const JetError& e) {
    out.status = kExitPrecondition;
    out.report = {{"schema", kReportSchema}, {"error", e.what()}};
  }
  return out;
}

}  // namespace

CommandResult cmd_classify(const GermInputDocument& doc, const CommandOptions& opts) {
  return guarded([&] {
    const bool exact = use_exact(doc, opts);
    const int order = effective_order(doc, opts);
    if (order < 3) throw PreconditionError("classification needs order >= 3");
    switch (doc.mode) {
      case DocumentMode::Germ: return germ_classify(doc, exact, order, opts.tolerance);
      case DocumentMode::Umbrella: return umbrella_classify(doc, exact, order, opts.tolerance);
      case DocumentMode::Motion: return motion_classify_report(doc, exact, order, opts.tolerance);
    }
    throw PreconditionError("unknown document mode");
  });
}

CommandResult cmd_normal_form(const GermInputDocument& doc, const CommandOptions& opts) {
  return guarded([&] {
    const int order = effective_order(doc, opts);
    if (order < 3) throw PreconditionError("normal form needs order >= 3");
    const double tol = opts.tolerance;
    // The pipeline itself is floating; the input may still be exact.
    Json r = header("normal-form", doc, false, order, tol);
    const MapJet2<double> f = to_double(document_jet(doc, order));
    NormalFormOptions nopts;
    nopts.tolerance = tol;
    const So2NormalForm nf = so2_normal_form(f, nopts);
    Json n;
    n["a20"] = floating_number(nf.a20, tol);
    n["eps1"] = nf.eps1;
    n["eps2"] = nf.eps2;
    n["a30"] = floating_number(nf.a30, tol);
    n["a03"] = floating_number(nf.a03, tol);
    n["type"] = nf.sharksfin() ? "Sharksfin" : "Deltoid";
    n["alternate_root"] = nf.alternate_root;
    n["rotation"] = floating_number(nf.rotation, tol);
    n["residual"] = jet_terms(nf.residual, tol);
    Json log = Json::array();
    for (const auto& step : nf.log) {
      Json s{{"step", step.name}};
      if (step.rotation != 0.0) {
        s["rotation"] = floating_number(step.rotation, tol);
      } else {
        s["source"] = jet_terms(step.source, tol);
      }
      log.push_back(s);
    }
    n["transform_log"] = log;
    r["normal_form"] = n;
    if (nf.sharksfin()) {
      r["invariants"] = invariants_json(so2_invariants(nf).canonical(), tol);
      try {
        ClassifyOptions copts;
        copts.tolerance = tol;
        r["direct_invariants"] = invariants_json(direct_cusp_invariants(f, copts).canonical(), tol);
      } catch (const std::exception& e) {
        r["direct_invariants"] = {{"error", e.what()}};
      }
    }
    if (doc.mode == DocumentMode::Umbrella) {
      const UmbrellaWCoefficients w = umbrella_projection_w_coeffs(umbrella_form(doc));
      r["w_coefficients"] = {{"w1", floating_number(w.w1, tol)},
                             {"w2", floating_number(w.w2, tol)},
                             {"w3", floating_number(w.w3, tol)},
                             {"cot_theta", floating_number(w.cot_theta, tol)},
                             {"alternate_root", w.alternate_root}};
    }
    return r;
  });
}

CommandResult cmd_plot_singular_image(const GermInputDocument& doc, const CommandOptions& opts) {
  return guarded([&] {
    try {
      validate(opts.grid);
    } catch (const std::exception& e) {
      throw PreconditionError(e.what());
    }
    const int order = effective_order(doc, opts);
    const bool exact = use_exact(doc, opts);
    const double tol = opts.tolerance;
    Json r = header("plot", doc, exact, order, tol);
    const MapJet2<QuadScalar> fq = document_jet(doc, order);
    const MapJet2<double> f = to_double(fq);
    const Jet2<double> lambda = jacobian_identifier(f).lambda;

    const ScalarGrid grid = opts.workers > 1 ? evaluate_grid_parallel(lambda, opts.grid, opts.workers)
                                             : evaluate_grid_serial(lambda, opts.grid);
    const std::vector<Polyline> source_lines =
        opts.workers > 1 ? marching_squares_parallel(grid, opts.workers) : marching_squares_serial(grid);

    PlotScene scene;
    scene.lines = map_polylines(f, source_lines);
    Verdict verdict = Verdict::NotRecognized;
    if (order >= 3) {
      ClassifyOptions copts;
      copts.tolerance = tol;
      verdict = exact ? classify_germ(fq).verdict : classify_germ(to_complex(fq), copts).verdict;
      if (verdict == Verdict::Sharksfin && order >= 4) {
        try {
          const auto h = hessian_at_origin(jacobian_identifier(f), copts);
          const auto [c1, c2] = branch_image_cusps(f, branch_curves(jacobian_identifier(f), hesse_quadric_roots(h, copts)));
          for (const auto* c : {&c1, &c2}) {
            if (c->is_cusp) scene.arrows.push_back({{0.0, 0.0}, c->direction});
          }
        } catch (const std::exception&) {
          // arrows are decoration only
        }
      }
      if (verdict == Verdict::Deltoid) {
        scene.isolated_point = true;
        scene.note = "deltoid: the image of the singular set is the single point f(0) at jet level";
      }
    }
    scene.title = "singular image, verdict " + to_string(verdict);
    std::size_t points = 0;
    for (const auto& l : scene.lines) points += l.size();
    r["verdict"] = to_string(verdict);
    r["plot"] = {{"window", opts.grid.window},
                 {"resolution", opts.grid.resolution},
                 {"polylines", scene.lines.size()},
                 {"points", points},
                 {"cusp_arrows", scene.arrows.size()},
                 {"isolated_point", scene.isolated_point}};
    if (!opts.output.empty()) {
      const std::string svg = opts.output + ".svg", txt = opts.output + ".txt";
      std::ofstream(svg) << render_svg(scene);
      std::ofstream(txt) << render_polylines(scene.lines);
      r["plot"]["files"] = Json::array({svg, txt});
    }
    return r;
  });
}

CommandResult cmd_batch(const std::string& directory, const CommandOptions& opts) {
  CommandResult out;
  std::vector<fs::path> files;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    out.status = kExitInputError;
    out.report = {{"schema", kReportSchema}, {"error", "not a readable directory: " + directory}};
    return out;
  }
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (!name.empty() && name[0] == '.') continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  std::vector<CommandResult> results(files.size());
  const int n = static_cast<int>(files.size());
  const int workers = std::max(1, opts.workers);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int k = 0; k < n; ++k) {
    CommandResult res;
    try {
      res = cmd_classify(read_document_file(files[static_cast<std::size_t>(k)].string()), opts);
    } catch (const DocumentError& e) {
      res.status = kExitInputError;
      res.report = {{"schema", kReportSchema}, {"error", e.what()}};
    } catch (const std::exception& e) {
      res.status = kExitPrecondition;
      res.report = {{"schema", kReportSchema}, {"error", e.what()}};
    }
    results[static_cast<std::size_t>(k)] = std::move(res);
  }

  if (!opts.output.empty()) fs::create_directories(opts.output);
  Json entries = Json::array();
  std::map<std::string, int> counts;
  int errors = 0;
  for (std::size_t k = 0; k < files.size(); ++k) {
    const std::string name = files[k].filename().string();
    const CommandResult& res = results[k];
    Json e{{"file", name}, {"status", res.status}};
    if (res.status == kExitOk) {
      const std::string v = res.report.value("verdict", "?");
      e["verdict"] = v;
      ++counts[v];
    } else {
      e["error"] = res.report.value("error", "unknown error");
      ++errors;
    }
    e["report"] = res.report;
    entries.push_back(e);
    if (!opts.output.empty()) std::ofstream(fs::path(opts.output) / (name + ".json")) << render_machine(res.report);
  }
  Json histogram = Json::object();
  for (Verdict v : {Verdict::Sharksfin, Verdict::Deltoid, Verdict::DegenerateHessian, Verdict::NotRecognized,
                    Verdict::NotRankZero}) {
    const auto it = counts.find(to_string(v));
    if (it != counts.end()) histogram[to_string(v)] = it->second;
  }
  out.report = {{"schema", kReportSchema},
                {"command", "batch"},
                {"documents", files.size()},
                {"errors", errors},
                {"histogram", histogram},
                {"results", entries}};
  return out;
}

std::string render(const CommandResult& result, OutputFormat format) {
  return format == OutputFormat::Machine ? render_machine(result.report) : render_text(result.report);
}

}  // namespace corank2
