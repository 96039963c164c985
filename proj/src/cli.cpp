#include "bowvar/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bowvar/butterfly.hpp"
#include "bowvar/curves.hpp"
#include "bowvar/diagram.hpp"
#include "bowvar/error.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/json_io.hpp"
#include "bowvar/selftest.hpp"
#include "bowvar/tangent.hpp"
#include "bowvar/weights.hpp"

namespace bowvar {
namespace {

using nlohmann::json;

constexpr const char* kDiagramHelp =
    "Brane diagram, e.g. \"/2\\2/1\\\".  '/' is an NS5 brane, '\\' a D5 brane "
    "(shell-friendly aliases: 's' for '/', 'b' for '\\'); the integers are the "
    "segment multiplicities, outer segments are implicitly 0.";

std::string point_name(const std::vector<Bct>& points, std::size_t idx, bool use_label) {
  if (use_label && idx < points.size()) {
    if (auto label = subset_label(points[idx])) return *label;
  }
  return std::to_string(idx + 1);
}

void print_margins(std::ostream& out, const Margins& m) {
  out << "row charges:";
  for (i64 r : m.row) out << ' ' << r;
  out << "\ncol charges:";
  for (i64 c : m.col) out << ' ' << c;
  out << '\n';
}

void print_bct(std::ostream& out, const Bct& b) {
  for (int i = 0; i < b.rows; ++i) {
    out << "   ";
    for (int j = 0; j < b.cols; ++j) out << ' ' << static_cast<int>(b.at(i, j));
    out << '\n';
  }
}

void print_sigma(std::ostream& out, const std::vector<int>& sigma) {
  out << "sigma:";
  for (int s : sigma) out << ' ' << s;
  out << '\n';
}

json label_field(const std::vector<Bct>& points, std::size_t idx) {
  if (auto label = subset_label(points[idx])) return *label;
  return nullptr;
}

// Resolves a --fixed-point value to a 0-based index.  Plain mode takes the
// canonical 1-based enumeration index; with --label a subset alias such as
// "13" is matched first (available only when the aliases exist at all).
std::size_t resolve_point(const std::vector<Bct>& points, const std::string& selector,
                          bool use_label) {
  if (use_label) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (auto label = subset_label(points[i]); label && *label == selector) return i;
    }
  }
  std::size_t index = 0;
  try {
    std::size_t consumed = 0;
    index = std::stoull(selector, &consumed);
    if (consumed != selector.size()) throw std::invalid_argument(selector);
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedDiagram,
                "--fixed-point expects a 1-based index or 'all'" +
                    std::string(use_label ? " or a subset alias" : "") + ", got '" + selector +
                    "'");
  }
  if (index < 1 || index > points.size()) {
    throw Error(ErrorKind::MalformedDiagram,
                "fixed point index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(points.size()));
  }
  return index - 1;
}

int cmd_parse(const std::string& text, const std::string& format, std::ostream& out) {
  const BraneDiagram d = parse_diagram(text);
  const Margins m = charges(d);
  // The separated form is a convenience extra here: a syntactically valid
  // diagram can still refuse separation (a transition would need a negative
  // multiplicity), and that must not stop the echo of diagram and charges.
  std::optional<HwTrace> trace;
  std::string separate_note;
  try {
    trace = separate(d);
  } catch (const Error& e) {
    separate_note = e.what();
  }
  if (format == "json") {
    json j{{"diagram", format_diagram(d)},
           {"ns5", d.ns5_count()},
           {"d5", d.d5_count()},
           {"multiplicities", d.mult},
           {"row_charges", m.row},
           {"col_charges", m.col},
           {"separated", trace ? json(format_diagram(trace->separated)) : json(nullptr)},
           {"sigma", trace ? json(trace->sigma) : json(nullptr)}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "diagram: " << format_diagram(d) << '\n';
  out << "branes: " << d.ns5_count() << " NS5, " << d.d5_count() << " D5\n";
  out << "multiplicities:";
  for (i64 x : d.mult) out << ' ' << x;
  out << '\n';
  print_margins(out, m);
  if (trace) {
    out << "separated: " << format_diagram(trace->separated) << '\n';
    print_sigma(out, trace->sigma);
  } else {
    out << "separated: none (" << separate_note << ")\n";
  }
  return 0;
}

int cmd_fixed_points(const std::string& text, const std::string& format, bool use_label,
                     std::ostream& out) {
  const BraneDiagram d = parse_diagram(text);
  const Margins m = charges(d);
  const FixedPointSet fps = enumerate_fixed_points(m);
  if (format == "json") {
    json points = json::array();
    for (std::size_t i = 0; i < fps.points.size(); ++i) {
      json entry;
      to_json(entry, fps.points[i]);
      entry["index"] = i + 1;
      entry["label"] = label_field(fps.points, i);
      points.push_back(std::move(entry));
    }
    json j{{"diagram", format_diagram(d)},
           {"row_charges", m.row},
           {"col_charges", m.col},
           {"count", fps.points.size()},
           {"diagnostic", fps.diagnostic ? json(*fps.diagnostic) : json(nullptr)},
           {"points", std::move(points)}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "diagram: " << format_diagram(d) << '\n';
  print_margins(out, m);
  out << "fixed points: " << fps.points.size() << '\n';
  if (fps.diagnostic) out << "note: " << *fps.diagnostic << '\n';
  for (std::size_t i = 0; i < fps.points.size(); ++i) {
    out << "point " << (i + 1);
    if (use_label) {
      if (auto label = subset_label(fps.points[i])) out << " (" << *label << ')';
    }
    out << ":\n";
    print_bct(out, fps.points[i]);
  }
  return 0;
}

int cmd_weights(const std::string& text, const std::string& selector, bool oracle,
                const std::string& format, bool use_label, std::ostream& out,
                std::ostream& err) {
  const BraneDiagram d = parse_diagram(text);
  const FixedPointSet fps = enumerate_fixed_points(charges(d));
  const std::vector<int> sigma = separate(d).sigma;
  std::vector<std::size_t> selected;
  if (selector == "all") {
    for (std::size_t i = 0; i < fps.points.size(); ++i) selected.push_back(i);
  } else {
    selected.push_back(resolve_point(fps.points, selector, use_label));
  }

  json jpoints = json::array();
  if (format != "json") {
    out << "diagram: " << format_diagram(d) << '\n';
    out << "fixed points: " << fps.points.size() << '\n';
  }
  for (std::size_t idx : selected) {
    const std::vector<Weight> weights = tangent_weights_twisted(fps.points[idx], sigma);
    if (oracle) {
      const ButterflyDiagram bd = build_butterfly_diagram(bct_to_ties(d, fps.points[idx]));
      const std::vector<Weight> independent = weights_of(tangent_class_oracle(bd));
      if (independent != weights) {
        err << "oracle mismatch at fixed point " << (idx + 1)
            << ": the butterfly tangent class and the pair formula disagree\n";
        return 3;
      }
    }
    if (format == "json") {
      json entry{{"index", idx + 1},
                 {"label", label_field(fps.points, idx)},
                 {"weights", weights}};
      jpoints.push_back(std::move(entry));
    } else {
      out << "point " << point_name(fps.points, idx, use_label) << ": " << weights.size()
          << " weights\n";
      for (const Weight& w : weights) out << "    " << to_string(w) << '\n';
    }
  }
  if (format == "json") {
    json j{{"diagram", format_diagram(d)},
           {"count", fps.points.size()},
           {"oracle_checked", oracle},
           {"points", std::move(jpoints)}};
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_curves(const std::string& text, const std::string& selector, const std::string& format,
               bool use_label, std::ostream& out) {
  const BraneDiagram d = parse_diagram(text);
  const HwTrace trace = separate(d);
  const FixedPointSet fps = enumerate_fixed_points(charges(d));
  const std::size_t idx = resolve_point(fps.points, selector, use_label);
  const ClassifiedCurves cc = classify_curves(fps.points[idx], &fps.points);
  if (format == "json") {
    json j;
    to_json(j, cc);
    j["diagram"] = format_diagram(d);
    j["separated"] = format_diagram(trace.separated);
    j["sigma"] = trace.sigma;
    j["index"] = idx + 1;
    j["label"] = label_field(fps.points, idx);
    j["frame"] = "separated";
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "diagram: " << format_diagram(d) << '\n';
  out << "separated: " << format_diagram(trace.separated) << '\n';
  print_sigma(out, trace.sigma);
  out << "point " << point_name(fps.points, idx, use_label)
      << " (weights below are in the separated frame)\n";
  out << "curves: " << cc.curves.size() << '\n';
  for (const Curve& c : cc.curves) {
    out << "  type " << to_string(c.type) << "  weight " << to_string(c.weight) << "  "
        << (c.compact ? "compact" : "noncompact");
    if (c.endpoint) {
      out << "  endpoint " << point_name(fps.points, *c.endpoint, use_label);
    }
    if (c.type == CurveType::III) {
      out << "  columns (" << c.type3_col_small << ',' << c.type3_col_big << ") step "
          << c.type3_step;
    }
    out << '\n';
  }
  out << "blocked: " << cc.blocked.size() << '\n';
  for (const BlockedRecord& b : cc.blocked) {
    out << "  pair row " << b.pair.row << " cols (" << b.pair.col_small << ','
        << b.pair.col_big << "): available " << b.available << ", required " << b.required
        << '\n';
  }
  return 0;
}

int cmd_skeleton(const std::string& text, const std::string& format, bool use_label,
                 bool parallel, std::ostream& out) {
  const BraneDiagram d = parse_diagram(text);
  const Skeleton sk =
      skeleton(d, parallel ? ExecutionPolicy::Parallel : ExecutionPolicy::Serial);
  if (format == "json") {
    json j;
    to_json(j, sk);
    out << j.dump(2) << '\n';
    return 0;
  }
  if (format == "dot") {
    out << dot_skeleton(sk);
    return 0;
  }
  out << "diagram: " << format_diagram(sk.original) << '\n';
  out << "separated: " << format_diagram(sk.separated) << '\n';
  print_sigma(out, sk.sigma);
  out << "fixed points: " << sk.fixed_points.size() << '\n';
  out << "edges: " << sk.edges.size() << '\n';
  for (const SkeletonEdge& e : sk.edges) {
    out << "  " << point_name(sk.fixed_points, e.p1, use_label) << " -- "
        << point_name(sk.fixed_points, e.p2, use_label) << "  dim " << e.pencil_dim << "  w1 "
        << to_string(e.w1) << "  w2 " << to_string(e.w2) << '\n';
  }
  out << "rays: " << sk.rays.size() << '\n';
  for (const SkeletonRay& r : sk.rays) {
    out << "  " << point_name(sk.fixed_points, r.p, use_label) << "  dim " << r.pencil_dim
        << "  w " << to_string(r.w) << "  types ";
    for (std::size_t i = 0; i < r.types.size(); ++i) {
      if (i) out << ',';
      out << to_string(r.types[i]);
    }
    out << '\n';
  }
  return 0;
}

int cmd_separate(const std::string& text, const std::string& format, std::ostream& out) {
  const BraneDiagram d = parse_diagram(text);
  const HwTrace trace = separate(d);
  if (format == "json") {
    json steps = json::array();
    for (const HwStepRecord& s : trace.steps) {
      steps.push_back(
          json{{"position", s.position}, {"old_mult", s.old_mult}, {"new_mult", s.new_mult}});
    }
    json j{{"diagram", format_diagram(d)},
           {"separated", format_diagram(trace.separated)},
           {"sigma", trace.sigma},
           {"steps", std::move(steps)}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "diagram: " << format_diagram(d) << '\n';
  out << "separated: " << format_diagram(trace.separated) << '\n';
  print_sigma(out, trace.sigma);
  out << "steps: " << trace.steps.size() << '\n';
  for (const HwStepRecord& s : trace.steps) {
    out << "  swap at " << s.position << ": multiplicity " << s.old_mult << " -> " << s.new_mult
        << '\n';
  }
  return 0;
}

int cmd_hw(const std::string& text, int at, const std::string& format, std::ostream& out) {
  const BraneDiagram d = parse_diagram(text);
  const BraneDiagram moved = hw_step(d, at);
  if (format == "json") {
    json j{{"diagram", format_diagram(d)},
           {"position", at},
           {"result", format_diagram(moved)},
           {"old_mult", d.mult[static_cast<size_t>(at)]},
           {"new_mult", moved.mult[static_cast<size_t>(at)]}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "diagram: " << format_diagram(d) << '\n';
  out << "result:  " << format_diagram(moved) << '\n';
  out << "segment " << at << " multiplicity " << d.mult[static_cast<size_t>(at)] << " -> "
      << moved.mult[static_cast<size_t>(at)] << '\n';
  return 0;
}

int cmd_selftest(const SelftestOptions& options, const std::string& format, std::ostream& out) {
  const SelftestReport report = run_selftest(options);
  if (format == "json") {
    json suites = json::array();
    for (const SuiteResult& s : report.suites) {
      suites.push_back(
          json{{"name", s.name}, {"cases", s.cases}, {"ok", s.ok}, {"message", s.message}});
    }
    json j{{"ok", report.ok},
           {"seed", options.seed},
           {"diagrams", report.diagrams_generated},
           {"total_cases", report.total_cases},
           {"suites", std::move(suites)}};
    out << j.dump(2) << '\n';
    return report.ok ? 0 : 1;
  }
  for (const SuiteResult& s : report.suites) {
    if (s.ok) {
      out << "suite " << s.name << ": OK (" << s.cases << " cases)\n";
    } else {
      out << "suite " << s.name << ": FAIL — " << s.message << " (" << s.cases << " cases)\n";
    }
  }
  out << "selftest: " << (report.ok ? "OK" : "FAIL") << ", " << report.suites.size()
      << " suites, " << report.total_cases << " cases, " << report.diagrams_generated
      << " diagrams, seed " << options.seed << '\n';
  return report.ok ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "bowvar — exact fixed-point, tangent-weight, and invariant-curve data for type-A "
      "brane diagrams"};
  app.require_subcommand(0, 1);

  std::string diagram_text;
  std::string format = "table";
  bool use_label = false;

  const auto add_diagram = [&](CLI::App* sub) {
    sub->add_option("diagram", diagram_text, kDiagramHelp)->required();
  };
  const auto add_format = [&](CLI::App* sub, bool with_dot) {
    const std::vector<std::string> allowed =
        with_dot ? std::vector<std::string>{"table", "json", "dot"}
                 : std::vector<std::string>{"table", "json"};
    sub->add_option("--format", format, "Output format")
        ->default_val("table")
        ->check(CLI::IsMember(allowed));
  };
  const auto add_label = [&](CLI::App* sub) {
    sub->add_flag("--label", use_label,
                  "Name fixed points by the rows holding the 1 in column 2 (applies to "
                  "two-column tables with one 1 per row and at most nine rows)");
  };

  CLI::App* sub_parse = app.add_subcommand("parse", "Validate a diagram and print its charges");
  add_diagram(sub_parse);
  add_format(sub_parse, false);

  CLI::App* sub_fixed =
      app.add_subcommand("fixed-points", "Enumerate the torus fixed points (0/1 tables)");
  add_diagram(sub_fixed);
  add_format(sub_fixed, false);
  add_label(sub_fixed);

  std::string fp_selector = "all";
  bool check_oracle = false;
  CLI::App* sub_weights =
      app.add_subcommand("weights", "Equivariant tangent weights at fixed points");
  add_diagram(sub_weights);
  add_format(sub_weights, false);
  add_label(sub_weights);
  sub_weights->add_option(
      "--fixed-point", fp_selector,
      "1-based fixed point index or 'all' (or a subset alias when --label is set)");
  sub_weights->add_flag("--oracle", check_oracle,
                        "Recompute every requested point through the butterfly tangent class "
                        "and fail (exit 3) on any disagreement");

  std::string curve_selector;
  CLI::App* sub_curves =
      app.add_subcommand("curves", "Classify the invariant curves through one fixed point");
  add_diagram(sub_curves);
  add_format(sub_curves, false);
  add_label(sub_curves);
  sub_curves
      ->add_option("--fixed-point", curve_selector,
                   "1-based fixed point index (or a subset alias when --label is set)")
      ->required();

  bool parallel = false;
  CLI::App* sub_skeleton =
      app.add_subcommand("skeleton", "Fixed points, compact curve edges, and noncompact rays");
  add_diagram(sub_skeleton);
  add_format(sub_skeleton, true);
  add_label(sub_skeleton);
  sub_skeleton->add_flag("--parallel", parallel, "Classify fixed points across threads");

  CLI::App* sub_separate =
      app.add_subcommand("separate", "Move every D5 brane right of every NS5 brane");
  add_diagram(sub_separate);
  add_format(sub_separate, false);

  int hw_at = 0;
  CLI::App* sub_hw = app.add_subcommand("hw", "Apply one brane transition");
  add_diagram(sub_hw);
  add_format(sub_hw, false);
  sub_hw->add_option("--at", hw_at, "Position of the left brane of the adjacent pair (1-based)")
      ->required();

  SelftestOptions st;
  bool skip_surgery_oracle = false;
  bool st_parallel = false;
  CLI::App* sub_selftest =
      app.add_subcommand("selftest", "Randomized cross-validation of the whole engine");
  add_format(sub_selftest, false);
  sub_selftest->add_option("--seed", st.seed, "Random seed")->default_val(1);
  sub_selftest->add_option("--count", st.diagrams, "Number of corpus diagrams")
      ->default_val(40)
      ->check(CLI::NonNegativeNumber);
  sub_selftest->add_option("--max-size", st.max_total, "Cap on the number of branes")
      ->default_val(8)
      ->check(CLI::Range(2, 12));
  sub_selftest->add_flag("--skip-surgery-oracle", skip_surgery_oracle,
                         "Skip the exhaustive small-table surgery oracle");
  sub_selftest->add_flag("--parallel", st_parallel, "Run skeleton suites across threads");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bowvar");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_parse->parsed()) return cmd_parse(diagram_text, format, out);
    if (sub_fixed->parsed()) return cmd_fixed_points(diagram_text, format, use_label, out);
    if (sub_weights->parsed()) {
      return cmd_weights(diagram_text, fp_selector, check_oracle, format, use_label, out, err);
    }
    if (sub_curves->parsed()) {
      return cmd_curves(diagram_text, curve_selector, format, use_label, out);
    }
    if (sub_skeleton->parsed()) return cmd_skeleton(diagram_text, format, use_label, parallel, out);
    if (sub_separate->parsed()) return cmd_separate(diagram_text, format, out);
    if (sub_hw->parsed()) return cmd_hw(diagram_text, hw_at, format, out);
    if (sub_selftest->parsed()) {
      st.include_surgery_oracle = !skip_surgery_oracle;
      st.policy = st_parallel ? ExecutionPolicy::Parallel : ExecutionPolicy::Serial;
      return cmd_selftest(st, format, out);
    }
    err << "no command given; run with --help for usage\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bowvar
