// Command-line front end: every computation in the library is reachable as a
// subcommand emitting CSV, JSON, or DOT.  Exit codes: 0 success, 1 failed
// verification check, 2 usage or domain error.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracton/classes.hpp"
#include "fracton/entanglement.hpp"
#include "fracton/entropy.hpp"
#include "fracton/fqhe.hpp"
#include "fracton/grid.hpp"
#include "fracton/rational.hpp"
#include "fracton/solver.hpp"
#include "fracton/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec spec;
  char extra;
  std::istringstream in(text);
  char c1, c2;
  if (!(in >> spec.min >> c1 >> spec.max >> c2 >> spec.count) || c1 != ',' || c2 != ',' ||
      (in >> extra))
    throw CLI::ValidationError("grid", "expected <min>,<max>,<count>, got '" + text + "'");
  return spec;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string sanitize_message(std::string message) {
  for (char& c : message)
    if (c == ',' || c == '\n') c = ';';
  return message;
}

int cmd_distribution(const std::string& h_text, const std::vector<std::string>& xi_values,
                     const std::string& xi_grid, const std::string& de_grid,
                     const std::string& spacing, bool force_generic, const std::string& format,
                     const std::string& output) {
  double h = fracton::to_double(fracton::parse_rational(h_text));
  fracton::SolveOptions opt;
  opt.force_generic = force_generic;

  std::vector<double> xis;
  for (const auto& v : xi_values) xis.push_back(std::stod(v));
  if (!xi_grid.empty()) {
    GridSpec g = parse_grid(xi_grid);
    auto grid = spacing == "linear" ? fracton::linspace(g.min, g.max, g.count)
                                    : fracton::logspace(g.min, g.max, g.count);
    xis.insert(xis.end(), grid.begin(), grid.end());
  }
  if (!de_grid.empty()) {
    GridSpec g = parse_grid(de_grid);
    for (double de : fracton::linspace(g.min, g.max, g.count)) xis.push_back(std::exp(de));
  }
  if (xis.empty()) throw CLI::ValidationError("distribution", "no xi points requested");

  bool any_failed = false;
  std::string csv = "xi,Y,n,theta,p,q,identity_defect\n";
  nlohmann::json rows = nlohmann::json::array();
  for (double xi : xis) {
    try {
      fracton::SolverPoint pt = fracton::solve_distribution(h, xi, opt);
      double defect = fracton::partition_identity_defect(pt);
      csv += fracton::format_full(xi) + "," + fracton::format_full(pt.Y) + "," +
             fracton::format_full(pt.n) + "," + fracton::format_full(pt.theta) + "," +
             fracton::format_full(pt.p) + "," + fracton::format_full(pt.q) + "," +
             fracton::format_full(defect) + "\n";
      rows.push_back({{"xi", xi},
                      {"Y", pt.Y},
                      {"n", pt.n},
                      {"theta", pt.theta},
                      {"p", pt.p},
                      {"q", pt.q},
                      {"identity_defect", defect}});
    } catch (const std::domain_error& err) {
      any_failed = true;
      csv += fracton::format_full(xi) + ",ERROR(" + sanitize_message(err.what()) + "),,,,,\n";
      rows.push_back({{"xi", xi}, {"error", err.what()}});
    }
  }

  if (format == "json") {
    nlohmann::json doc{{"h", h}, {"rows", rows}};
    write_output(output, doc.dump(2) + "\n");
  } else {
    write_output(output, csv);
  }
  return any_failed ? kExitUsage : kExitSuccess;
}

int cmd_entanglement_curve(const std::vector<std::string>& class_texts, const std::string& p_grid,
                           const std::string& format, const std::string& output) {
  if (class_texts.empty()) throw CLI::ValidationError("entanglement-curve", "no classes given");
  std::vector<double> hs;
  for (const auto& text : class_texts) hs.push_back(fracton::to_double(fracton::parse_rational(text)));

  GridSpec g = p_grid.empty() ? GridSpec{0.0, 1.0, 101} : parse_grid(p_grid);
  auto ps = fracton::linspace(g.min, g.max, g.count);

  std::string csv = "p";
  for (const auto& text : class_texts) csv += ",E[" + text + "]";
  csv += "\n";
  nlohmann::json rows = nlohmann::json::array();
  for (double p : ps) {
    csv += fracton::format_full(p);
    nlohmann::json row{{"p", p}};
    nlohmann::json values = nlohmann::json::array();
    for (double h : hs) {
      double e = fracton::measure(h, p);
      csv += "," + fracton::format_full(e);
      values.push_back(e);
    }
    row["E"] = values;
    rows.push_back(row);
    csv += "\n";
  }

  if (format == "json") {
    nlohmann::json doc{{"classes", class_texts}, {"rows", rows}};
    write_output(output, doc.dump(2) + "\n");
  } else {
    write_output(output, csv);
  }
  return kExitSuccess;
}

int cmd_state(const std::string& h_text, int modes, int particles,
              const std::string& amplitude_path, const std::string& output) {
  fracton::FractonClass cls(fracton::parse_rational(h_text));
  auto basis = fracton::enumerate_basis(cls, modes, particles);

  std::ifstream file(amplitude_path);
  if (!file) throw std::runtime_error("cannot open amplitude file: " + amplitude_path);
  auto entries = fracton::read_amplitudes(file);
  auto amplitudes = fracton::align_to_basis(entries, basis);

  double h = cls.h_value();
  double total = fracton::state_entanglement(h, amplitudes);

  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    double prob = std::norm(amplitudes[i]);
    terms.push_back({{"ket", fracton::ket_string(basis[i])},
                     {"probability", prob},
                     {"entanglement_bits", fracton::measure(h, prob)}});
  }
  nlohmann::json doc{{"h", h},
                     {"modes", modes},
                     {"particles", particles},
                     {"basis_size", basis.size()},
                     {"total_entanglement_bits", total},
                     {"terms", terms}};
  write_output(output, doc.dump(2) + "\n");
  return kExitSuccess;
}

int cmd_farey(int max_den, int band, const std::string& emit, const std::string& output) {
  auto graph = fracton::farey_graph(max_den, band);
  if (emit == "graph") {
    write_output(output, fracton::to_dot(graph));
  } else if (emit == "duals") {
    if (band != 0)
      throw CLI::ValidationError("farey", "dual pairs are defined on band 0; use --band 0");
    std::string csv = "nu,h,nu_dual,h_dual\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
      fracton::FillingFactor dual = fracton::dual_filling(graph.vertices[i]);
      csv += fracton::to_string(graph.vertices[i]) + "," +
             fracton::to_string(graph.class_labels[i].h()) + "," + fracton::to_string(dual) + "," +
             fracton::to_string(fracton::class_from_nu(dual).h()) + "\n";
    }
    write_output(output, csv);
  } else {  // table
    std::vector<fracton::ClassOccupationRow> rows;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
      rows.push_back({graph.class_labels[i], graph.vertices[i],
                      fracton::lll_occupation(graph.vertices[i])});
    write_output(output, fracton::occupation_table_csv(rows));
  }
  return kExitSuccess;
}

int cmd_verify(const std::string& only, double solver_tol, const std::string& output) {
  fracton::VerifyOptions opt;
  opt.only_module = only;
  opt.solver_tolerance = solver_tol;
  auto results = fracton::run_verification(opt);

  std::string report;
  int failed = 0;
  for (const auto& r : results) {
    const char* status = !r.asserted ? "INFO" : r.passed ? "PASS" : "FAIL";
    if (r.asserted && !r.passed) ++failed;
    report += std::string(status) + "  " + r.module + ": " + r.name;
    if (!r.detail.empty()) report += "  [" + r.detail + "]";
    report += "\n";
  }
  int asserted = 0;
  for (const auto& r : results) asserted += r.asserted ? 1 : 0;
  report += std::to_string(asserted) + " checks asserted, " + std::to_string(asserted - failed) +
            " passed, " + std::to_string(failed) + " failed, " +
            std::to_string(results.size() - static_cast<std::size_t>(asserted)) +
            " informational\n";
  write_output(output, report);
  return failed == 0 ? kExitSuccess : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracton: fractal exclusion statistics, entropy, and entanglement toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");  // frees -h/--h for class input

  std::string output;
  app.add_option("--output", output, "write to this path instead of standard output")
      ->capture_default_str();

  // distribution
  auto* dist = app.add_subcommand("distribution",
                                  "solve the fractal distribution over a fugacity grid");
  std::string dist_h;
  std::vector<std::string> dist_xi;
  std::string dist_xi_grid, dist_de_grid, dist_spacing = "log", dist_format = "csv";
  bool dist_generic = false;
  dist->add_option("--h", dist_h, "class parameter, rational '3/2' or decimal '1.5'")->required();
  dist->add_option("--xi", dist_xi, "explicit xi point (repeatable)");
  dist->add_option("--xi-grid", dist_xi_grid, "xi grid as <min>,<max>,<count>");
  dist->add_option("--de-grid", dist_de_grid, "(epsilon-mu)/kT grid as <min>,<max>,<count>");
  dist->add_option("--spacing", dist_spacing, "xi grid spacing: log or linear")
      ->check(CLI::IsMember({"log", "linear"}));
  dist->add_flag("--force-generic", dist_generic, "use the root-finder even where closed forms exist");
  dist->add_option("--format", dist_format)->check(CLI::IsMember({"csv", "json"}));

  // entanglement-curve
  auto* curve = app.add_subcommand("entanglement-curve",
                                   "tabulate the entanglement measure E[h,p] over a p grid");
  std::vector<std::string> curve_classes;
  std::string curve_p_grid, curve_format = "csv";
  curve->add_option("--classes", curve_classes, "comma-separated class list, e.g. 4/3,3/2,5/3")
      ->required()
      ->delimiter(',');
  curve->add_option("--p-grid", curve_p_grid, "probability grid as <min>,<max>,<count>");
  curve->add_option("--format", curve_format)->check(CLI::IsMember({"csv", "json"}));

  // state
  auto* state = app.add_subcommand("state", "entanglement of an amplitude vector over a capped basis");
  std::string state_h, state_file;
  int state_modes = 0, state_particles = 0;
  state->add_option("--h", state_h, "class parameter with an integer occupation cap")->required();
  state->add_option("--modes", state_modes, "number of modes")->required();
  state->add_option("--particles", state_particles, "total particle number")->required();
  state->add_option("--amplitudes", state_file, "amplitude file: '<ket> <re> [im]' per line")
      ->required();

  // farey
  auto* farey = app.add_subcommand("farey", "transition graph and tables for one band");
  int farey_max_den = 0, farey_band = 0;
  std::string farey_emit = "graph";
  farey->add_option("--max-den", farey_max_den, "largest denominator")->required();
  farey->add_option("--band", farey_band, "band index k for the open interval (k, k+1)")
      ->capture_default_str();
  farey->add_option("--emit", farey_emit, "graph (DOT), duals (CSV), or table (CSV)")
      ->check(CLI::IsMember({"graph", "duals", "table"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity and invariant suite");
  std::string verify_only;
  double verify_tol = 1e-12;
  verify->add_option("--only", verify_only, "restrict to one module")
      ->check(CLI::IsMember({"classes", "solver", "entropy", "entanglement", "fqhe"}));
  verify->add_option("--solver-tol", verify_tol,
                     "solver tolerance used by the checks (diagnostic hook)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist)
      return cmd_distribution(dist_h, dist_xi, dist_xi_grid, dist_de_grid, dist_spacing,
                              dist_generic, dist_format, output);
    if (*curve) return cmd_entanglement_curve(curve_classes, curve_p_grid, curve_format, output);
    if (*state) return cmd_state(state_h, state_modes, state_particles, state_file, output);
    if (*farey) return cmd_farey(farey_max_den, farey_band, farey_emit, output);
    if (*verify) return cmd_verify(verify_only, verify_tol, output);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
