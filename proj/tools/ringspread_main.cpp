// ringspread: position-uncertainty measures for states on the circle.
//
//   ringspread state|measure|scan|centers|relations|figure [args]
//       [--grid N] [--panels N] [--format json|csv|text] [--out PATH]
//       [--normalize] [--mmax N]
//
// Exit status: 0 success, 2 spec/parse errors, 3 numerical-domain errors,
// 4 I/O errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "ringspread/cli/report.hpp"
#include "ringspread/cli/spec_io.hpp"
#include "ringspread/errors.hpp"

namespace {

namespace rs = ringspread;
namespace cli = ringspread::cli;

constexpr int kExitSpec = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct Options {
  cli::RunConfig cfg;
  std::string format;
  std::string out;
  int mmax = -1;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--grid", o.cfg.grid_n, "phi0 samples per 2pi interval")->capture_default_str();
  sub->add_option("--panels", o.cfg.quad_panels, "Gauss-Legendre panels for quadrature cross-checks")
      ->capture_default_str();
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.out, "output file (figure: output directory)");
  sub->add_flag("--normalize", o.cfg.normalize, "rescale explicit coefficients to unit norm");
  sub->add_option("--mmax", o.mmax, "drop |m| above this and renormalize");
}

void finalize(Options& o) {
  if (!o.format.empty()) o.cfg.format = cli::parse_output_format(o.format);
  if (!o.out.empty()) o.cfg.output_path = o.out;
  if (o.mmax >= 0) o.cfg.mmax_override = o.mmax;
  o.cfg.validate();
}

void emit(const std::string& text, const cli::RunConfig& cfg) {
  if (!cfg.output_path) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw rs::IoError("cannot write '" + cfg.output_path->string() + "'");
  out << text;
  if (!out.flush()) throw rs::IoError("write to '" + cfg.output_path->string() + "' failed");
}

rs::CircleState load_state(const std::string& argument, const cli::RunConfig& cfg) {
  const rs::StateSpec spec = cli::resolve_state_argument(argument);
  rs::CircleState state = rs::build_state(spec, cfg.build_options());
  if (state.label().empty() || state.label() == "fourier") state = state.with_label(argument);
  return state;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delocalization measures and uncertainty relations for states on the circle", "ringspread"};
  app.require_subcommand(1);

  Options o;
  std::string spec_arg;
  std::string quantity;
  std::string figure;
  bool list_catalog = false;

  auto* state_cmd = app.add_subcommand("state", "print a state's coefficients, l_z moments and density samples");
  state_cmd->add_option("spec", spec_arg, "state-spec file or catalog name");
  state_cmd->add_flag("--catalog", list_catalog, "list the built-in states");
  add_common(state_cmd, o);

  auto* measure_cmd = app.add_subcommand("measure", "all delocalization measures, centers and relations");
  measure_cmd->add_option("spec", spec_arg, "state-spec file or catalog name")->required();
  add_common(measure_cmd, o);

  auto* scan_cmd = app.add_subcommand("scan", "tabulate a window moment over phi0 in [-pi, pi)");
  scan_cmd->add_option("spec", spec_arg, "state-spec file or catalog name")->required();
  scan_cmd->add_option("quantity", quantity, "mean, variance, cov_re or cov_im")->required();
  add_common(scan_cmd, o);

  auto* centers_cmd = app.add_subcommand("centers", "packet centers: solutions of M(phi0) = phi0");
  centers_cmd->add_option("spec", spec_arg, "state-spec file or catalog name")->required();
  add_common(centers_cmd, o);

  auto* relations_cmd = app.add_subcommand("relations", "evaluate every uncertainty relation");
  relations_cmd->add_option("spec", spec_arg, "state-spec file or catalog name")->required();
  add_common(relations_cmd, o);

  auto* figure_cmd = app.add_subcommand("figure", "write density and measure tables for fig1 or fig2");
  figure_cmd->add_option("which", figure, "fig1 or fig2")->required();
  add_common(figure_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSpec;
  }

  try {
    finalize(o);
    if (state_cmd->parsed()) {
      if (list_catalog) {
        emit(cli::render_catalog(o.cfg.format.value_or(cli::OutputFormat::Text)), o.cfg);
        return 0;
      }
      if (spec_arg.empty()) throw rs::ParseError("state: give a spec file or catalog name, or --catalog");
      const rs::StateSpec spec = cli::resolve_state_argument(spec_arg);
      rs::CircleState state = rs::build_state(spec, o.cfg.build_options());
      if (state.label() == "fourier") state = state.with_label(spec_arg);
      emit(cli::render_state(state, spec, o.cfg), o.cfg);
    } else if (measure_cmd->parsed()) {
      emit(cli::render_measure(load_state(spec_arg, o.cfg), o.cfg), o.cfg);
    } else if (scan_cmd->parsed()) {
      const auto q = cli::parse_scan_quantity(quantity);
      emit(cli::render_scan(load_state(spec_arg, o.cfg), q, o.cfg), o.cfg);
    } else if (centers_cmd->parsed()) {
      emit(cli::render_centers(load_state(spec_arg, o.cfg), o.cfg), o.cfg);
    } else if (relations_cmd->parsed()) {
      emit(cli::render_relations(load_state(spec_arg, o.cfg), o.cfg), o.cfg);
    } else if (figure_cmd->parsed()) {
      const auto which = cli::parse_figure(figure);
      const std::filesystem::path dir = o.cfg.output_path.value_or(std::filesystem::path("."));
      for (const auto& path : cli::write_figure(which, o.cfg, dir)) std::cout << path.string() << '\n';
    }
  } catch (const rs::IoError& e) {
    std::cerr << "ringspread: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const rs::ParseError& e) {
    std::cerr << "ringspread: " << e.what() << '\n';
    return kExitSpec;
  } catch (const rs::NormalizationError& e) {
    std::cerr << "ringspread: normalization error: " << e.what() << " (pass --normalize to rescale)\n";
    return kExitSpec;
  } catch (const rs::ParameterRangeError& e) {
    std::cerr << "ringspread: parameter out of range: " << e.what() << '\n';
    return kExitSpec;
  } catch (const rs::Error& e) {
    std::cerr << "ringspread: numerical error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
