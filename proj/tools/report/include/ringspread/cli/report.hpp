#ifndef RINGSPREAD_CLI_REPORT_HPP
#define RINGSPREAD_CLI_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ringspread/circle_state.hpp"
#include "ringspread/measures.hpp"
#include "ringspread/state_spec.hpp"

namespace ringspread::cli {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(const std::string& name);

struct RunConfig {
  int grid_n = 720;
  int quad_panels = 64;
  std::optional<OutputFormat> format;  ///< unset: per-command default
  std::optional<std::filesystem::path> output_path;
  bool normalize = false;
  std::optional<int> mmax_override;

  void validate() const;
  ScanGrid grid() const;
  BuildOptions build_options() const;
};

enum class ScanQuantity { Mean, Variance, CovRe, CovIm };

ScanQuantity parse_scan_quantity(const std::string& name);
std::string_view to_string(ScanQuantity q);

/// Evenly spaced reference points -pi + 2 pi j / count.
std::vector<double> even_phi0(int count);

std::string render_catalog(OutputFormat format);
std::string render_state(const CircleState& state, const StateSpec& spec, const RunConfig& cfg);
std::string render_measure(const CircleState& state, const RunConfig& cfg);
std::string render_scan(const CircleState& state, ScanQuantity quantity, const RunConfig& cfg);
std::string render_centers(const CircleState& state, const RunConfig& cfg);
std::string render_relations(const CircleState& state, const RunConfig& cfg);

enum class Figure { Fig1, Fig2 };

Figure parse_figure(const std::string& name);

/// Writes <dir>/<fig>_density.csv and <dir>/<fig>_measures.csv; returns the paths.
std::vector<std::filesystem::path> write_figure(Figure which, const RunConfig& cfg,
                                                const std::filesystem::path& dir);

}  // namespace ringspread::cli

#endif  // RINGSPREAD_CLI_REPORT_HPP
