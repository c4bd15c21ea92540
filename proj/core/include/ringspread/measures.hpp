#ifndef RINGSPREAD_MEASURES_HPP
#define RINGSPREAD_MEASURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringspread/circle_state.hpp"
#include "ringspread/numerics.hpp"
#include "ringspread/windowed_moments.hpp"

namespace ringspread {

/// |<U^2>| below this makes the logarithmic angle measure +infinity.
inline constexpr double kKrInfinityThreshold = 1e-15;

/// A relation with slack >= -kRelationTolerance counts as satisfied.
inline constexpr double kRelationTolerance = 1e-9;

struct KrMeasures {
  double phi = 0.0;  ///< -1/4 ln |<U^2>|^2, possibly +infinity
  double lz = 0.0;   ///< 1/4 ln(<e^{-2 l_z}> <e^{2 l_z}>)
};

/// Minimum of D(phi0) over one period.
struct BMeasure {
  double value = 0.0;
  std::vector<double> argmins;  ///< empty when degenerate
  bool degenerate = false;      ///< D(phi0) is constant (uniform density)
  /// phi0 used when a single window must be picked (first argmin, or the grid
  /// origin in the degenerate case).
  double representative = 0.0;
};

/// Solutions of M(phi0) = phi0.
struct PacketCenters {
  std::vector<double> centers;
  bool all_points = false;
  /// Polar angle of (<cos phi>, <sin phi>) when that vector is not ~0.
  std::optional<double> centroid_angle;
  /// True when the centroid angle is absent or matches one of `centers`.
  bool centroid_consistent = true;
};

struct CenterValue {
  double phi0 = 0.0;
  double variance = 0.0;
  bool selected = false;
};

/// D at the packet center(s) achieving the global minimum among all fixed points.
struct CMeasure {
  double value = 0.0;
  std::vector<double> selected_centers;
  std::vector<CenterValue> all_centers;
  bool all_points = false;
};

struct MeanSquareCovariance {
  double cov_sq = 0.0;  ///< mean over phi0 of (Re G)^2
  double img_sq = 0.0;  ///< mean over phi0 of (Im G)^2
};

/// Every scalar delocalization measure of one state.
struct MeasureReport {
  double tilde_sq = 0.0;
  double kr_phi = 0.0;
  double kr_lz = 0.0;
  double a_measure = 0.0;
  BMeasure b;
  CMeasure c;
  PacketCenters centers;
  double lz_mean = 0.0;
  double lz_variance = 0.0;
  MeanSquareCovariance mean_sq;
  TrigMoments trig;
};

enum class RelationId {
  NietoSin,
  NietoCos,
  TildeProduct,
  SchrodingerWindow,
  SchrodingerA,
  SchrodingerB,
  KrSum,
  SumA,
  SumB,
  SumC,
};

std::string_view to_string(RelationId id);

struct RelationReport {
  RelationId id = RelationId::NietoSin;
  std::optional<double> phi0;  ///< set for per-window rows
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
};

/// Which window supplies Im G on the right side of the c-variant sum relation.
enum class CenterImPolicy {
  FirstSelected,     ///< Im G at the first selected center
  MeanOverSelected,  ///< |mean of Im G over all selected centers|
};

struct RelationOptions {
  CenterImPolicy center_policy = CenterImPolicy::FirstSelected;
};

double measure_tilde(const CircleState& state);

KrMeasures measure_kr(const CircleState& state);

/// Mean of D(phi0) over a period (trapezoid rule, spectrally exact).
double measure_a(const CircleState& state, const ScanGrid& grid = {});

BMeasure measure_b(const CircleState& state, const ScanGrid& grid = {});

PacketCenters packet_centers(const CircleState& state, const ScanGrid& grid = {});

CMeasure measure_c(const CircleState& state, const ScanGrid& grid = {});

MeanSquareCovariance mean_sq_cov(const CircleState& state, const ScanGrid& grid = {});

MeasureReport measure_report(const CircleState& state, const ScanGrid& grid = {});

std::vector<RelationReport> relation_report(const CircleState& state, const ScanGrid& grid,
                                            const std::vector<double>& phi0_samples,
                                            const RelationOptions& options = {});

/// Same, reusing an already computed measure report.
std::vector<RelationReport> relation_report(const CircleState& state, const MeasureReport& report,
                                            const std::vector<double>& phi0_samples,
                                            const RelationOptions& options = {});

/// Node count for full-period trapezoid averages: at least grid.n and large
/// enough to integrate products of the moment functions exactly.
int averaging_nodes(const CircleState& state, const ScanGrid& grid);

}  // namespace ringspread

#endif  // RINGSPREAD_MEASURES_HPP
