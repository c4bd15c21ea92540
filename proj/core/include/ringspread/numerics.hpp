#ifndef RINGSPREAD_NUMERICS_HPP
#define RINGSPREAD_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

namespace ringspread {

struct QuadratureConfig {
  int panels = 64;
  int points_per_panel = 16;
  double abs_tol = 1e-10;

  void validate() const;
};

/// Uniform sampling of one 2 pi interval [origin, origin + 2 pi).
struct ScanGrid {
  int n = 720;
  double origin = -3.14159265358979323846;

  void validate() const;
  double node(int i) const;
  double step() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Composite Gauss-Legendre integral of f over [a, b]. The panel count is
/// doubled (up to 16x) until two successive estimates agree to cfg.abs_tol.
/// Throws NumericalDomainError on a non-finite integrand value.
double integrate_window(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg = {});
std::complex<double> integrate_window_complex(const std::function<std::complex<double>(double)>& f, double a,
                                              double b, const QuadratureConfig& cfg = {});

/// (1 / 2 pi) * integral of a 2 pi-periodic g over one period, by the
/// trapezoid rule on `nodes` uniform points starting at `origin`.
double periodic_mean(const std::function<double(double)>& g, int nodes, double origin = 0.0);

struct PeriodicMinimum {
  double argmin = 0.0;              ///< in [-pi, pi)
  double value = 0.0;
  std::vector<double> all_minima;   ///< every argmin tied with the global minimum, in [-pi, pi)
  bool degenerate = false;          ///< g is constant on the grid
};

/// Relative tie tolerance used when collecting degenerate minima.
inline constexpr double kMinimumTieTolerance = 1e-9;

/**
 * Global minimum of a 2 pi-periodic function: dense scan on `grid`, then
 * golden-section refinement inside every bracketing triple. Throws
 * ContractViolation when g(origin) and g(origin + 2 pi) disagree by more than
 * 1e-8.
 */
PeriodicMinimum minimize_periodic(const std::function<double(double)>& g, const ScanGrid& grid = {},
                                  double refine_tol = 1e-12);

/// Golden-section minimum of a unimodal g on [a, b]; returns the abscissa.
double golden_section_minimize(const std::function<double(double)>& g, double a, double b, double tol);

struct FixedPoints {
  std::vector<double> roots;    ///< sorted, in [-pi, pi)
  bool identity = false;        ///< h(x) = x on the whole grid
};

/**
 * All solutions of h(x) = x in one period, for h with h(x + 2 pi) = h(x) + 2 pi.
 * Sign changes of r(x) = h(x) - x between grid nodes are bracketed and
 * bisected to 1e-10.
 */
FixedPoints fixed_points(const std::function<double(double)>& h, const ScanGrid& grid = {});

}  // namespace ringspread

#endif  // RINGSPREAD_NUMERICS_HPP
