#include "ringspread/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "ringspread/circle_state.hpp"
#include "ringspread/errors.hpp"

namespace ringspread {

void QuadratureConfig::validate() const {
  if (panels < 1) throw ParameterRangeError("quadrature needs panels >= 1");
  if (points_per_panel < 2) throw ParameterRangeError("quadrature needs points_per_panel >= 2");
  if (!(abs_tol > 0.0)) throw ParameterRangeError("quadrature needs abs_tol > 0");
}

void ScanGrid::validate() const {
  if (n < 8) throw ParameterRangeError("scan grid needs n >= 8, got " + std::to_string(n));
  if (!std::isfinite(origin)) throw ParameterRangeError("scan grid origin must be finite");
}

double ScanGrid::step() const { return kTwoPi / n; }

double ScanGrid::node(int i) const { return origin + kTwoPi * static_cast<double>(i) / n; }

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw ParameterRangeError("Gauss-Legendre order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (order == 1) ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  if (order == 1) rule.weights[0] = 2.0;
  return rule;
}

namespace {

template <typename T>
bool is_finite_value(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <typename T>
T composite(const std::function<T(double)>& f, double a, double b, int panels, const GaussLegendreRule& rule) {
  const double h = (b - a) / panels;
  T total{};
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    T panel{};
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const T v = f(mid + 0.5 * h * rule.nodes[j]);
      if (!is_finite_value(v)) {
        throw NumericalDomainError("non-finite integrand value near phi = " + std::to_string(mid));
      }
      panel += rule.weights[j] * v;
    }
    total += 0.5 * h * panel;
  }
  return total;
}

template <typename T>
T integrate_impl(const std::function<T(double)>& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(b > a)) throw ParameterRangeError("integration window needs b > a");
  const GaussLegendreRule rule = gauss_legendre(cfg.points_per_panel);
  int panels = cfg.panels;
  T coarse = composite<T>(f, a, b, panels, rule);
  for (int level = 0; level < 4; ++level) {
    panels *= 2;
    const T fine = composite<T>(f, a, b, panels, rule);
    if (std::abs(fine - coarse) <= cfg.abs_tol) return fine;
    coarse = fine;
  }
  return coarse;
}

}  // namespace

double integrate_window(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_impl<double>(f, a, b, cfg);
}

std::complex<double> integrate_window_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                      const QuadratureConfig& cfg) {
  return integrate_impl<std::complex<double>>(f, a, b, cfg);
}

double periodic_mean(const std::function<double(double)>& g, int nodes, double origin) {
  if (nodes < 1) throw ParameterRangeError("periodic_mean needs at least one node");
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) sum += g(origin + kTwoPi * static_cast<double>(i) / nodes);
  return sum / nodes;
}

double golden_section_minimize(const std::function<double(double)>& g, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  for (int i = 0; i < 200 && (b - a) > tol; ++i) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  return gc < gd ? c : d;
}

namespace {

double cyclic_distance(double x, double y) {
  const double d = std::abs(reduce_angle(x - y));
  return std::min(d, kTwoPi - d);
}

std::vector<double> sorted_unique_angles(std::vector<double> xs, double merge_tol) {
  for (auto& x : xs) x = reduce_angle(x);
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (!out.empty() && cyclic_distance(out.back(), x) < merge_tol) continue;
    out.push_back(x);
  }
  if (out.size() > 1 && cyclic_distance(out.front(), out.back()) < merge_tol) out.pop_back();
  return out;
}

}  // namespace

PeriodicMinimum minimize_periodic(const std::function<double(double)>& g, const ScanGrid& grid,
                                  double refine_tol) {
  grid.validate();
  const double g0 = g(grid.origin);
  const double g1 = g(grid.origin + kTwoPi);
  if (!(std::abs(g0 - g1) <= 1e-8 * std::max(1.0, std::abs(g0)))) {
    throw ContractViolation("minimize_periodic: g(origin) and g(origin + 2 pi) differ by " +
                            std::to_string(std::abs(g0 - g1)));
  }

  const int n = grid.n;
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = g(grid.node(i));
  const auto at = [&](int i) { return v[static_cast<std::size_t>(((i % n) + n) % n)]; };

  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  PeriodicMinimum result;
  if (*hi_it - *lo_it <= kMinimumTieTolerance * std::max(1.0, std::abs(*lo_it))) {
    result.degenerate = true;
    result.value = *lo_it;
    result.argmin = reduce_angle(grid.node(static_cast<int>(lo_it - v.begin())));
    return result;
  }

  struct Candidate {
    double x;
    double value;
  };
  std::vector<Candidate> candidates;
  for (int i = 0; i < n; ++i) {
    if (at(i) <= at(i - 1) && at(i) < at(i + 1)) {
      const double x = golden_section_minimize(g, grid.node(i) - grid.step(), grid.node(i) + grid.step(),
                                               refine_tol);
      const double gx = g(x);
      candidates.push_back(gx <= at(i) ? Candidate{x, gx} : Candidate{grid.node(i), at(i)});
    }
  }
  if (candidates.empty()) {
    // Only possible for pathological noise; fall back to the best node.
    const int i = static_cast<int>(lo_it - v.begin());
    candidates.push_back({grid.node(i), *lo_it});
  }

  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  result.value = best->value;
  result.argmin = reduce_angle(best->x);
  const double tie = kMinimumTieTolerance * std::max(1.0, std::abs(result.value));
  std::vector<double> tied;
  for (const auto& c : candidates) {
    if (c.value - result.value <= tie) tied.push_back(c.x);
  }
  result.all_minima = sorted_unique_angles(std::move(tied), 1e-6);
  return result;
}

constexpr double kNodeRootTolerance = 1e-12;

FixedPoints fixed_points(const std::function<double(double)>& h, const ScanGrid& grid) {
  grid.validate();
  const int n = grid.n;
  const auto residual = [&](double x) { return h(x) - x; };
  std::vector<double> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)] = residual(grid.node(i));

  FixedPoints out;
  if (std::all_of(r.begin(), r.end(), [](double x) { return std::abs(x) < 1e-9; })) {
    out.identity = true;
    return out;
  }

  // Roots sitting on a node (often the seam at origin, origin + 2 pi) show up as
  // rounding noise of either sign, so they are taken directly.
  const auto on_node = [](double x, double v) { return std::abs(v) <= kNodeRootTolerance * (1.0 + std::abs(x)); };
  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    const double ra = r[static_cast<std::size_t>(i)];
    const double rb = r[static_cast<std::size_t>(i) + 1];
    if (on_node(grid.node(i), ra)) {
      roots.push_back(grid.node(i));
      continue;
    }
    if (on_node(grid.node(i + 1), rb) || !(ra * rb < 0.0)) continue;
    double a = grid.node(i);
    double b = grid.node(i + 1);
    double fa = ra;
    while (b - a > 1e-10) {
      const double mid = 0.5 * (a + b);
      const double fm = residual(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fa < 0.0) == (fm < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  out.roots = sorted_unique_angles(std::move(roots), 1e-8);
  return out;
}

}  // namespace ringspread
