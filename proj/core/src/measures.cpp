#include "ringspread/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ringspread/errors.hpp"

namespace ringspread {

namespace {

double cyclic_distance(double x, double y) {
  const double d = std::abs(reduce_angle(x - y));
  return std::min(d, kTwoPi - d);
}

double tie_tolerance(double value) { return kMinimumTieTolerance * std::max(1.0, std::abs(value)); }

BMeasure measure_b_impl(const WindowedMoments& engine, const ScanGrid& grid) {
  const auto variance = [&](double x) { return engine.variance(x); };
  const PeriodicMinimum pm = minimize_periodic(variance, grid);
  BMeasure out;
  out.value = pm.value;
  out.degenerate = pm.degenerate;
  if (pm.degenerate) {
    out.representative = reduce_angle(grid.origin);
    return out;
  }
  // Stationary points of D are the solutions of M(phi0) = phi0 (plus zeros of
  // p(phi0 + pi)). Minima that are flat to high order are located far more
  // sharply through that root than by golden section on D itself.
  const FixedPoints fp = fixed_points([&](double x) { return engine.mean(x); }, grid);
  for (double x : pm.all_minima) {
    double best = x;
    double best_distance = 2.0 * grid.step();
    for (double r : fp.roots) {
      const double d = cyclic_distance(r, x);
      if (d <= best_distance && engine.variance(r) <= out.value + tie_tolerance(out.value)) {
        best = r;
        best_distance = d;
      }
    }
    out.argmins.push_back(reduce_angle(best));
  }
  std::sort(out.argmins.begin(), out.argmins.end());
  out.argmins.erase(std::unique(out.argmins.begin(), out.argmins.end(),
                                [](double a, double b) { return cyclic_distance(a, b) < 1e-8; }),
                    out.argmins.end());
  out.representative = out.argmins.front();
  return out;
}

PacketCenters packet_centers_impl(const CircleState& state, const WindowedMoments& engine, const ScanGrid& grid) {
  const FixedPoints fp = fixed_points([&](double x) { return engine.mean(x); }, grid);
  PacketCenters out;
  out.centers = fp.roots;
  out.all_points = fp.identity;
  const auto u1 = expectation_exp_ikphi(state, 1);
  if (std::abs(u1) > 1e-9) {
    out.centroid_angle = reduce_angle(std::arg(u1));
    if (!out.all_points) {
      out.centroid_consistent = std::any_of(out.centers.begin(), out.centers.end(), [&](double c) {
        return cyclic_distance(c, *out.centroid_angle) < 1e-6;
      });
    }
  }
  return out;
}

CMeasure measure_c_impl(const WindowedMoments& engine, const PacketCenters& centers, const BMeasure& b,
                        const ScanGrid& grid) {
  CMeasure out;
  if (centers.all_points) {
    out.all_points = true;
    out.value = engine.variance(reduce_angle(grid.origin));
    return out;
  }
  std::vector<double> candidates = centers.centers;
  if (candidates.empty()) candidates = b.argmins;  // only tangential roots; fall back to the minima of D
  double best = std::numeric_limits<double>::infinity();
  for (double x : candidates) {
    const double d = engine.variance(x);
    out.all_centers.push_back({x, d, false});
    best = std::min(best, d);
  }
  for (auto& cv : out.all_centers) {
    if (cv.variance - best <= tie_tolerance(best)) {
      cv.selected = true;
      out.selected_centers.push_back(cv.phi0);
    }
  }
  out.value = best;
  return out;
}

MeanSquareCovariance mean_sq_cov_impl(const WindowedMoments& engine, int nodes, double origin) {
  MeanSquareCovariance out;
  double re = 0.0;
  double im = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const auto g = engine.covariance(origin + kTwoPi * static_cast<double>(i) / nodes);
    re += g.real() * g.real();
    im += g.imag() * g.imag();
  }
  out.cov_sq = re / nodes;
  out.img_sq = im / nodes;
  return out;
}

RelationReport make_relation(RelationId id, double lhs, double rhs, std::optional<double> phi0 = std::nullopt) {
  RelationReport r;
  r.id = id;
  r.phi0 = phi0;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.satisfied = r.slack >= -kRelationTolerance;
  return r;
}

}  // namespace

std::string_view to_string(RelationId id) {
  switch (id) {
    case RelationId::NietoSin: return "nieto_sin";
    case RelationId::NietoCos: return "nieto_cos";
    case RelationId::TildeProduct: return "tilde_product";
    case RelationId::SchrodingerWindow: return "schrodinger_window";
    case RelationId::SchrodingerA: return "schrodinger_a";
    case RelationId::SchrodingerB: return "schrodinger_b";
    case RelationId::KrSum: return "kr_sum";
    case RelationId::SumA: return "sum_a";
    case RelationId::SumB: return "sum_b";
    case RelationId::SumC: return "sum_c";
  }
  return "unknown";
}

int averaging_nodes(const CircleState& state, const ScanGrid& grid) {
  // D(phi0) has harmonics up to 2K and G^2 up to 4K.
  return std::max(grid.n, 4 * state.density_bandwidth() + 2);
}

double measure_tilde(const CircleState& state) { return 1.0 - std::norm(expectation_exp_ikphi(state, 1)); }

KrMeasures measure_kr(const CircleState& state) {
  KrMeasures out;
  const double u2 = std::abs(expectation_exp_ikphi(state, 2));
  out.phi = (u2 < kKrInfinityThreshold) ? std::numeric_limits<double>::infinity() : -0.5 * std::log(u2);
  const ExpLzMoments e = exp_2lz_moments(state);
  out.lz = 0.25 * (std::log(e.minus) + std::log(e.plus));
  return out;
}

double measure_a(const CircleState& state, const ScanGrid& grid) {
  grid.validate();
  const WindowedMoments engine(state);
  return periodic_mean([&](double x) { return engine.variance(x); }, averaging_nodes(state, grid), grid.origin);
}

BMeasure measure_b(const CircleState& state, const ScanGrid& grid) {
  const WindowedMoments engine(state);
  return measure_b_impl(engine, grid);
}

PacketCenters packet_centers(const CircleState& state, const ScanGrid& grid) {
  const WindowedMoments engine(state);
  return packet_centers_impl(state, engine, grid);
}

CMeasure measure_c(const CircleState& state, const ScanGrid& grid) {
  const WindowedMoments engine(state);
  const PacketCenters centers = packet_centers_impl(state, engine, grid);
  BMeasure b;
  if (centers.centers.empty() && !centers.all_points) b = measure_b_impl(engine, grid);
  return measure_c_impl(engine, centers, b, grid);
}

MeanSquareCovariance mean_sq_cov(const CircleState& state, const ScanGrid& grid) {
  grid.validate();
  const WindowedMoments engine(state);
  return mean_sq_cov_impl(engine, averaging_nodes(state, grid), grid.origin);
}

MeasureReport measure_report(const CircleState& state, const ScanGrid& grid) {
  grid.validate();
  const WindowedMoments engine(state);
  MeasureReport r;
  r.tilde_sq = measure_tilde(state);
  const KrMeasures kr = measure_kr(state);
  r.kr_phi = kr.phi;
  r.kr_lz = kr.lz;
  const int nodes = averaging_nodes(state, grid);
  r.a_measure = periodic_mean([&](double x) { return engine.variance(x); }, nodes, grid.origin);
  r.b = measure_b_impl(engine, grid);
  r.centers = packet_centers_impl(state, engine, grid);
  r.c = measure_c_impl(engine, r.centers, r.b, grid);
  r.lz_mean = engine.lz().mean;
  r.lz_variance = engine.lz().variance;
  r.mean_sq = mean_sq_cov_impl(engine, nodes, grid.origin);
  r.trig = trig_moments(state);
  return r;
}

std::vector<RelationReport> relation_report(const CircleState& state, const MeasureReport& report,
                                            const std::vector<double>& phi0_samples,
                                            const RelationOptions& options) {
  const WindowedMoments engine(state);
  const double lz_var = report.lz_variance;
  const TrigMoments& t = report.trig;
  std::vector<RelationReport> rows;

  rows.push_back(make_relation(RelationId::NietoSin, lz_var * t.var_sin, 0.25 * t.mean_cos * t.mean_cos));
  rows.push_back(make_relation(RelationId::NietoCos, lz_var * t.var_cos, 0.25 * t.mean_sin * t.mean_sin));
  rows.push_back(make_relation(RelationId::TildeProduct, lz_var * report.tilde_sq,
                               0.25 * (t.mean_cos * t.mean_cos + t.mean_sin * t.mean_sin)));

  for (double phi0 : phi0_samples) {
    const WindowMoments w = engine.at(phi0);
    rows.push_back(make_relation(RelationId::SchrodingerWindow, w.variance * lz_var - w.cov_re * w.cov_re,
                                 w.cov_im * w.cov_im, phi0));
  }

  rows.push_back(make_relation(RelationId::SchrodingerA, report.a_measure * lz_var - report.mean_sq.cov_sq,
                               report.mean_sq.img_sq));
  const std::complex<double> g_min = engine.covariance(report.b.representative);
  rows.push_back(make_relation(RelationId::SchrodingerB, report.b.value * lz_var - g_min.real() * g_min.real(),
                               g_min.imag() * g_min.imag(), report.b.representative));

  const double kr_sum = report.kr_lz + report.kr_phi;
  rows.push_back(make_relation(RelationId::KrSum, kr_sum, 1.0));

  rows.push_back(make_relation(RelationId::SumA, lz_var + report.a_measure, 2.0 * std::sqrt(report.mean_sq.img_sq)));
  rows.push_back(make_relation(RelationId::SumB, lz_var + report.b.value, 2.0 * std::abs(g_min.imag()),
                               report.b.representative));

  double center_im = 0.0;
  std::optional<double> center_phi0;
  if (report.c.all_points || report.c.selected_centers.empty()) {
    center_phi0 = report.b.representative;
    center_im = engine.covariance(*center_phi0).imag();
  } else if (options.center_policy == CenterImPolicy::FirstSelected) {
    center_phi0 = report.c.selected_centers.front();
    center_im = engine.covariance(*center_phi0).imag();
  } else {
    for (double x : report.c.selected_centers) center_im += engine.covariance(x).imag();
    center_im /= static_cast<double>(report.c.selected_centers.size());
  }
  rows.push_back(make_relation(RelationId::SumC, lz_var + report.c.value, 2.0 * std::abs(center_im), center_phi0));
  return rows;
}

std::vector<RelationReport> relation_report(const CircleState& state, const ScanGrid& grid,
                                            const std::vector<double>& phi0_samples,
                                            const RelationOptions& options) {
  return relation_report(state, measure_report(state, grid), phi0_samples, options);
}

}  // namespace ringspread
