#include "ringspread/windowed_moments.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ringspread/errors.hpp"

namespace ringspread {

namespace {

using cd = std::complex<double>;

constexpr std::array<std::array<double, kMaxMomentOrder + 1>, kMaxMomentOrder + 1> binomials() {
  std::array<std::array<double, kMaxMomentOrder + 1>, kMaxMomentOrder + 1> b{};
  for (int n = 0; n <= kMaxMomentOrder; ++n) {
    b[n][0] = 1.0;
    for (int j = 1; j <= n; ++j) b[n][j] = b[n - 1][j - 1] + (j < n ? b[n - 1][j] : 0.0);
  }
  return b;
}

constexpr auto kBinomial = binomials();

// J_j(k) = int_{-pi}^{pi} u^j e^{iku} du for j = 0..kMaxMomentOrder.
std::array<cd, kMaxMomentOrder + 1> window_integral_table(int k) {
  std::array<cd, kMaxMomentOrder + 1> J{};
  if (k == 0) {
    for (int j = 0; j <= kMaxMomentOrder; ++j) {
      J[j] = (j % 2 == 0) ? 2.0 * std::pow(kPi, j + 1) / (j + 1) : 0.0;
    }
    return J;
  }
  const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
  const cd ik{0.0, static_cast<double>(k)};
  J[0] = 0.0;
  for (int j = 1; j <= kMaxMomentOrder; ++j) {
    // boundary term u^j e^{iku}/(ik) at +-pi, minus j/(ik) J_{j-1}
    const double boundary = (j % 2 == 1) ? 2.0 * sign_k * std::pow(kPi, j) : 0.0;
    J[j] = (boundary - static_cast<double>(j) * J[j - 1]) / ik;
  }
  return J;
}

}  // namespace

WindowedMoments::WindowedMoments(const CircleState& state) : bandwidth_(state.density_bandwidth()) {
  const int K = bandwidth_;
  density_.assign(static_cast<std::size_t>(2 * K + 1), cd{});
  current_.assign(static_cast<std::size_t>(2 * K + 1), cd{});
  window_integrals_.resize(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    cd pk{};
    cd qk{};
    for (int m = state.m_min(); m <= state.m_max(); ++m) {
      const cd term = std::conj(state.coefficient(m)) * state.coefficient(m + k);
      pk += term;
      qk += static_cast<double>(m) * term;
    }
    const auto idx = static_cast<std::size_t>(k + K);
    density_[idx] = pk;
    current_[idx] = qk;
    window_integrals_[idx] = window_integral_table(k);
  }
  lz_ = lz_moments(state);
}

std::complex<double> WindowedMoments::density_harmonic(int k) const {
  if (k < -bandwidth_ || k > bandwidth_) return {};
  return density_[static_cast<std::size_t>(k + bandwidth_)];
}

template <std::size_t N>
std::array<cd, N> WindowedMoments::raw_moments(const std::vector<cd>& harmonics, double phi0) const {
  static_assert(N <= kMaxMomentOrder + 1);
  std::array<cd, N> out{};
  const int K = bandwidth_;
  for (int k = -K; k <= K; ++k) {
    const auto idx = static_cast<std::size_t>(k + K);
    const cd weight = harmonics[idx] * std::polar(1.0, k * phi0);
    const auto& J = window_integrals_[idx];
    for (std::size_t j = 0; j < N; ++j) out[j] += weight * J[j];
  }
  for (auto& v : out) v /= kTwoPi;
  return out;
}

double WindowedMoments::mean(double phi0) const {
  const auto e = raw_moments<2>(density_, phi0);
  return phi0 + e[1].real() / e[0].real();
}

double WindowedMoments::variance(double phi0) const {
  const auto e = raw_moments<3>(density_, phi0);
  const double norm = e[0].real();
  const double shift = e[1].real() / norm;
  return e[2].real() / norm - shift * shift;
}

double WindowedMoments::central_moment(int order, double phi0) const {
  if (order < 1 || order > kMaxMomentOrder) {
    throw ParameterRangeError("central moment order must lie in [1, " + std::to_string(kMaxMomentOrder) +
                              "], got " + std::to_string(order));
  }
  if (order == 2) return variance(phi0);
  const auto e = raw_moments<kMaxMomentOrder + 1>(density_, phi0);
  const double norm = e[0].real();
  const double shift = e[1].real() / norm;
  // int (u - shift)^n p = sum_j C(n, j) (-shift)^{n-j} E_j
  double sum = 0.0;
  for (int j = 0; j <= order; ++j) {
    sum += kBinomial[order][j] * std::pow(-shift, order - j) * e[j].real() / norm;
  }
  return sum;
}

std::complex<double> WindowedMoments::covariance(double phi0) const {
  const auto e = raw_moments<2>(density_, phi0);
  const auto f = raw_moments<2>(current_, phi0);
  const double norm = e[0].real();
  const double shift = e[1].real() / norm;
  // G = int (conj(l_z psi) psi - <l_z> p) (u - shift) du
  return (f[1] - shift * f[0]) - lz_.mean * (e[1] - shift * e[0]);
}

WindowMoments WindowedMoments::at(double phi0) const {
  const auto e = raw_moments<3>(density_, phi0);
  const auto f = raw_moments<2>(current_, phi0);
  const double norm = e[0].real();
  const double shift = e[1].real() / norm;
  const cd g = (f[1] - shift * f[0]) - lz_.mean * (e[1] - shift * e[0]);
  WindowMoments w;
  w.phi0 = phi0;
  w.mean = phi0 + shift;
  w.variance = e[2].real() / norm - shift * shift;
  w.cov_re = g.real();
  w.cov_im = g.imag();
  return w;
}

double mean_phi(const CircleState& state, double phi0) { return WindowedMoments(state).mean(phi0); }

double variance_phi(const CircleState& state, double phi0) { return WindowedMoments(state).variance(phi0); }

double central_moment_phi(const CircleState& state, int order, double phi0) {
  if (order < 1 || order > kMaxMomentOrder) {
    throw ParameterRangeError("central moment order must lie in [1, " + std::to_string(kMaxMomentOrder) + "]");
  }
  return WindowedMoments(state).central_moment(order, phi0);
}

std::complex<double> covariance_lz_phi(const CircleState& state, double phi0) {
  return WindowedMoments(state).covariance(phi0);
}

std::complex<double> expectation_exp_ikphi(const CircleState& state, int k) {
  if (k == 0) return {1.0, 0.0};
  cd sum{};
  for (int m = state.m_min(); m <= state.m_max(); ++m) {
    sum += std::conj(state.coefficient(m)) * state.coefficient(m - k);
  }
  return sum;
}

TrigMoments trig_moments(const CircleState& state) {
  const cd u1 = expectation_exp_ikphi(state, 1);
  const cd u2 = expectation_exp_ikphi(state, 2);
  TrigMoments t;
  t.mean_cos = u1.real();
  t.mean_sin = u1.imag();
  // cos^2 = (1 + cos 2phi)/2, sin^2 = (1 - cos 2phi)/2
  t.var_cos = 0.5 * (1.0 + u2.real()) - t.mean_cos * t.mean_cos;
  t.var_sin = 0.5 * (1.0 - u2.real()) - t.mean_sin * t.mean_sin;
  return t;
}

LzMoments lz_moments(const CircleState& state) {
  LzMoments out;
  for (int m = state.m_min(); m <= state.m_max(); ++m) out.mean += m * std::norm(state.coefficient(m));
  for (int m = state.m_min(); m <= state.m_max(); ++m) {
    const double d = m - out.mean;
    out.variance += d * d * std::norm(state.coefficient(m));
  }
  return out;
}

ExpLzMoments exp_2lz_moments(const CircleState& state) {
  const double limit = std::log(std::numeric_limits<double>::max());
  ExpLzMoments out;
  for (int m = state.m_min(); m <= state.m_max(); ++m) {
    const double w = std::norm(state.coefficient(m));
    if (w == 0.0) continue;
    if (2.0 * std::abs(m) >= limit) {
      throw NumericalDomainError("exp(2 l_z) overflows at m = " + std::to_string(m));
    }
    out.plus += std::exp(2.0 * m) * w;
    out.minus += std::exp(-2.0 * m) * w;
  }
  if (!std::isfinite(out.plus) || !std::isfinite(out.minus)) {
    throw NumericalDomainError("exp(+-2 l_z) expectation overflowed");
  }
  return out;
}

WindowMoments window_moments_by_quadrature(const CircleState& state, double phi0, const QuadratureConfig& cfg) {
  const double a = phi0 - kPi;
  const double b = phi0 + kPi;
  const auto density = [&](double phi) { return state.density(phi); };
  const double norm = integrate_window(density, a, b, cfg);
  const double mean = integrate_window([&](double phi) { return phi * density(phi); }, a, b, cfg) / norm;
  const double variance =
      integrate_window([&](double phi) { return (phi - mean) * (phi - mean) * density(phi); }, a, b, cfg) / norm;

  const double lz_mean = lz_moments(state).mean;
  const double inv_sqrt_two_pi = 1.0 / std::sqrt(kTwoPi);
  const auto lz_psi = [&](double phi) {
    cd sum{};
    const double x = reduce_angle(phi);
    for (int m = state.m_min(); m <= state.m_max(); ++m) {
      sum += static_cast<double>(m) * state.coefficient(m) * std::polar(1.0, m * x);
    }
    return sum * inv_sqrt_two_pi;
  };
  const cd g = integrate_window_complex(
      [&](double phi) -> cd {
        const cd psi = state.evaluate(phi);
        return std::conj(lz_psi(phi) - lz_mean * psi) * (phi - mean) * psi;
      },
      a, b, cfg);

  WindowMoments w;
  w.phi0 = phi0;
  w.mean = mean;
  w.variance = variance;
  w.cov_re = g.real();
  w.cov_im = g.imag();
  return w;
}

}  // namespace ringspread
