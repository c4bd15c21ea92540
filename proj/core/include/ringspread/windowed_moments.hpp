#ifndef RINGSPREAD_WINDOWED_MOMENTS_HPP
#define RINGSPREAD_WINDOWED_MOMENTS_HPP

#include <array>
#include <complex>
#include <vector>

#include "ringspread/circle_state.hpp"
#include "ringspread/numerics.hpp"

namespace ringspread {

/// Moments of the multiplication angle operator over the window
/// [phi0 - pi, phi0 + pi], plus the l_z/phi covariance element
/// G(phi0) = <(l_z - <l_z>) psi | (phi - M(phi0)) psi>.
struct WindowMoments {
  double phi0 = 0.0;
  double mean = 0.0;      ///< M(phi0)
  double variance = 0.0;  ///< D(phi0)
  double cov_re = 0.0;    ///< Re G(phi0)
  double cov_im = 0.0;    ///< Im G(phi0)
};

struct LzMoments {
  double mean = 0.0;
  double variance = 0.0;
};

struct TrigMoments {
  double mean_cos = 0.0;
  double mean_sin = 0.0;
  double var_cos = 0.0;
  double var_sin = 0.0;
};

struct ExpLzMoments {
  double plus = 0.0;   ///< <exp(+2 l_z)>
  double minus = 0.0;  ///< <exp(-2 l_z)>
};

/// Highest central moment order supported.
inline constexpr int kMaxMomentOrder = 8;

/**
 * Closed-form evaluator of window-dependent moments for one state.
 *
 * The density is a trigonometric polynomial p(phi) = (1/2pi) sum_k P_k e^{ik phi},
 * so every window moment is a finite sum over k of P_k e^{ik phi0} times the
 * tabulated integrals J_j(k) = int_{-pi}^{pi} u^j e^{iku} du, which are built
 * once by the integration-by-parts recurrence in j. Construction is O(K^2)
 * in the bandwidth K; each query is O(K).
 */
class WindowedMoments {
 public:
  explicit WindowedMoments(const CircleState& state);

  double mean(double phi0) const;
  double variance(double phi0) const;
  double central_moment(int order, double phi0) const;
  std::complex<double> covariance(double phi0) const;
  WindowMoments at(double phi0) const;

  const LzMoments& lz() const { return lz_; }
  int bandwidth() const { return bandwidth_; }

  /// P_k = sum_m conj(c_m) c_{m+k}, for k in [-K, K].
  std::complex<double> density_harmonic(int k) const;

 private:
  // sum_k H_k e^{ik phi0} J_j(k) / 2pi for j = 0..order
  template <std::size_t N>
  std::array<std::complex<double>, N> raw_moments(const std::vector<std::complex<double>>& harmonics,
                                                  double phi0) const;

  int bandwidth_;
  std::vector<std::complex<double>> density_;  // P_k, index k + K
  std::vector<std::complex<double>> current_;  // Q_k = sum_m m conj(c_m) c_{m+k}
  std::vector<std::array<std::complex<double>, kMaxMomentOrder + 1>> window_integrals_;  // J_j(k)
  LzMoments lz_;
};

/// M(phi0), the window-dependent mean of phi.
double mean_phi(const CircleState& state, double phi0);

/// D(phi0), the window-dependent variance of phi.
double variance_phi(const CircleState& state, double phi0);

/// order-th central moment of phi over the window, 1 <= order <= 8.
double central_moment_phi(const CircleState& state, int order, double phi0);

/// (Re G(phi0), Im G(phi0)).
std::complex<double> covariance_lz_phi(const CircleState& state, double phi0);

/// <exp(i k phi)> = sum_m conj(c_m) c_{m-k}.
std::complex<double> expectation_exp_ikphi(const CircleState& state, int k);

TrigMoments trig_moments(const CircleState& state);

LzMoments lz_moments(const CircleState& state);

/// Throws NumericalDomainError when exp(2|m|) overflows for a populated m.
ExpLzMoments exp_2lz_moments(const CircleState& state);

/// Independent route to the same window quantities: panel quadrature of the
/// sampled wavefunction. Used to cross-check the closed-form path.
WindowMoments window_moments_by_quadrature(const CircleState& state, double phi0,
                                           const QuadratureConfig& cfg = {});

}  // namespace ringspread

#endif  // RINGSPREAD_WINDOWED_MOMENTS_HPP
