#pragma once

#include <vector>

#include <oamsim/states.hpp>
#include <oamsim/types.hpp>

namespace oamsim::interferometry {

enum class CurveKind { signal, sensitivity };

/// Sweep parameters attached to a sampled curve.
struct CurveMeta {
  double r = 0.0;
  double delta = 0.0;
  int ell = 0;
  double eps_trunc = 0.0;
};

/// A sampled (phi, value) curve. phis are strictly increasing; values are
/// finite except sensitivity samples at stationary points, which carry +inf
/// sentinels.
struct SignalCurve {
  std::vector<double> phis;
  std::vector<double> values;
  CurveKind kind = CurveKind::signal;
  CurveMeta meta;
};

/// Result of a sensitivity minimization over the angular displacement.
struct SensitivityReport {
  double phi_opt;          ///< argmin location (radians)
  double delta_phi_opt;    ///< best sensitivity
  double heisenberg_limit; ///< adopted HL value 1/[2(ell+1) N]
  double difference;       ///< heisenberg_limit - delta_phi_opt
};

/// Scan range for optimal_sensitivity; must cover at least one signal
/// period pi/[2(ell+1)].
struct SearchGrid {
  double phi_min;
  double phi_max;
  int points = 4096;
};

/// Legendre polynomial P_n(x) by upward recurrence. x is clamped to [-1, 1]
/// with 1e-9 slack; beyond that throws DomainError.
double legendre(int n, double x);

/// dP_n/dx. Interior points use n[P_{n-1} - x P_n]/(1 - x^2); near the
/// endpoints the limit n(n+1)/2 (+-1)^{n+1} is used.
double legendre_derivative(int n, double x);

/// Parity expectation sum_n G(n)^2 P_n(-cos[4(ell+1)phi]); lies in [-1, 1].
double parity_expectation(const states::TwinFockState& state,
                          const RotationConfig& cfg);

/// Analytic d<parity>/dphi via the chain rule through the Legendre series.
double parity_derivative(const states::TwinFockState& state,
                         const RotationConfig& cfg);

/// Error-propagation sensitivity sqrt(1 - <P>^2)/|d<P>/dphi|. Returns +inf
/// when the derivative magnitude underflows the 1e-300 guard.
double sensitivity(const states::TwinFockState& state,
                   const RotationConfig& cfg);

/// Adopted Heisenberg limit 1/[2(ell+1) n_mean].
double heisenberg_limit(double n_mean, int ell);

/// Dense grid scan plus golden-section refinement of the sensitivity over
/// phi. Stationary abscissas (where sin[4(ell+1)phi] vanishes) are excluded;
/// throws SearchFailure when no usable sample remains.
SensitivityReport optimal_sensitivity(const states::TwinFockState& state,
                                      int ell, const SearchGrid& grid);

/// As above with the default grid: one signal period, 4096 points.
SensitivityReport optimal_sensitivity(const states::TwinFockState& state,
                                      int ell);

struct ResolutionMetrics {
  double visibility;  ///< (max - min)/(max + min)
  double fwhm;        ///< width of the central peak at half height (radians)
  int peak_count;     ///< local maxima above half height, cyclic
};

/// Computes visibility, FWHM of the peak nearest the range midpoint, and the
/// cyclic peak count. The curve must be of signal kind and should cover a
/// whole number of signal periods, half-open, for the peak count to be
/// meaningful. Throws MetricUndefined on flat curves.
ResolutionMetrics resolution_metrics(const SignalCurve& curve);

/// Samples the parity signal on an inclusive linspace grid.
SignalCurve sample_signal(const states::TwinFockState& state, int ell,
                          double phi_min, double phi_max, int points,
                          CurveMeta meta = {});

/// Samples the sensitivity on an inclusive linspace grid (+inf at
/// stationary points).
SignalCurve sample_sensitivity(const states::TwinFockState& state, int ell,
                               double phi_min, double phi_max, int points,
                               CurveMeta meta = {});

}  // namespace oamsim::interferometry
