#include <oamsim/interferometry.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace oamsim::interferometry {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDerivativeGuard = 1e-300;
constexpr double kStationarySine = 1e-12;

double clamp_legendre_arg(double x, const char* who) {
  if (std::abs(x) > 1.0 + 1e-9)
    throw DomainError(std::string(who) + ": |x| = " + std::to_string(std::abs(x)) +
                      " exceeds 1 beyond the clamping slack");
  return std::clamp(x, -1.0, 1.0);
}

// Weighted sums S = sum w_n P_n(x) and D = sum w_n P'_n(x) in one recurrence
// pass. Near |x| = 1 the derivative switches to the endpoint limit to avoid
// the 1/(1 - x^2) blow-up.
struct SeriesSums {
  double value;
  double slope;  // d/dx
};

SeriesSums legendre_series(const std::vector<double>& weights, double x) {
  const bool endpoint = (1.0 - std::abs(x)) < 1e-10;
  const double sign = x < 0.0 ? -1.0 : 1.0;
  const double inv_one_minus_x2 = endpoint ? 0.0 : 1.0 / (1.0 - x * x);

  double p_prev = 1.0;  // P_0
  double p_cur = x;     // P_1
  double value = weights.empty() ? 0.0 : weights[0];
  double slope = 0.0;
  double sign_pow = sign;  // sign^{n+1} for the endpoint limit, n = 1 first

  for (std::size_t n = 1; n < weights.size(); ++n) {
    const double w = weights[n];
    value += w * p_cur;
    if (endpoint) {
      sign_pow *= sign;  // now sign^{n+1}
      slope += w * sign_pow * 0.5 * static_cast<double>(n) * (n + 1.0);
    } else {
      slope += w * static_cast<double>(n) * (p_prev - x * p_cur) *
               inv_one_minus_x2;
    }
    const double p_next =
        ((2.0 * n + 1.0) * x * p_cur - static_cast<double>(n) * p_prev) /
        (n + 1.0);
    p_prev = p_cur;
    p_cur = p_next;
  }
  return {value, slope};
}

std::vector<double> squared_weights(const states::TwinFockState& state) {
  const auto& g = state.coeffs();
  std::vector<double> w(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) w[n] = g[n] * g[n];
  return w;
}

struct SignalSlope {
  double signal;
  double dphi;  // d signal / d phi
};

SignalSlope eval_signal_and_slope(const std::vector<double>& weights,
                                  const RotationConfig& cfg) {
  const double gain = 4.0 * (cfg.ell + 1.0);
  const double theta = gain * cfg.phi;
  const double x = std::clamp(-std::cos(theta), -1.0, 1.0);
  const SeriesSums s = legendre_series(weights, x);
  return {s.value, s.slope * std::sin(theta) * gain};
}

}  // namespace

double legendre(int n, double x) {
  if (n < 0) throw DomainError("legendre: order must be >= 0");
  x = clamp_legendre_arg(x, "legendre");
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p_cur = x;
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p_cur - k * p_prev) / (k + 1.0);
    p_prev = p_cur;
    p_cur = p_next;
  }
  return p_cur;
}

double legendre_derivative(int n, double x) {
  if (n < 0) throw DomainError("legendre_derivative: order must be >= 0");
  x = clamp_legendre_arg(x, "legendre_derivative");
  if (n == 0) return 0.0;
  if ((1.0 - std::abs(x)) < 1e-10) {
    const double sign = x < 0.0 ? -1.0 : 1.0;
    const double limit = 0.5 * n * (n + 1.0);
    return limit * std::pow(sign, n + 1);
  }
  const double pn = legendre(n, x);
  const double pn1 = legendre(n - 1, x);
  return n * (pn1 - x * pn) / (1.0 - x * x);
}

double parity_expectation(const states::TwinFockState& state,
                          const RotationConfig& cfg) {
  return eval_signal_and_slope(squared_weights(state), cfg).signal;
}

double parity_derivative(const states::TwinFockState& state,
                         const RotationConfig& cfg) {
  return eval_signal_and_slope(squared_weights(state), cfg).dphi;
}

double sensitivity(const states::TwinFockState& state,
                   const RotationConfig& cfg) {
  const SignalSlope s = eval_signal_and_slope(squared_weights(state), cfg);
  if (std::abs(s.dphi) < kDerivativeGuard) return kInf;
  return std::sqrt(std::max(0.0, 1.0 - s.signal * s.signal)) /
         std::abs(s.dphi);
}

double heisenberg_limit(double n_mean, int ell) {
  if (!(n_mean > 0.0))
    throw DomainError("heisenberg_limit: n_mean must be > 0");
  if (ell < 0) throw DomainError("heisenberg_limit: ell must be >= 0");
  return 1.0 / (2.0 * (ell + 1.0) * n_mean);
}

SensitivityReport optimal_sensitivity(const states::TwinFockState& state,
                                      int ell, const SearchGrid& grid) {
  if (ell < 0) throw DomainError("optimal_sensitivity: ell must be >= 0");
  const double period = std::numbers::pi / (2.0 * (ell + 1.0));
  if (!(grid.phi_max - grid.phi_min >= period - 1e-12))
    throw DomainError(
        "optimal_sensitivity: grid must cover at least one signal period");
  if (grid.points < 16)
    throw DomainError("optimal_sensitivity: grid needs at least 16 points");

  const auto weights = squared_weights(state);
  const double gain = 4.0 * (ell + 1.0);
  const auto eval = [&](double phi) -> double {
    if (std::abs(std::sin(gain * phi)) < kStationarySine) return kInf;
    const SignalSlope s =
        eval_signal_and_slope(weights, RotationConfig(ell, phi));
    if (std::abs(s.dphi) < kDerivativeGuard) return kInf;
    return std::sqrt(std::max(0.0, 1.0 - s.signal * s.signal)) /
           std::abs(s.dphi);
  };

  const double step = (grid.phi_max - grid.phi_min) / (grid.points - 1);
  double best_phi = 0.0;
  double best_val = kInf;
  for (int i = 0; i < grid.points; ++i) {
    const double phi = grid.phi_min + i * step;
    const double v = eval(phi);
    if (v < best_val) {
      best_val = v;
      best_phi = phi;
    }
  }
  if (!std::isfinite(best_val))
    throw SearchFailure(
        "optimal_sensitivity: every grid sample is a stationary-point "
        "sentinel");

  // Golden-section refinement on the bracket around the best grid sample;
  // non-finite probes are treated as +inf and repel the search.
  double a = best_phi - step;
  double b = best_phi + step;
  constexpr double kGolden = 0.6180339887498949;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = eval(d);
    }
    const double probe = fc < fd ? fc : fd;
    const double probe_phi = fc < fd ? c : d;
    if (probe < best_val) {
      best_val = probe;
      best_phi = probe_phi;
    }
  }

  const double n_mean = states::mean_photon_number(state);
  const double hl = heisenberg_limit(n_mean, ell);
  return {best_phi, best_val, hl, hl - best_val};
}

SensitivityReport optimal_sensitivity(const states::TwinFockState& state,
                                      int ell) {
  if (ell < 0) throw DomainError("optimal_sensitivity: ell must be >= 0");
  const double period = std::numbers::pi / (2.0 * (ell + 1.0));
  return optimal_sensitivity(state, ell, SearchGrid{0.0, period, 4096});
}

namespace {

// Run-length compressed view of the sampled values, treated as a ring.
struct Run {
  double value;
  std::size_t first;  // index of the first sample in the run
};

std::vector<Run> ring_runs(const std::vector<double>& v) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (runs.empty() || runs.back().value != v[i]) runs.push_back({v[i], i});
  }
  if (runs.size() > 1 && runs.front().value == runs.back().value)
    runs.pop_back();  // wrap-around merge
  return runs;
}

}  // namespace

ResolutionMetrics resolution_metrics(const SignalCurve& curve) {
  if (curve.kind != CurveKind::signal)
    throw MetricUndefined("resolution_metrics: curve must be of signal kind");
  const std::size_t m = curve.values.size();
  if (m < 8 || curve.phis.size() != m)
    throw MetricUndefined("resolution_metrics: need at least 8 samples");
  for (std::size_t i = 1; i < m; ++i)
    if (!(curve.phis[i] > curve.phis[i - 1]))
      throw MetricUndefined("resolution_metrics: phis must strictly increase");

  const double vmax = *std::max_element(curve.values.begin(), curve.values.end());
  const double vmin = *std::min_element(curve.values.begin(), curve.values.end());
  if (!(vmax > vmin)) throw MetricUndefined("resolution_metrics: flat curve");
  if (vmax + vmin == 0.0)
    throw MetricUndefined("resolution_metrics: max + min vanishes");

  const double half = vmin + 0.5 * (vmax - vmin);
  const double visibility = (vmax - vmin) / (vmax + vmin);

  // Cyclic plateau-aware peak count above the half level.
  const auto runs = ring_runs(curve.values);
  int peaks = 0;
  const std::size_t nr = runs.size();
  for (std::size_t i = 0; i < nr; ++i) {
    const double prev = runs[(i + nr - 1) % nr].value;
    const double next = runs[(i + 1) % nr].value;
    if (runs[i].value > half && runs[i].value > prev && runs[i].value > next)
      ++peaks;
  }

  // FWHM of the peak nearest the range midpoint.
  const double mid = 0.5 * (curve.phis.front() + curve.phis.back());
  std::size_t peak_idx = 0;
  double peak_dist = kInf;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (curve.values[i] > half && curve.values[i] >= curve.values[i - 1] &&
        curve.values[i] >= curve.values[i + 1]) {
      const double dist = std::abs(curve.phis[i] - mid);
      if (dist < peak_dist) {
        peak_dist = dist;
        peak_idx = i;
      }
    }
  }
  if (!std::isfinite(peak_dist))
    throw MetricUndefined("resolution_metrics: no interior peak above half");

  const auto cross = [&](std::size_t inside, std::size_t outside) {
    const double f = (curve.values[inside] - half) /
                     (curve.values[inside] - curve.values[outside]);
    return curve.phis[inside] +
           f * (curve.phis[outside] - curve.phis[inside]);
  };
  std::size_t lo = peak_idx;
  while (lo > 0 && curve.values[lo - 1] > half) --lo;
  std::size_t hi = peak_idx;
  while (hi + 1 < m && curve.values[hi + 1] > half) ++hi;
  if (lo == 0 || hi + 1 == m)
    throw MetricUndefined(
        "resolution_metrics: central peak does not fall below half level "
        "inside the sampled range");
  const double left = cross(lo, lo - 1);
  const double right = cross(hi, hi + 1);
  return {visibility, right - left, peaks};
}

SignalCurve sample_signal(const states::TwinFockState& state, int ell,
                          double phi_min, double phi_max, int points,
                          CurveMeta meta) {
  if (points < 2 || !(phi_max > phi_min))
    throw DomainError("sample_signal: need an increasing range of >= 2 points");
  const auto weights = squared_weights(state);
  SignalCurve curve;
  curve.kind = CurveKind::signal;
  curve.meta = meta;
  curve.phis.resize(points);
  curve.values.resize(points);
  const double step = (phi_max - phi_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double phi = phi_min + i * step;
    curve.phis[i] = phi;
    curve.values[i] =
        eval_signal_and_slope(weights, RotationConfig(ell, phi)).signal;
  }
  return curve;
}

SignalCurve sample_sensitivity(const states::TwinFockState& state, int ell,
                               double phi_min, double phi_max, int points,
                               CurveMeta meta) {
  if (points < 2 || !(phi_max > phi_min))
    throw DomainError(
        "sample_sensitivity: need an increasing range of >= 2 points");
  SignalCurve curve;
  curve.kind = CurveKind::sensitivity;
  curve.meta = meta;
  curve.phis.resize(points);
  curve.values.resize(points);
  const double step = (phi_max - phi_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double phi = phi_min + i * step;
    curve.phis[i] = phi;
    curve.values[i] = sensitivity(state, RotationConfig(ell, phi));
  }
  return curve;
}

}  // namespace oamsim::interferometry
