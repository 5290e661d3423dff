#include <oamsim/states.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace oamsim::states {

namespace {

// Tail-mass majorant for the coefficient family at truncation order n_keep.
//
// Splits (cos d * sv + sin d * b)^2 <= 2 cos^2 d * sv^2 + 2 sin^2 d * b^2 and
// bounds each branch by a geometric series: the squeezed-vacuum tail sums to
// t^{2(N+1)} exactly, the number branch is dominated term-by-term once
// n > sinh^2 r, with ratio q < 1. The result carries an extra factor of two
// as safety margin. Returns +inf while the geometric bound is not yet valid.
double tail_bound_after(int n_keep, double r, double delta) {
  const double t = std::tanh(r);
  const double c = std::cosh(r);
  const double s2 = std::sinh(r) * std::sinh(r);
  const double cd2 = std::cos(delta) * std::cos(delta);
  const double sd2 = std::sin(delta) * std::sin(delta);

  if (static_cast<double>(n_keep) <= s2 + 1.0)
    return std::numeric_limits<double>::infinity();

  const double q = t * t * ((n_keep + 2 - s2) / (n_keep + 1 - s2)) *
                   ((n_keep + 2 - s2) / (n_keep + 1 - s2));
  if (q >= 1.0) return std::numeric_limits<double>::infinity();

  const double vac_tail = std::pow(t, 2.0 * (n_keep + 1));
  const double a_next = std::pow(t, 2.0 * n_keep) * (n_keep + 1 - s2) *
                        (n_keep + 1 - s2) / std::pow(c, 6.0);
  const double num_tail = a_next / (1.0 - q);
  return 2.0 * (2.0 * cd2 * vac_tail + 2.0 * sd2 * num_tail);
}

int choose_n_max(double r, double delta, double eps_trunc, int hard_cap) {
  const double s2 = std::sinh(r) * std::sinh(r);
  int n = std::max(2, static_cast<int>(std::ceil(s2)) + 2);
  for (; n <= hard_cap; ++n) {
    if (tail_bound_after(n, r, delta) < eps_trunc) return n;
  }
  throw TruncationOverflow(
      "tsb_coefficients: tail bound " +
      std::to_string(tail_bound_after(hard_cap, r, delta)) +
      " still above eps_trunc at hard cap n_max = " + std::to_string(hard_cap));
}

}  // namespace

TsbParams::TsbParams(double r_, double delta_) : r(r_), delta(delta_) {
  if (!(r_ >= 0.0)) throw DomainError("TsbParams: r must be >= 0");
  if (!(delta_ >= 0.0 && delta_ <= std::numbers::pi / 2 + 1e-15))
    throw DomainError("TsbParams: delta must lie in [0, pi/2]");
}

TwinFockState::TwinFockState(std::vector<double> coeffs, double tail_bound)
    : coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
  if (coeffs_.empty()) throw DomainError("TwinFockState: empty coefficients");
  double norm2 = 0.0;
  for (double g : coeffs_) norm2 += g * g;
  if (norm2 > 1.0 + 1e-12 || norm2 < 1.0 - tail_bound_)
    throw DomainError("TwinFockState: sum G(n)^2 = " + std::to_string(norm2) +
                      " outside [1 - tail_bound, 1 + 1e-12]");
}

double c00(double r) {
  if (!(r >= 0.0)) throw DomainError("c00: r must be >= 0");
  return std::tanh(r) / std::cosh(r);
}

double c11(double r) {
  if (!(r >= 0.0)) throw DomainError("c11: r must be >= 0");
  // (1 - sinh^2 r)/cosh^3 r, written so large r underflows instead of
  // producing inf/inf.
  const double sech = 1.0 / std::cosh(r);
  const double t = std::tanh(r);
  return sech * sech * sech - t * t * sech;
}

TwinFockState tsb_coefficients(const TsbParams& params, double eps_trunc,
                               int hard_cap) {
  if (!(eps_trunc > 0.0 && eps_trunc < 1.0))
    throw DomainError("tsb_coefficients: eps_trunc must lie in (0, 1)");

  const double r = params.r;
  const double t = std::tanh(r);
  const double c = std::cosh(r);
  const double cd = std::cos(params.delta);
  const double sd = std::sin(params.delta);
  const double k00 = c00(r);
  const double k11 = c11(r);

  const int n_max = choose_n_max(r, params.delta, eps_trunc, hard_cap);
  std::vector<double> g(static_cast<std::size_t>(n_max) + 1, 0.0);

  // n = 0 term of the number branch simplifies to sin(delta) * c00.
  g[0] = cd / c + sd * k00;
  double pw = 1.0;  // (-t)^{n-1} for the current n
  for (int n = 1; n <= n_max; ++n) {
    g[n] = cd * pw * (-t) / c + sd * pw * (n * k11 + t * (n - 1) * k00);
    pw *= -t;
  }
  return TwinFockState(std::move(g), tail_bound_after(n_max, r, params.delta));
}

TwinFockState squeezed_number_coefficients(double r, double eps_trunc,
                                           int hard_cap) {
  if (!(r >= 0.0))
    throw DomainError("squeezed_number_coefficients: r must be >= 0");
  if (!(eps_trunc > 0.0 && eps_trunc < 1.0))
    throw DomainError("squeezed_number_coefficients: eps_trunc in (0, 1)");

  const double t = std::tanh(r);
  const double c = std::cosh(r);
  const double s2 = std::sinh(r) * std::sinh(r);
  const double c3 = c * c * c;
  const double delta = std::numbers::pi / 2;

  const int n_max = choose_n_max(r, delta, eps_trunc, hard_cap);
  std::vector<double> g(static_cast<std::size_t>(n_max) + 1, 0.0);
  g[0] = c00(r);
  double pw = 1.0;  // (-t)^{n-1}
  for (int n = 1; n <= n_max; ++n) {
    g[n] = pw * (n - s2) / c3;
    pw *= -t;
  }
  return TwinFockState(std::move(g), tail_bound_after(n_max, r, delta));
}

double mean_photon_number(const TwinFockState& state) {
  double acc = 0.0;
  const auto& g = state.coeffs();
  for (std::size_t n = 0; n < g.size(); ++n)
    acc += static_cast<double>(n) * g[n] * g[n];
  return 2.0 * acc;
}

}  // namespace oamsim::states
