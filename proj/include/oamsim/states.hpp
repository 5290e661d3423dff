#pragma once

#include <vector>

#include <oamsim/errors.hpp>

namespace oamsim::states {

/// Parameters of the tunable squeezed Bell family: two-mode squeezing of
/// cos(delta)|0,0> + sin(delta)|1,1>.
struct TsbParams {
  double r;      ///< squeezing factor, >= 0
  double delta;  ///< tunable factor, radians in [0, pi/2]

  TsbParams(double r_, double delta_);
};

/// A state expanded over the diagonal twin-Fock basis |n,n>, with real
/// coefficients G(0..n_max) and an upper bound on the discarded tail mass.
///
/// Invariant: sum of G(n)^2 lies in [1 - tail_bound, 1 + 1e-12].
class TwinFockState {
 public:
  TwinFockState(std::vector<double> coeffs, double tail_bound);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : 0.0;
  }
  double tail_bound() const { return tail_bound_; }

 private:
  std::vector<double> coeffs_;
  double tail_bound_;
};

/// Overlap <0,0|S(xi)|1,1> = tanh(r)/cosh(r).
double c00(double r);

/// Overlap <1,1|S(xi)|1,1> = (1 - sinh^2 r)/cosh^3 r.
double c11(double r);

/// Twin-Fock expansion of the tunable squeezed Bell state.
///
/// G(n) combines the squeezed-vacuum branch cos(delta)(-tanh r)^n / cosh r
/// with the squeezed-number branch sin(delta)(-tanh r)^{n-1}
/// [n c11 + tanh(r)(n-1) c00]. The n = 0 term of the number branch is
/// simplified algebraically to sin(delta) c00 so no negative power of a
/// possibly-zero base is ever formed.
///
/// n_max is chosen adaptively so the bounded tail mass stays below
/// eps_trunc; throws TruncationOverflow if that requires more than
/// hard_cap coefficients.
TwinFockState tsb_coefficients(const TsbParams& params, double eps_trunc,
                               int hard_cap = 4096);

/// Twin-Fock expansion of the two-mode squeezed number state,
/// G(n) = (-tanh r)^{n-1} (n - sinh^2 r)/cosh^3 r. Agrees with
/// tsb_coefficients at delta = pi/2 elementwise to 1e-14.
TwinFockState squeezed_number_coefficients(double r, double eps_trunc,
                                           int hard_cap = 4096);

/// Total mean photon number 2 sum_n n G(n)^2 over both modes.
double mean_photon_number(const TwinFockState& state);

}  // namespace oamsim::states
