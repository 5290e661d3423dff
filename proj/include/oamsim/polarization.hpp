#pragma once

#include <complex>

#include <oamsim/types.hpp>

namespace oamsim::polarization {

/// Polarized two-mode coherent input |alpha>_H |beta e^{i varphi}>_V on the
/// bright port; the other port carries vacuum.
struct PolarizedCoherentInput {
  std::complex<double> alpha;  ///< horizontal-mode amplitude
  std::complex<double> beta;   ///< vertical-mode amplitude
  double varphi = 0.0;         ///< inter-mode phase (radians)

  /// Total mean photon number |alpha|^2 + |beta|^2.
  double photon_number() const { return std::norm(alpha) + std::norm(beta); }
};

/// Circular-polarization handedness. `right` is the varphi = -pi/2 case the
/// closed forms are written for; `left` (varphi = +pi/2) is equivalent to
/// flipping the sign of ell at the input.
enum class Handedness { right, left };

/// Path-A output amplitudes of the rotated interferometer.
struct OutputAmplitudes {
  std::complex<double> h;
  std::complex<double> v;
};

/// Propagates the coherent input through beam splitter, rotation devices
/// (OAM phase 2*ell*phi plus polarization rotation by 2*phi on path A), and
/// the recombining beam splitter; returns the path-A amplitudes.
OutputAmplitudes propagate_output_amplitudes(const PolarizedCoherentInput& in,
                                             const RotationConfig& cfg);

/// Parity signal for a linearly polarized input of mean photon number nc:
/// exp{-nc [1 - cos(2 phi) cos(2 ell phi)]}.
double parity_signal_linear(double nc, const RotationConfig& cfg);

/// Parity signal for a circularly polarized input of mean photon number nc:
/// exp{-2 nc sin^2[(ell + 1) phi]}, with ell -> -ell for left handedness.
double parity_signal_circular(double nc, const RotationConfig& cfg,
                              Handedness handedness = Handedness::right);

}  // namespace oamsim::polarization
