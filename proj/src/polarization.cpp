#include <oamsim/polarization.hpp>

#include <cmath>

namespace oamsim::polarization {

OutputAmplitudes propagate_output_amplitudes(const PolarizedCoherentInput& in,
                                             const RotationConfig& cfg) {
  const std::complex<double> bp =
      in.beta * std::polar(1.0, in.varphi);  // beta e^{i varphi}
  const std::complex<double> oam = std::polar(1.0, 2.0 * cfg.ell * cfg.phi);
  const double cr = std::cos(2.0 * cfg.phi);
  const double sr = std::sin(2.0 * cfg.phi);

  OutputAmplitudes out;
  out.h = oam * 0.5 * (in.alpha * cr - bp * sr) - 0.5 * in.alpha;
  out.v = oam * 0.5 * (in.alpha * sr + bp * cr) - 0.5 * bp;
  return out;
}

double parity_signal_linear(double nc, const RotationConfig& cfg) {
  if (!(nc >= 0.0)) throw DomainError("parity_signal_linear: nc must be >= 0");
  return std::exp(
      -nc * (1.0 - std::cos(2.0 * cfg.phi) * std::cos(2.0 * cfg.ell * cfg.phi)));
}

double parity_signal_circular(double nc, const RotationConfig& cfg,
                              Handedness handedness) {
  if (!(nc >= 0.0))
    throw DomainError("parity_signal_circular: nc must be >= 0");
  const int ell_signed = handedness == Handedness::right ? cfg.ell : -cfg.ell;
  const double s = std::sin((ell_signed + 1) * cfg.phi);
  return std::exp(-2.0 * nc * s * s);
}

}  // namespace oamsim::polarization
