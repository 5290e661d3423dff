#pragma once

#include <oamsim/errors.hpp>

namespace oamsim {

/// Rotation settings of the interferometer arms.
///
/// `ell` is the OAM quantum number carried by the photons (non-negative;
/// opposite-handedness inputs are mapped to -ell at the input side, see
/// polarization::Handedness). `phi` is the angular displacement between the
/// two arms' rotating elements, i.e. the quantity the protocol estimates.
struct RotationConfig {
  int ell;
  double phi;

  RotationConfig(int ell_, double phi_) : ell(ell_), phi(phi_) {
    if (ell_ < 0) throw DomainError("RotationConfig: ell must be >= 0");
  }
};

}  // namespace oamsim
