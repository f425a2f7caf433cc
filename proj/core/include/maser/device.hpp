#pragma once

#include <optional>
#include <vector>

#include "maser/fock.hpp"
#include "maser/types.hpp"

namespace maser {

// Physical parameters of the maser device. Frequencies are cyclic GHz,
// couplings and anharmonicity cyclic MHz, decay rates 1/us, exactly as they
// are usually quoted for such devices. All Hamiltonians built from these are
// converted to angular rad/us internally.
struct DeviceParams {
  double f_r_ghz = 0.0;        // reservoir cavity frequency
  double kappa_r_per_us = 0.0;  // reservoir total energy decay rate
  double kappa_r_e_per_us = 0.0;  // reservoir decay to the feedline
  double g_r_mhz = 0.0;        // reservoir-transmon coupling, g_r/2pi
  double f_a_ghz = 0.0;        // auxiliary cavity frequency
  double kappa_a_per_us = 0.0;  // auxiliary total decay rate
  double g_a_mhz = 0.0;        // auxiliary-transmon coupling, g_a/2pi
  double f_ge_max_ghz = 0.0;   // zero-flux transmon frequency
  double alpha_mhz = 0.0;      // transmon anharmonicity, stored negative
  double gamma_per_us = 0.0;   // transmon relaxation (not measured; default 0)
  double gamma_phi_per_us = 0.0;  // transmon pure dephasing (default 0)

  static DeviceParams measured();
  static DeviceParams design();

  void validate() const;  // throws std::invalid_argument on bad rates/layout
};

// Coherent two-photon pump applied to the transmon charge line.
struct DriveParams {
  double f_p_ghz = 0.0;   // pump frequency
  double epsilon = 0.0;   // drive amplitude, rad/us
  std::optional<double> power_dbm;  // source power, mapped to epsilon by the calibration map

  void validate() const;
};

// Flux dependence of the transmon frequency,
// f_ge(phi) = f_ge_max * sqrt(cos(pi * phi)), phi = Phi_e / Phi_0.
// Throws std::domain_error when cos(pi*phi) < 0.
double transmon_frequency(double f_ge_max_ghz, double phi_ratio);

// Inverse of transmon_frequency on phi in [0, 0.5). Requires 0 < f_ge <= f_ge_max.
double flux_for_frequency(double f_ge_max_ghz, double f_ge_ghz);

// Lab-frame Hamiltonian in rad/us, including the zero-point 1/2 terms of the
// two cavities.
SparseMatrix hamiltonian_lab(const DeviceParams& p, double phi_ratio,
                             const TruncationConfig& cfg);

// Frame co-rotating with the pump at f_p for all three subsystems. Detunings
// on the diagonal, couplings unchanged, drive term (epsilon/2)(b + b^dag),
// zero-point offsets dropped.
SparseMatrix hamiltonian_rotating(const DeviceParams& p, const DriveParams& d,
                                  double phi_ratio, const TruncationConfig& cfg);

// Collapse operators [sqrt(kappa_r) a_r, sqrt(kappa_a) a_a, sqrt(gamma) b,
// sqrt(gamma_phi) b^dag b], embedded into the full space; zero-rate operators
// are omitted. Throws on negative rates.
std::vector<SparseMatrix> collapse_operators(const DeviceParams& p,
                                             const TruncationConfig& cfg);

}  // namespace maser
