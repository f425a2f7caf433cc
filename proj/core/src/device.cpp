#include "maser/device.hpp"

#include <cmath>
#include <stdexcept>

namespace maser {

DeviceParams DeviceParams::measured() {
  DeviceParams p;
  p.f_r_ghz = 5.860;
  p.kappa_r_per_us = 0.69;
  p.kappa_r_e_per_us = 0.3;
  p.g_r_mhz = 11.0;
  p.f_a_ghz = 5.715;
  p.kappa_a_per_us = 90.0;
  p.g_a_mhz = 15.5;
  p.f_ge_max_ghz = 5.95;
  p.alpha_mhz = -180.0;
  p.gamma_per_us = 0.0;
  p.gamma_phi_per_us = 0.0;
  return p;
}

DeviceParams DeviceParams::design() {
  DeviceParams p;
  p.f_r_ghz = 6.0;
  p.kappa_r_per_us = 0.31;
  p.kappa_r_e_per_us = 0.31;
  p.g_r_mhz = 6.5;
  p.f_a_ghz = 5.8;
  p.kappa_a_per_us = 138.0;
  p.g_a_mhz = 23.5;
  p.f_ge_max_ghz = 6.5;
  p.alpha_mhz = -200.0;
  p.gamma_per_us = 0.0;
  p.gamma_phi_per_us = 0.0;
  return p;
}

void DeviceParams::validate() const {
  if (kappa_r_per_us < 0 || kappa_a_per_us < 0 || gamma_per_us < 0 ||
      gamma_phi_per_us < 0 || kappa_r_e_per_us < 0) {
    throw std::invalid_argument("device: decay rates must be >= 0");
  }
  if (kappa_r_e_per_us > kappa_r_per_us) {
    throw std::invalid_argument("device: kappa_r_e must not exceed kappa_r");
  }
  if (f_a_ghz >= f_r_ghz) {
    throw std::invalid_argument("device: expected f_a < f_r");
  }
}

void DriveParams::validate() const {
  if (epsilon < 0) throw std::invalid_argument("drive: epsilon must be >= 0");
}

double transmon_frequency(double f_ge_max_ghz, double phi_ratio) {
  const double c = std::cos(M_PI * phi_ratio);
  if (c < 0) {
    throw std::domain_error("transmon_frequency: cos(pi*phi) < 0, outside the model's domain");
  }
  return f_ge_max_ghz * std::sqrt(c);
}

double flux_for_frequency(double f_ge_max_ghz, double f_ge_ghz) {
  if (f_ge_ghz <= 0 || f_ge_ghz > f_ge_max_ghz) {
    throw std::domain_error("flux_for_frequency: need 0 < f_ge <= f_ge_max");
  }
  const double r = f_ge_ghz / f_ge_max_ghz;
  return std::acos(r * r) / M_PI;
}

namespace {

struct BareOperators {
  SparseMatrix b, a_a, a_r;  // embedded annihilation operators
};

BareOperators make_operators(const TruncationConfig& cfg) {
  return {annihilation(Slot::Transmon, cfg), annihilation(Slot::Aux, cfg),
          annihilation(Slot::Reservoir, cfg)};
}

// f_ge n_b + (alpha/2) n_b (n_b - 1) + couplings, shared between the two frames.
SparseMatrix transmon_and_couplings(const DeviceParams& p, double f_ge_ghz,
                                    const BareOperators& ops,
                                    const TruncationConfig& cfg) {
  const SparseMatrix n_b = number_operator(Slot::Transmon, cfg);
  const SparseMatrix id = identity(cfg.dim());
  SparseMatrix h = ghz_to_angular(f_ge_ghz) * n_b;
  h += (ghz_to_angular(p.alpha_mhz * 1e-3) / 2.0) *
       SparseMatrix(n_b * SparseMatrix(n_b - id));
  const SparseMatrix b_dag = ops.b.adjoint();
  h += ghz_to_angular(p.g_r_mhz * 1e-3) *
       SparseMatrix(SparseMatrix(ops.b * ops.a_r.adjoint()) + SparseMatrix(b_dag * ops.a_r));
  h += ghz_to_angular(p.g_a_mhz * 1e-3) *
       SparseMatrix(SparseMatrix(ops.b * ops.a_a.adjoint()) + SparseMatrix(b_dag * ops.a_a));
  return h;
}

}  // namespace

SparseMatrix hamiltonian_lab(const DeviceParams& p, double phi_ratio,
                             const TruncationConfig& cfg) {
  p.validate();
  cfg.validate();
  const auto ops = make_operators(cfg);
  const double f_ge = transmon_frequency(p.f_ge_max_ghz, phi_ratio);
  SparseMatrix h = transmon_and_couplings(p, f_ge, ops, cfg);
  const SparseMatrix id = identity(cfg.dim());
  h += ghz_to_angular(p.f_r_ghz) *
       SparseMatrix(number_operator(Slot::Reservoir, cfg) + SparseMatrix(0.5 * id));
  h += ghz_to_angular(p.f_a_ghz) *
       SparseMatrix(number_operator(Slot::Aux, cfg) + SparseMatrix(0.5 * id));
  h.makeCompressed();
  return h;
}

SparseMatrix hamiltonian_rotating(const DeviceParams& p, const DriveParams& d,
                                  double phi_ratio, const TruncationConfig& cfg) {
  p.validate();
  d.validate();
  cfg.validate();
  const auto ops = make_operators(cfg);
  const double f_ge = transmon_frequency(p.f_ge_max_ghz, phi_ratio);
  SparseMatrix h = transmon_and_couplings(p, f_ge - d.f_p_ghz, ops, cfg);
  h += ghz_to_angular(p.f_r_ghz - d.f_p_ghz) * number_operator(Slot::Reservoir, cfg);
  h += ghz_to_angular(p.f_a_ghz - d.f_p_ghz) * number_operator(Slot::Aux, cfg);
  if (d.epsilon != 0.0) {
    h += (d.epsilon / 2.0) * SparseMatrix(ops.b + SparseMatrix(ops.b.adjoint()));
  }
  h.makeCompressed();
  return h;
}

std::vector<SparseMatrix> collapse_operators(const DeviceParams& p,
                                             const TruncationConfig& cfg) {
  p.validate();
  cfg.validate();
  std::vector<SparseMatrix> ops;
  if (p.kappa_r_per_us > 0) {
    ops.push_back(std::sqrt(p.kappa_r_per_us) * annihilation(Slot::Reservoir, cfg));
  }
  if (p.kappa_a_per_us > 0) {
    ops.push_back(std::sqrt(p.kappa_a_per_us) * annihilation(Slot::Aux, cfg));
  }
  if (p.gamma_per_us > 0) {
    ops.push_back(std::sqrt(p.gamma_per_us) * annihilation(Slot::Transmon, cfg));
  }
  if (p.gamma_phi_per_us > 0) {
    ops.push_back(std::sqrt(p.gamma_phi_per_us) * number_operator(Slot::Transmon, cfg));
  }
  return ops;
}

}  // namespace maser
