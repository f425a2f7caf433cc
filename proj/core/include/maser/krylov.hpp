#pragma once

#include <span>
#include <vector>

#include "maser/types.hpp"

namespace maser {

// Exponential propagator w <- exp(A t) w based on adaptive-step Arnoldi
// approximation (Expokit-style local error control). Works for the stiff,
// non-Hermitian Liouvillians this package produces: after transients decay the
// active subspace is low-dimensional and the steps grow accordingly.
struct KrylovOptions {
  int max_krylov_dim = 30;
  double tol = 1e-9;        // approximate relative accuracy over the whole interval
  double min_step = 1e-12;  // step-size underflow guard, in time units
  double breakdown_tol = 1e-13;
};

// Advance w by time t in place. Throws std::runtime_error on step underflow.
void krylov_propagate(const SparseMatrix& a, Vector& w, double t,
                      const KrylovOptions& opt = {});

// Advance w by time t, returning the sampled functional z^T w(s) (plain dot
// product, no conjugation) at the requested offsets s in (0, t], sorted
// ascending. The samples come from the small Krylov representation inside
// each accepted macro step, so dense sampling is cheap.
std::vector<Complex> krylov_propagate_sampling(const SparseMatrix& a, Vector& w,
                                               double t,
                                               std::span<const double> offsets,
                                               const Vector& z,
                                               const KrylovOptions& opt = {});

}  // namespace maser
