#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace maser {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using DenseMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Planck constant, J*s
inline constexpr double kPlanck = 6.62607015e-34;

// Cyclic GHz -> angular frequency in rad/us (the internal unit for all
// Hamiltonian and Liouvillian math; decay rates stay in 1/us).
inline constexpr double ghz_to_angular(double f_ghz) { return kTwoPi * 1e3 * f_ghz; }
inline constexpr double mhz_to_angular(double f_mhz) { return kTwoPi * f_mhz; }
inline constexpr double angular_to_ghz(double w) { return w / (kTwoPi * 1e3); }

}  // namespace maser
